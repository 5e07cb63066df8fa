#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/factorize.hpp"

namespace hurwitz::cli {

enum class ExperimentFamily { simple_splitting, arbitrary_splitting, kmixed };

ExperimentFamily parse_family(std::string_view name);
std::string_view to_string(ExperimentFamily f);

struct ExperimentRow {
  int m = 0;
  ExperimentFamily family = ExperimentFamily::arbitrary_splitting;
  std::optional<std::uint64_t> count;  // empty when the row hit a resource limit
  std::optional<double> log_count;     // empty for a zero or missing count
  double reference_curve = 0;          // m log m, 2m log m or 6m log m
  std::int64_t runtime_ms = 0;
  std::string note;  // "truncated: ..." or "zero count"
};

// Lower-bound quantity per m:
//  simple_splitting: min over s of the sum over the m! block orders of the chain's fibre at splitting s;
//  arbitrary_splitting: min over all splittings of N(phi) for the standard universal cover;
//  kmixed: min over all splittings of N_k(phi) for the k-mixed build from lambda' = mu' = (2,1).
// Stops after the first row that exceeds a resource limit.
std::vector<ExperimentRow> run_experiment(ExperimentFamily family, int m_max, const SearchOptions& options);

}  // namespace hurwitz::cli
