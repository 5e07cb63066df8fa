#include "experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "hurwitz/bridge.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/zigzag.hpp"

namespace hurwitz::cli {

ExperimentFamily parse_family(std::string_view name) {
  if (name == "simple-splitting" || name == "simple") return ExperimentFamily::simple_splitting;
  if (name == "arbitrary-splitting" || name == "arbitrary") return ExperimentFamily::arbitrary_splitting;
  if (name == "kmixed" || name == "k-mixed") return ExperimentFamily::kmixed;
  throw InvalidInput("unknown experiment family: " + std::string(name));
}

std::string_view to_string(ExperimentFamily f) {
  switch (f) {
    case ExperimentFamily::simple_splitting: return "simple-splitting";
    case ExperimentFamily::arbitrary_splitting: return "arbitrary-splitting";
    case ExperimentFamily::kmixed: return "kmixed";
  }
  return "?";
}

namespace {

std::uint64_t chain_bound(int m, const SearchOptions& options) {
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 1);
  const int r = 4 * m - 2;
  std::vector<std::uint64_t> per_s(r + 1, 0);
  do {
    const auto types = chain_types_for_order(order);
    for (int s = 0; s <= r; ++s) {
      const auto cover = build_component_chain(m, types, order, s);
      const auto want = SignSequence::simple(cover.r, s);
      for (const auto& col : enumerate_colourings(cover)) {
        const RealTropicalCover rc{cover, col};
        if (vertex_splitting(rc) == want) per_s[s] += fibre_count(rc, 0, Variant::real_monotone, 0, options);
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return *std::min_element(per_s.begin(), per_s.end());
}

// Sweeps over all 2^r sign sequences, so the r cap is enforced before any counting starts.
void check_sweep(const TropicalCover& cover, const SearchOptions& options) {
  if (cover.r > options.limits.max_r) {
    throw ResourceLimit("r = " + std::to_string(cover.r) + " exceeds limit " + std::to_string(options.limits.max_r));
  }
}

std::uint64_t quantity(ExperimentFamily family, int m, const SearchOptions& options) {
  switch (family) {
    case ExperimentFamily::simple_splitting:
      if (4 * m - 2 > options.limits.max_r) {
        throw ResourceLimit("r = " + std::to_string(4 * m - 2) + " exceeds limit " + std::to_string(options.limits.max_r));
      }
      return chain_bound(m, options);
    case ExperimentFamily::arbitrary_splitting: {
      const auto cover = build_standard_universal(m, 0);
      check_sweep(cover, options);
      return n_numbers(cover, 0, SplittingRange::per_sequence, std::nullopt, options).minimum;
    }
    case ExperimentFamily::kmixed: {
      const Partition p({2, 1});
      const auto cover = build_kmixed_cover(p, p, p, p, 0, m);
      check_sweep(cover, options);
      const int k = p.length() + p.length() - 2;
      return n_numbers(cover, 0, SplittingRange::per_sequence, k, options).minimum;
    }
  }
  return 0;
}

double reference(ExperimentFamily family, int m) {
  const double base = m * std::log(static_cast<double>(m));
  switch (family) {
    case ExperimentFamily::simple_splitting: return 2 * base;
    case ExperimentFamily::arbitrary_splitting: return base;
    case ExperimentFamily::kmixed: return 6 * base;
  }
  return base;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(ExperimentFamily family, int m_max, const SearchOptions& options) {
  if (m_max < 1) throw InvalidInput("m must be at least 1");
  std::vector<ExperimentRow> rows;
  for (int m = 1; m <= m_max; ++m) {
    ExperimentRow row;
    row.m = m;
    row.family = family;
    row.reference_curve = reference(family, m);
    const auto start = std::chrono::steady_clock::now();
    bool stop = false;
    try {
      row.count = quantity(family, m, options);
      if (*row.count > 0) {
        row.log_count = std::log(static_cast<double>(*row.count));
      } else {
        row.note = "zero count";
      }
    } catch (const ResourceLimit& e) {
      row.note = std::string("truncated: ") + e.what();
      stop = true;
    }
    row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(std::move(row));
    if (stop) break;
  }
  return rows;
}

}  // namespace hurwitz::cli
