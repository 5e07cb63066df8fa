#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

enum class Variant { complex, monotone, real, real_monotone, real_kmixed };

std::string_view to_string(Variant v);
// Accepts "real-monotone" and "real_monotone" spellings.
Variant parse_variant(std::string_view name);
bool is_real(Variant v);

// Entries are +1 / -1.
class SignSequence {
public:
  SignSequence() = default;
  explicit SignSequence(std::vector<int> entries);

  // "++-+"
  static SignSequence parse(std::string_view text);
  // s leading +1 entries followed by r-s entries -1.
  static SignSequence simple(int r, int s);
  // All 2^r sequences in lexicographic order with + < -.
  static std::vector<SignSequence> all(int r);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  int positives() const;
  bool is_simple() const;
  std::string str() const;

  // Lexicographic with + < -.
  bool operator<(const SignSequence& other) const;
  bool operator==(const SignSequence& other) const = default;

private:
  std::vector<int> entries_;
};

struct FactorizationSpec {
  int genus = 0;
  Partition lambda;
  Partition mu;
  Variant variant = Variant::complex;
  SignSequence signs;  // required for real variants
  int k = 0;           // required for real_kmixed

  int degree() const { return lambda.weight(); }
  int r() const;
  // Throws InvalidInput on any inconsistency.
  void validate() const;
  std::string str() const;
};

using Transposition = std::pair<int, int>;  // first < second

struct Factorization {
  std::optional<Permutation> gamma;
  Permutation sigma1;
  std::vector<Transposition> taus;
  Permutation sigma2;

  auto operator<=>(const Factorization&) const = default;
};

// l(lambda) + l(mu) + 2g - 2; throws InvalidInput when not positive or the weights differ.
int r_length(int g, const Partition& lambda, const Partition& mu);

struct SearchLimits {
  int max_degree = 8;
  int max_r = 10;
};

struct SearchOptions {
  SearchLimits limits;
  int threads = 0;  // 0 = hardware concurrency
  // Count one sigma_1 per class and scale by the class size where conjugation invariance allows it.
  bool use_class_symmetry = true;
  // When non-empty, pi_j must have cycle type guide[j] for j = 0..r (pruning only).
  std::vector<Partition> cycle_type_guide;
};

// (gamma_1, ..., gamma_r) of the sign recursion.
std::vector<Permutation> gamma_sequence(const Factorization& f, const SignSequence& signs);

// Partial products pi_0 = sigma_1, pi_i = tau_i o pi_{i-1}.
std::vector<Permutation> partial_products(const Factorization& f);

// Every factorization of the family exactly once, ordered by (sigma_1, gamma, taus).
std::vector<Factorization> enumerate(const FactorizationSpec& spec, const SearchOptions& options = {});
std::vector<Factorization> enumerate_with_fixed_start(const FactorizationSpec& spec, const Permutation& sigma1,
                                                      const SearchOptions& options = {});

std::uint64_t count(const FactorizationSpec& spec, const SearchOptions& options = {});
std::uint64_t count_with_fixed_start(const FactorizationSpec& spec, const Permutation& sigma1,
                                     const SearchOptions& options = {});

// Checks every defining condition of the family directly, with no pruning logic shared with the search.
bool is_factorization_of(const Factorization& f, const FactorizationSpec& spec);

enum class InfimumMode { simple, arbitrary };

struct InfimumResult {
  std::uint64_t value = 0;
  SignSequence witness;
  std::vector<std::pair<SignSequence, std::uint64_t>> table;
};

// Minimum real monotone (or k-mixed when k is given) count over the simple or all sign sequences.
InfimumResult infimum_number(int g, const Partition& lambda, const Partition& mu, InfimumMode mode,
                             std::optional<int> k = std::nullopt, const SearchOptions& options = {});

// First index i (1-based) breaking the star condition, if any.
std::optional<int> star_violation(const Factorization& f);
bool check_star_condition(const Factorization& f);

// Coordinate-wise conjugation by the transposition (x y).
Factorization conjugate(const Factorization& f, int x, int y);
bool is_monotone(const Factorization& f, int prefix = -1);

// Staged conjugation to a factorization with weakly increasing b-sequence.
// Throws InvalidInput naming the index that breaks the star condition, InvariantViolation if the result is not monotone.
Factorization monotonize(const Factorization& f);

}  // namespace hurwitz
