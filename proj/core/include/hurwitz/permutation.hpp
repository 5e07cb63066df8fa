#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#ifndef HURWITZ_MAX_DEGREE
#define HURWITZ_MAX_DEGREE 16
#endif

namespace hurwitz {

inline constexpr int kMaxDegree = HURWITZ_MAX_DEGREE;
static_assert(kMaxDegree >= 1 && kMaxDegree <= 32, "point sets are packed into 32-bit masks");

// Weakly decreasing list of positive parts.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // "3,1" or "1,3"; parts are sorted on input.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  // "3,1"
  std::string str() const;

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

// Bijection of {1..d}. Points are 1-based in the interface, images stored 0-based.
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(int degree);
  // images[i] is the image of point i+1, 1-based.
  static Permutation from_images(const std::vector<int>& images);
  static Permutation transposition(int degree, int a, int b);
  // Cycle notation "(1)(2 3 4)" or "(234)" for single-digit points; omitted points are fixed.
  // degree 0 infers the degree from the largest point mentioned.
  static Permutation parse(std::string_view text, int degree = 0);

  int degree() const { return degree_; }
  int operator()(int x) const { return map_[x - 1] + 1; }
  bool is_identity() const;
  bool is_involution() const;

  // In place: *this <- (a b) o *this.
  void left_multiply(int a, int b);
  // Whether a and b lie in one cycle.
  bool same_cycle(int a, int b) const;
  int cycle_count() const;
  // Point mask of the cycle through x (bit x-1).
  std::uint32_t cycle_mask(int x) const;

  // Canonical: each cycle starts at its minimum, cycles sorted by minimum, fixed points included.
  std::vector<std::vector<int>> cycles() const;
  std::string str() const;
  std::vector<int> images() const;

  std::size_t hash() const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::array<std::uint8_t, kMaxDegree> map_{};
  std::uint8_t degree_ = 0;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Partition cycle_type(const Permutation& p);

bool is_transitive(const std::vector<Permutation>& gens, int d);

struct InvertedCycle {
  int cycle = 0;                  // index into InvolutionAction::cycles
  std::vector<int> fixed_points;  // 1 for odd cycles, 2 or 0 for even cycles
  // Present iff no fixed point: two arcs of l/2 consecutive points, gamma maps one onto the other.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> exchanged_halves;
};

struct InvolutionAction {
  std::vector<std::vector<int>> cycles;  // canonical cycles of sigma
  std::vector<std::pair<int, int>> exchanged_pairs;
  std::vector<InvertedCycle> inverted;
};

// Requires gamma^2 = id and gamma o sigma o gamma = sigma^-1.
InvolutionAction classify_involution_action(const Permutation& gamma, const Permutation& sigma);
// gamma o sigma; same preconditions.
Permutation shift_involution(const Permutation& gamma, const Permutation& sigma);

// gamma o sigma o gamma == sigma^-1, without the involution check.
bool inverts(const Permutation& gamma, const Permutation& sigma);

std::vector<Permutation> all_permutations(int d);
std::vector<Permutation> permutations_of_type(const Partition& type);
std::vector<Permutation> involutions(int d);
// Involutions gamma with gamma o sigma o gamma = sigma^-1, ascending.
std::vector<Permutation> inverting_involutions(const Permutation& sigma);

// Canonical representative: cycles filled with consecutive points in part order.
Permutation canonical_of_type(const Partition& type);

std::uint64_t factorial(int n);

}  // namespace hurwitz

template <>
struct std::hash<hurwitz::Permutation> {
  std::size_t operator()(const hurwitz::Permutation& p) const noexcept { return p.hash(); }
};
