#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hurwitz/factorize.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

using Rational = boost::rational<long long>;

// Vertex slot 0 stands for the left boundary in `from` and the right boundary in `to`.
inline constexpr int kBoundary = 0;

struct Edge {
  int from = kBoundary;  // 0 = left end, else inner vertex 1..r
  int to = kBoundary;    // 0 = right end, else inner vertex 1..r
  int weight = 1;

  bool is_left_end() const { return from == kBoundary; }
  bool is_right_end() const { return to == kBoundary; }
  bool is_end() const { return is_left_end() || is_right_end(); }
  bool is_inner() const { return !is_end(); }

  auto operator<=>(const Edge&) const = default;
};

// Monodromy graph: inner vertices 1..r in branch-point order, edges oriented left to right.
struct TropicalCover {
  int r = 0;
  std::vector<Edge> edges;

  Partition left_weights() const;
  Partition right_weights() const;
  // First Betti number; meaningful when the graph is connected.
  int genus() const;
  bool connected() const;
  // Sum of weights over the slab between vertex j and j+1, j = 0..r.
  std::vector<int> slab_degrees() const;
  std::vector<int> incident(int v) const;
};

enum class EdgeColour : std::uint8_t { black, red, blue, dotted };

std::string_view to_string(EdgeColour c);

// Two parallel inner edges, or two ends at one inner vertex, of equal weight.
struct SymmetricPair {
  int first = 0;  // edge indices, first < second
  int second = 0;
  bool cycle = false;
  int weight = 0;

  bool odd() const { return weight % 2 != 0; }
};

struct SymmetrySets {
  std::vector<SymmetricPair> pairs;  // CF; the cycle entries form C

  int cycle_count() const;
  int fork_count() const;
};

struct Colouring {
  std::vector<int> i_rho;                // indices into SymmetrySets::pairs, ascending
  std::vector<EdgeColour> edge_colours;  // one per edge of the cover

  auto operator<=>(const Colouring&) const = default;
};

struct RealTropicalCover {
  TropicalCover cover;
  Colouring colouring;
};

// Sorted (from, to, weight, colour) tuples; equal iff isomorphic respecting vertex order.
struct CanonicalForm {
  std::vector<std::array<int, 4>> items;

  std::string str() const;
  auto operator<=>(const CanonicalForm&) const = default;
};

// Throws InvalidInput on dangling vertex references or reversed edges.
void check_structure(const TropicalCover& c);
bool validate_cover(const TropicalCover& c, int g, const Partition& lambda, const Partition& mu);

SymmetrySets symmetry_sets(const TropicalCover& c);

// One canonical cover per isomorphism class, sorted by canonical form.
std::vector<TropicalCover> enumerate_covers(int g, const Partition& lambda, const Partition& mu,
                                            const SearchLimits& limits = {});

// Even edges outside I_rho grouped by shared inner vertices; edge indices per component.
std::vector<std::vector<int>> even_components(const TropicalCover& c, const SymmetrySets& sym,
                                              const std::vector<int>& i_rho);

std::vector<Colouring> enumerate_colourings(const TropicalCover& c);

// Throws InvariantViolation for a vertex outside the sign table.
SignSequence vertex_splitting(const RealTropicalCover& rc);
// Throws InvariantViolation if dotted edges are not exactly the I_rho pairs or a component is two-coloured.
void check_colouring(const RealTropicalCover& rc);

Rational real_multiplicity(const RealTropicalCover& rc);

CanonicalForm canonicalize(const TropicalCover& c);
CanonicalForm canonicalize(const RealTropicalCover& rc);
// Rebuilds a cover from its canonical form.
TropicalCover from_canonical(const CanonicalForm& form, int r);
RealTropicalCover real_from_canonical(const CanonicalForm& form, int r);

// Reads the CanonicalForm::str() text "[L->1 2][1->R 2]"; colours are ignored, r is the largest vertex.
TropicalCover parse_cover(std::string_view text);

std::string to_dot(const TropicalCover& c, const Colouring* colouring = nullptr);

}  // namespace hurwitz
