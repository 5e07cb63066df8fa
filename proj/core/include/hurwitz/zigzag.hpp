#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/bridge.hpp"
#include "hurwitz/tropical.hpp"

namespace hurwitz {

// lambda = (even, odd_paired^2, odd_distinct).
struct TailDecomposition {
  Partition even;
  Partition odd_paired;
  Partition odd_distinct;

  // 0 when there is no even part.
  int even_max() const;
  // Number of pairs of ones.
  int ones_pairs() const;
};

TailDecomposition tail_decomposition(const Partition& lambda);

struct Tail {
  int attachment = 0;        // inner vertex on the string
  int edge = 0;              // edge index adjacent to the string
  int weight = 0;
  bool in_tail = false;      // lies to the left of the attachment
  bool bent = false;         // the attachment is a bent vertex
  bool fork = false;         // ends in a symmetric odd fork
  std::vector<int> vertices; // inner vertices, walking away from the string
  std::vector<int> cycle_split;  // per symmetric cycle: the vertex nearer the string
  std::vector<int> cycle_far;    // per symmetric cycle: the vertex farther from the string
};

struct Piece {
  std::vector<int> edges;     // string edges in traversal order
  std::vector<int> unbent;    // inner vertices strictly inside the piece
  std::vector<int> bent_ends; // bent vertices bounding the piece
  bool in_piece = false;      // traversed left to right
};

struct ZigzagComponent {
  int piece = 0;
  bool in_component = false;
  std::vector<int> vertices;  // sorted
};

enum class StringKind { path, cycle, vertex };

struct ZigzagStructure {
  StringKind kind = StringKind::path;
  std::vector<int> string_edges;     // traversal order for paths
  std::vector<int> string_vertices;  // traversal order for paths
  std::vector<int> bent_vertices;
  std::vector<Piece> pieces;         // paths only
  std::vector<Tail> tails;
  std::vector<ZigzagComponent> components;  // paths only, empty components omitted

  std::string str() const;
};

enum class ZigzagClass { not_zigzag = 0, zigzag = 1, monotone = 2, universally_monotone = 3 };

std::string_view to_string(ZigzagClass c);

struct Classification {
  ZigzagClass cls = ZigzagClass::not_zigzag;
  std::optional<ZigzagStructure> witness;
};

// Strongest class over all candidate strings.
Classification classify(const TropicalCover& c);

// Every candidate string whose complement splits into tails; orientation-specific for paths.
std::vector<ZigzagStructure> zigzag_structures(const TropicalCover& c);

// Conditions (1)-(3) of monotonicity for one structure, restricted to vertices <= limit.
bool satisfies_monotone(const TropicalCover& c, const ZigzagStructure& z, int limit);
bool satisfies_universal(const TropicalCover& c, const ZigzagStructure& z, int limit);

struct KMixedResult {
  bool value = false;
  std::optional<ZigzagStructure> witness;
};

KMixedResult is_kmixed(const TropicalCover& c, int k);

// The colouring realising the splitting; throws InvalidInput on a non-zigzag cover,
// InvariantViolation when the number of matches differs from one.
Colouring unique_colouring(const TropicalCover& c, const SignSequence& signs);

enum class ZigzagFamily { monotone, universal, kmixed };

std::string_view to_string(ZigzagFamily f);

struct ZigzagNumberTerm {
  CanonicalForm cover;
  ZigzagClass cls = ZigzagClass::not_zigzag;
  std::uint64_t n = 0;
};

struct ZigzagNumber {
  std::uint64_t value = 0;
  std::vector<ZigzagNumberTerm> terms;
};

// Sum of N(phi) over covers of the family; the k argument is used only by kmixed.
ZigzagNumber zigzag_number(int g, const Partition& lambda, const Partition& mu, ZigzagFamily family, int k = 0,
                           const SearchOptions& options = {});

// Builders. Every result satisfies check_structure.

// String L -> B1 <- B2 -> ... <- B2m -> R with a weight-2 fork tail at every bent vertex.
TropicalCover build_standard_universal(int m, int g);

enum class ComponentType { one = 1, two = 2, three = 3, four = 4 };

// Component types compatible with block positions: order[i] is the block of component i+1, counted from the left.
std::vector<ComponentType> chain_types_for_order(const std::vector<int>& order);

// Glued monotone components of type (0,(2,1^{2m-1}),(2,1^{2m-1})). With split_positives set, the
// tail exchange is applied when the plain chain has no colouring with that simple splitting.
TropicalCover build_component_chain(int m, const std::vector<ComponentType>& types, const std::vector<int>& order,
                                    std::optional<int> split_positives = std::nullopt);

struct TailStep {
  int weight = 0;
  bool in_tail = false;
  bool bent = false;
  bool fork = false;  // a pair of ones
};

struct TailSequence {
  std::vector<int> k;  // k_0 .. k_N
  std::vector<TailStep> steps;
};

TailSequence tail_sequence(const Partition& lambda, const Partition& mu, int case_number);

// The monotone zigzag cover of type (g, lambda, mu) assembled from tail_sequence.
TropicalCover build_case_zigzag(const Partition& lambda, const Partition& mu, int g, int case_number);

enum class CaseFamily { simple_splitting, arbitrary_splitting };

// simple_splitting: type (g,(lambda,2,1^{2m}),(mu,2,1^{2m})) via the cut at the weight-1 edge.
// arbitrary_splitting: type (g,(lambda,1^{2m}),(mu,1^{2m})) glued to build_standard_universal(m,0).
TropicalCover build_case_cover(const Partition& lambda, const Partition& mu, int g, int case_number, int m,
                               CaseFamily family = CaseFamily::simple_splitting);

// k-mixed cover of type (g,(lambda,1^{2m}),(mu,1^{2m})) whose first k = l(lambda')+l(mu')-2 vertices
// carry a universally monotone cover of type (0,lambda',mu').
TropicalCover build_kmixed_cover(const Partition& lambda, const Partition& mu, const Partition& lambda_prime,
                                 const Partition& mu_prime, int g, int m);

// Zigzag cover of type (0,1^{2m+1},1^{2m+1}) whose string carries weight-3 edges.
TropicalCover build_heavy_string_cover(int m);

// Relabels vertices along a topological order of the edges, keeping each block consecutive.
TropicalCover order_by_blocks(const TropicalCover& draft, const std::vector<std::vector<int>>& blocks);

}  // namespace hurwitz
