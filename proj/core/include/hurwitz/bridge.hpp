#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/factorize.hpp"
#include "hurwitz/tropical.hpp"

namespace hurwitz {

enum class EdgeKind { odd, even_red, even_blue, dotted };

// Local picture at one inner vertex: a single edge on one side, a pair on the other.
struct CutJoinLocal {
  enum class Operation { cut, join };
  enum class InvolutionKind { gamma, gamma_shifted };

  Operation operation = Operation::cut;
  EdgeKind single = EdgeKind::odd;  // the cut edge, or the joined result
  EdgeKind pair_first = EdgeKind::odd;
  EdgeKind pair_second = EdgeKind::odd;
  bool symmetric = false;  // the pair lies in a symmetric cycle or fork
  InvolutionKind involution_kind = InvolutionKind::gamma;
};

// Table value of the cut and join multiplicities; k is the weight of one dotted edge.
// Throws InvariantViolation for a local type outside the table.
int cut_join_multiplicity(const CutJoinLocal& local, int k = 1);
CutJoinLocal local_at(const RealTropicalCover& rc, int v);

// Construction 2. The result is in canonical edge order and passes check_colouring.
RealTropicalCover cover_from_factorization(const Factorization& f, const SignSequence& signs);
// Uncoloured monodromy graph of any factorization.
TropicalCover monodromy_graph(const Factorization& f);

// Cycle types every pi_j must have to land on this cover: the edge weights over slab j.
std::vector<Partition> slab_types(const TropicalCover& c);

// Number of factorizations of the variant with the cover's splitting that produce rc.
// k is used only for real_kmixed.
std::uint64_t fibre_count(const RealTropicalCover& rc, int g, Variant variant, int k = 0,
                          const SearchOptions& options = {});

// Factorization counts per coloured cover class for one spec.
std::map<CanonicalForm, std::uint64_t> fibre_table(const FactorizationSpec& spec, const SearchOptions& options = {});

enum class MultiplicityConvention {
  standard,
  // Omits the 2^{-|CF|} factor; used only as a negative control.
  ignore_symmetry,
};

struct CorrespondenceTerm {
  CanonicalForm cover;
  Rational mult;
  Rational contribution;  // d! * mult
};

struct CorrespondenceReport {
  int genus = 0;
  Partition lambda;
  Partition mu;
  SignSequence signs;
  std::uint64_t lhs = 0;
  Rational rhs;
  std::vector<CorrespondenceTerm> terms;
  bool equal = false;
};

CorrespondenceReport verify_correspondence(int g, const Partition& lambda, const Partition& mu,
                                           const SignSequence& signs, const SearchOptions& options = {},
                                           MultiplicityConvention convention = MultiplicityConvention::standard);

enum class SplittingRange { per_simple_s, per_sequence };

struct NEntry {
  SignSequence signs;
  std::uint64_t count = 0;
  int matching_colourings = 0;  // 1 for zigzag covers
};

struct NNumbers {
  std::vector<NEntry> entries;
  std::uint64_t minimum = 0;
  bool non_unique_colouring = false;  // some splitting matched 0 or several colourings
};

// Fibre counts of the monotone (or k-mixed when k is set) variant over the splitting range.
NNumbers n_numbers(const TropicalCover& cover, int g, SplittingRange range, std::optional<int> k = std::nullopt,
                   const SearchOptions& options = {});

}  // namespace hurwitz
