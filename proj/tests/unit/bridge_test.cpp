#include <gtest/gtest.h>

#include <numeric>

#include "hurwitz/bridge.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/zigzag.hpp"
#include "tables.hpp"

using namespace hurwitz;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

Factorization two_vertex_factorization() {
  return {Permutation::parse("(24)", 4), Permutation::parse("(1)(234)", 4), {{3, 4}, {1, 3}},
          Permutation::parse("(24)(13)", 4)};
}

CutJoinLocal local(CutJoinLocal::Operation op, EdgeKind single, EdgeKind a, EdgeKind b, bool symmetric = false) {
  CutJoinLocal l;
  l.operation = op;
  l.single = single;
  l.pair_first = a;
  l.pair_second = b;
  l.symmetric = symmetric;
  return l;
}

}  // namespace

TEST(CutJoinTable, TabulatedEntries) {
  using Op = CutJoinLocal::Operation;
  EXPECT_EQ(cut_join_multiplicity(local(Op::cut, EdgeKind::odd, EdgeKind::odd, EdgeKind::even_blue)), 1);
  EXPECT_EQ(cut_join_multiplicity(local(Op::cut, EdgeKind::even_blue, EdgeKind::even_blue, EdgeKind::even_blue, true)), 1);
  EXPECT_EQ(cut_join_multiplicity(local(Op::cut, EdgeKind::even_blue, EdgeKind::even_blue, EdgeKind::even_blue)), 2);
  EXPECT_EQ(cut_join_multiplicity(local(Op::join, EdgeKind::even_blue, EdgeKind::dotted, EdgeKind::dotted, true), 3), 3);
  EXPECT_EQ(cut_join_multiplicity(local(Op::join, EdgeKind::odd, EdgeKind::odd, EdgeKind::even_red)), 2);
}

TEST(CutJoinTable, RejectsUnknownLocalTypes) {
  using Op = CutJoinLocal::Operation;
  EXPECT_THROW(cut_join_multiplicity(local(Op::cut, EdgeKind::odd, EdgeKind::odd, EdgeKind::odd)), InvariantViolation);
  EXPECT_THROW(cut_join_multiplicity(local(Op::cut, EdgeKind::even_red, EdgeKind::even_blue, EdgeKind::even_blue)),
               InvariantViolation);
}

TEST(CoverFromFactorization, TwoVertexExample) {
  const auto rc = cover_from_factorization(two_vertex_factorization(), SignSequence::parse("+-"));
  EXPECT_EQ(canonicalize(rc).str(), "[L->1 3][L->2 1][1->R 2 blue][1->2 1][2->R 2 blue]");
  EXPECT_EQ(vertex_splitting(rc).str(), "+-");
  EXPECT_NO_THROW(check_colouring(rc));
  const auto at1 = local_at(rc, 1);
  EXPECT_EQ(at1.operation, CutJoinLocal::Operation::cut);
  EXPECT_EQ(at1.single, EdgeKind::odd);
}

TEST(CoverFromFactorization, RejectsWrongSigns) {
  auto f = two_vertex_factorization();
  f.gamma.reset();
  EXPECT_THROW(cover_from_factorization(f, SignSequence::parse("+-")), InvalidInput);
}

TEST(CoverFromFactorization, TableRowsReproduceTheirSplitting) {
  const auto signs = SignSequence::parse("+++-");
  for (const auto& row : tables::kRealMonotonePPPM) {
    const Factorization f{tables::gamma_of(row, 3), Permutation::identity(3), row.taus, Permutation::identity(3)};
    const auto rc = cover_from_factorization(f, signs);
    EXPECT_TRUE(validate_cover(rc.cover, 0, P("1,1,1"), P("1,1,1")));
    EXPECT_EQ(vertex_splitting(rc), signs);
  }
}

TEST(CoverFromFactorization, EveryRealTupleLandsOnItsSplitting) {
  for (const auto& [l, m] : std::vector<std::pair<const char*, const char*>>{{"1,1,1", "1,1,1"}, {"2,1,1", "2,1,1"}}) {
    for (const auto& s : SignSequence::all(4)) {
      for (const auto& f : enumerate({0, P(l), P(m), Variant::real, s, 0})) {
        const auto rc = cover_from_factorization(f, s);
        ASSERT_EQ(vertex_splitting(rc), s);
        ASSERT_EQ(canonicalize(rc.cover), canonicalize(monodromy_graph(f)));
      }
    }
  }
}

TEST(MonodromyGraph, UnsignedRow) {
  const auto& row = tables::kMonotoneOnes.front();
  const Factorization f{std::nullopt, Permutation::identity(3), row.taus, Permutation::identity(3)};
  const auto c = monodromy_graph(f);
  EXPECT_TRUE(validate_cover(c, 0, P("1,1,1"), P("1,1,1")));
  EXPECT_EQ(slab_types(c).size(), 5u);
  EXPECT_EQ(slab_types(c).front(), P("1,1,1"));
}

TEST(FibreCount, TwoVertexCoverIsTwentyFour) {
  const auto rc = cover_from_factorization(two_vertex_factorization(), SignSequence::parse("+-"));
  EXPECT_EQ(real_multiplicity(rc), Rational(1));
  EXPECT_EQ(fibre_count(rc, 0, Variant::real), 24u);
}

TEST(FibreCount, UnitMultiplicityAtDegreeThree) {
  for (const auto& c : enumerate_covers(0, P("2,1"), P("2,1"))) {
    for (const auto& col : enumerate_colourings(c)) {
      const RealTropicalCover rc{c, col};
      if (real_multiplicity(rc) == Rational(1)) EXPECT_EQ(fibre_count(rc, 0, Variant::real), 6u);
    }
  }
}

TEST(FibreCount, StandardCoverIsNonZeroOnSimpleSplittings) {
  const auto c = build_standard_universal(1, 0);
  for (int s = 0; s <= c.r; ++s) {
    const auto col = unique_colouring(c, SignSequence::simple(c.r, s));
    EXPECT_GE(fibre_count({c, col}, 0, Variant::real_monotone), 1u) << s;
  }
}

TEST(FibreTable, SumsToTheCount) {
  for (const auto& s : SignSequence::all(4)) {
    const FactorizationSpec spec{0, P("1,1,1,1"), P("2,2"), Variant::real, s, 0};
    const auto table = fibre_table(spec);
    const auto total = std::accumulate(table.begin(), table.end(), std::uint64_t{0},
                                       [](std::uint64_t acc, const auto& kv) { return acc + kv.second; });
    EXPECT_EQ(total, count(spec));
  }
}

TEST(Correspondence, PublishedCount) {
  const auto rep = verify_correspondence(0, P("1,3"), P("2,2"), SignSequence::parse("++"));
  EXPECT_TRUE(rep.equal);
  EXPECT_EQ(rep.lhs, 24u);
  EXPECT_EQ(rep.rhs, Rational(24));
}

TEST(Correspondence, OnesTypeEverySequence) {
  for (const auto& s : SignSequence::all(4)) {
    EXPECT_TRUE(verify_correspondence(0, P("1,1,1"), P("1,1,1"), s).equal) << s.str();
  }
}

TEST(Correspondence, GenusOne) {
  for (const auto& s : SignSequence::all(2)) {
    EXPECT_TRUE(verify_correspondence(1, P("2"), P("2"), s).equal) << s.str();
  }
}

TEST(Correspondence, WrongConventionBreaksEquality) {
  bool broken = false;
  for (const auto& s : SignSequence::all(4)) {
    broken |= !verify_correspondence(0, P("1,1,1"), P("1,1,1"), s, {}, MultiplicityConvention::ignore_symmetry).equal;
  }
  EXPECT_TRUE(broken);
}

TEST(NNumbers, KZeroIsThePlainRealFibre) {
  const auto c = build_standard_universal(1, 0);
  const auto n = n_numbers(c, 0, SplittingRange::per_sequence, 0);
  ASSERT_EQ(n.entries.size(), 16u);
  for (const auto& e : n.entries) {
    EXPECT_EQ(e.matching_colourings, 1);
    EXPECT_EQ(e.count, fibre_count({c, unique_colouring(c, e.signs)}, 0, Variant::real));
  }
}

TEST(NNumbers, SimpleRangeHasOneEntryPerS) {
  const auto c = build_standard_universal(1, 0);
  const auto n = n_numbers(c, 0, SplittingRange::per_simple_s);
  EXPECT_EQ(n.entries.size(), 5u);
  EXPECT_GE(n.minimum, 1u);
  EXPECT_FALSE(n.non_unique_colouring);
}
