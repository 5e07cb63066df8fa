#include <gtest/gtest.h>

#include <map>

#include "hurwitz/errors.hpp"
#include "hurwitz/zigzag.hpp"

using namespace hurwitz;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

// One in-piece carrying two unbent weight-2 out-tails.
const char* kTwoOutTails = "[L->1 5][1->2 3][1->R 2][2->R 1][2->R 2]";

struct Type {
  const char* lambda;
  const char* mu;
};

const std::vector<Type> kTypes = {{"1,1,1", "1,1,1"}, {"2,1,1", "2,1,1"}, {"1,1,1,1", "2,2"},
                                  {"2,1,1,1", "2,1,1,1"}, {"1,1,1,1", "1,1,1,1"}, {"3,1,1", "2,2,1"},
                                  {"2,2,1", "2,2,1"}, {"5", "2,2,1"}};

TropicalCover first_non_zigzag() {
  for (const auto& c : enumerate_covers(0, P("2,1,1"), P("2,1,1"))) {
    if (classify(c).cls == ZigzagClass::not_zigzag) return c;
  }
  throw std::logic_error("no non-zigzag cover");
}

}  // namespace

TEST(TailDecomposition, SplitsParts) {
  const auto a = tail_decomposition(P("4,3,3,2,1"));
  EXPECT_EQ(a.even, P("4,2"));
  EXPECT_EQ(a.odd_paired, P("3"));
  EXPECT_EQ(a.odd_distinct, P("1"));
  EXPECT_EQ(a.even_max(), 4);
  const auto b = tail_decomposition(P("3,3"));
  EXPECT_TRUE(b.even.empty());
  EXPECT_EQ(b.odd_paired, P("3"));
  EXPECT_TRUE(b.odd_distinct.empty());
  const auto c = tail_decomposition(P("5,1"));
  EXPECT_TRUE(c.even.empty() && c.odd_paired.empty());
  EXPECT_EQ(c.odd_distinct, P("5,1"));
  EXPECT_EQ(tail_decomposition(P("1,1,1,1,2")).ones_pairs(), 2);
}

TEST(Classify, StandardCoversAreUniversal) {
  for (int m = 1; m <= 2; ++m) {
    const auto res = classify(build_standard_universal(m, 0));
    EXPECT_EQ(res.cls, ZigzagClass::universally_monotone);
    ASSERT_TRUE(res.witness.has_value());
    EXPECT_EQ(res.witness->kind, StringKind::path);
    EXPECT_FALSE(res.witness->str().empty());
  }
}

TEST(Classify, TwoUnbentOutTailsAreMonotoneOnly) {
  const auto c = parse_cover(kTwoOutTails);
  ASSERT_TRUE(validate_cover(c, 0, P("5"), P("2,2,1")));
  const auto res = classify(c);
  EXPECT_EQ(res.cls, ZigzagClass::monotone);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_TRUE(satisfies_monotone(c, *res.witness, c.r));
  EXPECT_FALSE(satisfies_universal(c, *res.witness, c.r));
}

TEST(Classify, InclusionChainOnEnumeratedCovers) {
  for (const auto& t : kTypes) {
    for (const auto& c : enumerate_covers(0, P(t.lambda), P(t.mu))) {
      const auto res = classify(c);
      const auto structures = zigzag_structures(c);
      EXPECT_EQ(res.cls == ZigzagClass::not_zigzag, structures.empty());
      bool any_monotone = false;
      bool any_universal = false;
      for (const auto& z : structures) {
        const bool mono = satisfies_monotone(c, z, c.r);
        const bool uni = satisfies_universal(c, z, c.r);
        EXPECT_TRUE(!uni || mono);
        any_monotone |= mono;
        any_universal |= uni;
      }
      EXPECT_EQ(res.cls >= ZigzagClass::monotone, any_monotone);
      EXPECT_EQ(res.cls == ZigzagClass::universally_monotone, any_universal);
    }
  }
}

TEST(UniqueColouring, EveryZigzagCoverAndSplitting) {
  int covers = 0;
  for (const auto& t : kTypes) {
    for (const auto& c : enumerate_covers(0, P(t.lambda), P(t.mu))) {
      if (c.r > 6 || classify(c).cls == ZigzagClass::not_zigzag) continue;
      ++covers;
      std::map<std::vector<int>, int> hits;
      for (const auto& col : enumerate_colourings(c)) ++hits[vertex_splitting({c, col}).entries()];
      for (const auto& s : SignSequence::all(c.r)) {
        ASSERT_EQ(hits[s.entries()], 1) << canonicalize(c).str() << " " << s.str();
        EXPECT_EQ(vertex_splitting({c, unique_colouring(c, s)}), s);
      }
    }
  }
  EXPECT_GT(covers, 100);
}

TEST(UniqueColouring, AllPositiveSplittingHasAllPositiveSigns) {
  const auto c = build_standard_universal(2, 0);
  const auto all_plus = SignSequence::simple(c.r, c.r);
  EXPECT_EQ(vertex_splitting({c, unique_colouring(c, all_plus)}), all_plus);
}

TEST(UniqueColouring, RejectsNonZigzagCovers) {
  EXPECT_THROW(unique_colouring(first_non_zigzag(), SignSequence::simple(4, 2)), InvalidInput);
}

TEST(KMixed, UniversalCoversAtTheEnds) {
  for (int m = 1; m <= 2; ++m) {
    const auto c = build_standard_universal(m, 0);
    EXPECT_TRUE(is_kmixed(c, 0).value);
    EXPECT_TRUE(is_kmixed(c, c.r).value);
  }
}

TEST(KMixed, NonZigzagIsNeverMixed) {
  const auto c = first_non_zigzag();
  EXPECT_FALSE(is_kmixed(c, c.r).value);
  EXPECT_THROW(is_kmixed(c, c.r + 1), InvalidInput);
}

TEST(KMixed, BuiltCoverIsMixedAtItsK) {
  const auto lp = P("2,2,1");
  const auto mp = P("4,1");
  const auto c = build_kmixed_cover(lp, mp, lp, mp, 0, 1);
  const int k = lp.length() + mp.length() - 2;
  EXPECT_TRUE(validate_cover(c, 0, P("2,2,1,1,1"), P("4,1,1,1")));
  EXPECT_TRUE(is_kmixed(c, k).value);
}

TEST(ZigzagNumber, OnesTypeIsPositive) {
  const auto z = zigzag_number(0, P("1,1,1"), P("1,1,1"), ZigzagFamily::universal);
  EXPECT_GE(z.value, 1u);
  EXPECT_EQ(z.terms.size(), 1u);
  EXPECT_EQ(z.terms.front().cover, canonicalize(build_standard_universal(1, 0)));
}

TEST(ZigzagNumber, BoundedByInfimum) {
  for (const auto& [l, m] : std::vector<std::pair<const char*, const char*>>{{"1,1,1", "1,1,1"}, {"1,1,1,1", "2,2"}}) {
    const auto lambda = P(l);
    const auto mu = P(m);
    EXPECT_LE(zigzag_number(0, lambda, mu, ZigzagFamily::monotone).value,
              infimum_number(0, lambda, mu, InfimumMode::simple).value);
    EXPECT_LE(zigzag_number(0, lambda, mu, ZigzagFamily::universal).value,
              infimum_number(0, lambda, mu, InfimumMode::arbitrary).value);
    for (int k = 0; k <= 4; ++k) {
      EXPECT_LE(zigzag_number(0, lambda, mu, ZigzagFamily::kmixed, k).value,
                infimum_number(0, lambda, mu, InfimumMode::arbitrary, k).value);
    }
  }
}

TEST(ZigzagNumber, MonotoneFamilyCountsMonotoneOnlyCovers) {
  const auto z = zigzag_number(0, P("5"), P("2,2,1"), ZigzagFamily::monotone);
  const auto want = canonicalize(parse_cover(kTwoOutTails));
  bool found = false;
  for (const auto& t : z.terms) found |= t.cover == want && t.cls == ZigzagClass::monotone;
  EXPECT_TRUE(found);
}
