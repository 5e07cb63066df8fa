#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hurwitz/errors.hpp"
#include "hurwitz/zigzag.hpp"

using namespace hurwitz;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

Partition with_ones(const Partition& base, int extra_two, int ones) {
  auto parts = base.parts();
  for (int i = 0; i < extra_two; ++i) parts.push_back(2);
  for (int i = 0; i < ones; ++i) parts.push_back(1);
  return Partition(parts);
}

bool has_colouring_for(const TropicalCover& c, const SignSequence& s) {
  for (const auto& col : enumerate_colourings(c)) {
    if (vertex_splitting({c, col}) == s) return true;
  }
  return false;
}

}  // namespace

TEST(StandardUniversal, SmallestCover) {
  const auto c = build_standard_universal(1, 0);
  EXPECT_EQ(c.r, 4);
  EXPECT_TRUE(validate_cover(c, 0, P("1,1,1"), P("1,1,1")));
}

TEST(StandardUniversal, EightVertexCover) {
  const auto c = build_standard_universal(2, 0);
  EXPECT_EQ(c.r, 8);
  EXPECT_EQ(canonicalize(c).str(),
            "[L->1 1][L->1 1][L->3 1][L->3 1][L->7 1][1->2 2][2->R 1][2->5 1][3->4 2][4->5 1][4->7 1][5->6 2]"
            "[6->R 1][6->R 1][7->8 2][8->R 1][8->R 1]");
}

TEST(StandardUniversal, WeightsGenusAndClass) {
  for (int m = 1; m <= 3; ++m) {
    for (int g = 0; g <= 2; ++g) {
      const auto c = build_standard_universal(m, g);
      const auto ones = with_ones(Partition(), 0, 2 * m + 1);
      EXPECT_EQ(c.r, 4 * m + 2 * g);
      EXPECT_TRUE(validate_cover(c, g, ones, ones)) << m << " " << g;
      EXPECT_TRUE(std::all_of(c.edges.begin(), c.edges.end(), [](const Edge& e) { return e.weight <= 2; }));
      if (m <= 2 && g <= 1) {
        EXPECT_EQ(classify(c).cls, ZigzagClass::universally_monotone) << m << " " << g;
      }
    }
  }
  EXPECT_THROW(build_standard_universal(0, 0), InvalidInput);
}

TEST(ComponentChain, TypesFollowTheOrder) {
  EXPECT_EQ(chain_types_for_order({1}), (std::vector<ComponentType>{ComponentType::three}));
  EXPECT_EQ(chain_types_for_order({1, 2}), (std::vector<ComponentType>{ComponentType::one, ComponentType::four}));
  EXPECT_EQ(chain_types_for_order({2, 1}), (std::vector<ComponentType>{ComponentType::one, ComponentType::three}));
}

TEST(ComponentChain, IncompatibleGluingIsRejected) {
  EXPECT_THROW(build_component_chain(2, {ComponentType::one, ComponentType::three}, {1, 2}), InvalidInput);
}

TEST(ComponentChain, OrdersGiveDistinctCovers) {
  for (int m = 2; m <= 3; ++m) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 1);
    std::set<CanonicalForm> forms;
    const auto type = with_ones(P("2"), 0, 2 * m - 1);
    do {
      const auto c = build_component_chain(m, chain_types_for_order(order), order);
      EXPECT_EQ(c.r, 4 * m - 2);
      EXPECT_TRUE(validate_cover(c, 0, type, type));
      forms.insert(canonicalize(c));
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_EQ(forms.size(), factorial(m));
  }
}

TEST(ComponentChain, EverySimpleSplittingIsColourable) {
  for (int m = 2; m <= 3; ++m) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 1);
    const auto type = with_ones(P("2"), 0, 2 * m - 1);
    do {
      const auto types = chain_types_for_order(order);
      for (int s = 0; s <= 4 * m - 2; ++s) {
        const auto c = build_component_chain(m, types, order, s);
        ASSERT_TRUE(validate_cover(c, 0, type, type));
        EXPECT_TRUE(has_colouring_for(c, SignSequence::simple(c.r, s))) << "m=" << m << " s=" << s;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(TailSequence, CaseOneEndsAtTheOddParts) {
  const auto t = tail_sequence(P("3,2"), P("4,1"), 1);
  EXPECT_EQ(t.k.front(), 3);
  EXPECT_EQ(t.k.back(), 1);
  const auto u = tail_sequence(P("4,2,1"), P("4,2,1"), 1);
  EXPECT_EQ(u.k.front(), 1);
  EXPECT_EQ(u.k.back(), 1);
}

TEST(TailSequence, CaseFourEndsAtMinusOne) {
  const auto t = tail_sequence(P("1,1,1,1"), P("2,2"), 4);
  EXPECT_EQ(t.k.front(), 1);
  EXPECT_EQ(t.k.back(), -1);
}

TEST(TailSequence, LargestEvenLeftPartComesLast) {
  const auto t = tail_sequence(P("6,4,1"), P("2,2,4,2,1"), 1);
  int last_in = 0;
  for (const auto& s : t.steps) {
    if (s.in_tail) last_in = s.weight;
  }
  EXPECT_EQ(last_in, 6);
  // Every step moves k by its weight.
  ASSERT_EQ(t.k.size(), t.steps.size() + 1);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    EXPECT_EQ(std::abs(t.k[i + 1] - t.k[i]), t.steps[i].weight);
  }
}

TEST(TailSequence, RejectsBrokenHypotheses) {
  EXPECT_THROW(tail_sequence(P("3,3"), P("2,2,2"), 1), InvalidInput);
  EXPECT_THROW(tail_sequence(P("3,1"), P("4"), 5), InvalidInput);
}

TEST(CaseZigzag, EveryCaseIsMonotone) {
  struct Case {
    const char* lambda;
    const char* mu;
    int number;
  };
  for (const auto& c : std::vector<Case>{{"3,2", "4,1", 1}, {"3,1", "4", 2}, {"4", "3,1", 3}, {"1,1,1,1", "2,2", 4}}) {
    // Genus sits on a fork in-tail, which only case 4 provides here.
    for (int g = 0; g <= (c.number == 4 ? 1 : 0); ++g) {
      const auto cover = build_case_zigzag(P(c.lambda), P(c.mu), g, c.number);
      EXPECT_TRUE(validate_cover(cover, g, P(c.lambda), P(c.mu))) << c.number;
      EXPECT_GE(classify(cover).cls, ZigzagClass::monotone) << c.number;
    }
  }
  EXPECT_THROW(build_case_zigzag(P("3,1"), P("4"), 1, 2), InvalidInput);
}

TEST(CaseCover, SimpleSplittingFamily) {
  struct Case {
    const char* lambda;
    const char* mu;
    int number;
  };
  for (const auto& c : std::vector<Case>{{"3,2", "4,1", 1}, {"4,2,1", "4,2,1", 1}, {"3,1", "4", 2},
                                         {"4", "3,1", 3}, {"1,1,1,1", "2,2", 4}}) {
    const auto cover = build_case_cover(P(c.lambda), P(c.mu), 0, c.number, 1, CaseFamily::simple_splitting);
    EXPECT_TRUE(validate_cover(cover, 0, with_ones(P(c.lambda), 1, 2), with_ones(P(c.mu), 1, 2))) << c.number;
  }
}

TEST(CaseCover, ArbitrarySplittingFamily) {
  struct Case {
    const char* lambda;
    const char* mu;
    int number;
  };
  for (const auto& c :
       std::vector<Case>{{"4,2,1", "4,2,1", 1}, {"3,1", "4", 2}, {"4", "3,1", 3}, {"1,1,1,1", "2,2", 4}}) {
    const auto cover = build_case_cover(P(c.lambda), P(c.mu), 0, c.number, 1, CaseFamily::arbitrary_splitting);
    EXPECT_TRUE(validate_cover(cover, 0, with_ones(P(c.lambda), 0, 2), with_ones(P(c.mu), 0, 2))) << c.number;
    EXPECT_EQ(classify(cover).cls, ZigzagClass::universally_monotone) << c.number;
  }
  EXPECT_THROW(build_case_cover(P("3,2"), P("4,1"), 0, 1, 1, CaseFamily::arbitrary_splitting), InvalidInput);
}

TEST(KMixedBuild, LowerBoundOnTheMixedFibre) {
  const auto p = P("2,1");
  const auto c = build_kmixed_cover(p, p, p, p, 0, 1);
  const int k = 2;
  EXPECT_TRUE(validate_cover(c, 0, P("2,1,1,1"), P("2,1,1,1")));
  EXPECT_TRUE(is_kmixed(c, k).value);
  const auto n = n_numbers(c, 0, SplittingRange::per_sequence, k);
  EXPECT_FALSE(n.non_unique_colouring);
  EXPECT_GE(n.minimum, factorial(2));
}

TEST(KMixedBuild, RejectsBrokenHypotheses) {
  EXPECT_THROW(build_kmixed_cover(P("2,1,1"), P("2,1,1"), P("2,1,1"), P("2,1,1"), 0, 1), InvalidInput);
}

TEST(HeavyString, WeightThreeEdgeVanishes) {
  for (int m = 1; m <= 2; ++m) {
    const auto c = build_heavy_string_cover(m);
    const auto ones = with_ones(Partition(), 0, 2 * m + 1);
    EXPECT_TRUE(validate_cover(c, 0, ones, ones));
    EXPECT_TRUE(std::any_of(c.edges.begin(), c.edges.end(), [](const Edge& e) { return e.weight == 3; }));
    EXPECT_NE(classify(c).cls, ZigzagClass::not_zigzag);
    EXPECT_EQ(n_numbers(c, 0, SplittingRange::per_sequence).minimum, 0u);
  }
}

TEST(OrderByBlocks, KeepsTheCoverClass) {
  const auto c = build_standard_universal(1, 0);
  std::vector<int> all(c.r);
  std::iota(all.begin(), all.end(), 1);
  EXPECT_EQ(canonicalize(order_by_blocks(c, {all})), canonicalize(c));
}
