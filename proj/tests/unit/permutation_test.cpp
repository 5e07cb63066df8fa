#include <gtest/gtest.h>

#include <random>

#include "hurwitz/errors.hpp"
#include "hurwitz/permutation.hpp"

using namespace hurwitz;

namespace {

Permutation perm(const char* text, int d) { return Permutation::parse(text, d); }

// Letters a..h read as points 1..8.
const Permutation kGamma = perm("(25)(34)(78)", 8);

const InvertedCycle* inverted_cycle_of(const InvolutionAction& act, int point) {
  for (const auto& inv : act.inverted) {
    const auto& cyc = act.cycles[inv.cycle];
    if (std::find(cyc.begin(), cyc.end(), point) != cyc.end()) return &inv;
  }
  return nullptr;
}

}  // namespace

TEST(Partition, ParseSortsParts) {
  EXPECT_EQ(Partition::parse("1,3").parts(), (std::vector<int>{3, 1}));
  EXPECT_EQ(Partition::parse("2,2,1").weight(), 5);
  EXPECT_EQ(Partition::parse("4,1").str(), "4,1");
}

TEST(Partition, RejectsNonPositiveParts) {
  EXPECT_THROW(Partition::parse("0,1"), InvalidInput);
  EXPECT_THROW(Partition::parse("a"), InvalidInput);
}

TEST(Permutation, ParseAndPrint) {
  const auto p = perm("(1)(234)", 4);
  EXPECT_EQ(p(2), 3);
  EXPECT_EQ(p(4), 2);
  EXPECT_EQ(p(1), 1);
  EXPECT_EQ(p.str(), "(1)(2 3 4)");
  EXPECT_EQ(Permutation::parse("(24)(13)").degree(), 4);
}

TEST(Permutation, TranspositionSquaresToIdentity) {
  const auto t = Permutation::transposition(2, 1, 2);
  EXPECT_TRUE(compose(t, t).is_identity());
}

TEST(Permutation, ComposeAppliesRightFactorFirst) {
  // (34) o (1)(234) sends 2 -> 3 -> 4 and 4 -> 2.
  const auto p = compose(perm("(34)", 4), perm("(1)(234)", 4));
  EXPECT_EQ(p, perm("(24)", 4));
  EXPECT_EQ(cycle_type(p), Partition::parse("2,1,1"));
}

TEST(Permutation, RandomGroupAxioms) {
  std::mt19937 rng(7);
  const auto all = all_permutations(5);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const auto& p = all[pick(rng)];
    const auto& q = all[pick(rng)];
    EXPECT_TRUE(compose(compose(p, q), inverse(compose(p, q))).is_identity());
    EXPECT_EQ(inverse(compose(p, q)), compose(inverse(q), inverse(p)));
  }
}

TEST(Permutation, CycleTypes) {
  EXPECT_EQ(cycle_type(perm("(1)(234)", 4)), Partition::parse("3,1"));
  EXPECT_EQ(cycle_type(Permutation::identity(3)), Partition::parse("1,1,1"));
  EXPECT_EQ(cycle_type(perm("(24)(13)", 4)), Partition::parse("2,2"));
}

TEST(Permutation, EnumerationSizes) {
  EXPECT_EQ(all_permutations(4).size(), 24u);
  EXPECT_EQ(permutations_of_type(Partition::parse("3,1")).size(), 8u);
  EXPECT_EQ(involutions(4).size(), 10u);
  EXPECT_EQ(factorial(6), 720u);
}

TEST(Permutation, Transitivity) {
  EXPECT_TRUE(is_transitive({perm("(12)", 3), perm("(23)", 3)}, 3));
  EXPECT_FALSE(is_transitive({perm("(12)", 3)}, 3));
}

TEST(InvolutionAction, OddCycleHasOneFixedPoint) {
  const auto sigma = perm("(12345)", 8);
  const auto act = classify_involution_action(kGamma, sigma);
  const auto* inv = inverted_cycle_of(act, 1);
  ASSERT_NE(inv, nullptr);
  EXPECT_EQ(inv->fixed_points, (std::vector<int>{1}));
  EXPECT_FALSE(inv->exchanged_halves.has_value());
}

TEST(InvolutionAction, EvenCycleWithTwoFixedPoints) {
  const auto sigma = perm("(123645)", 8);
  const auto act = classify_involution_action(kGamma, sigma);
  const auto* inv = inverted_cycle_of(act, 1);
  ASSERT_NE(inv, nullptr);
  EXPECT_EQ(inv->fixed_points, (std::vector<int>{1, 6}));
}

TEST(InvolutionAction, EvenCycleWithExchangedArcs) {
  const auto sigma = perm("(273485)", 8);
  const auto act = classify_involution_action(kGamma, sigma);
  const auto* inv = inverted_cycle_of(act, 2);
  ASSERT_NE(inv, nullptr);
  EXPECT_TRUE(inv->fixed_points.empty());
  ASSERT_TRUE(inv->exchanged_halves.has_value());
  EXPECT_EQ(inv->exchanged_halves->first.size(), 3u);
  EXPECT_EQ(inv->exchanged_halves->second.size(), 3u);
}

TEST(InvolutionAction, RejectsNonInvertingGamma) {
  EXPECT_THROW(classify_involution_action(perm("(12)", 4), perm("(1234)", 4)), InvalidInput);
}

TEST(ShiftInvolution, WorkedValues) {
  EXPECT_EQ(shift_involution(kGamma, perm("(12345)", 8)), perm("(15)(24)(78)", 8));
  EXPECT_EQ(shift_involution(kGamma, perm("(273485)", 8)), perm("(28)(47)", 8));
  EXPECT_TRUE(shift_involution(perm("(12)", 2), perm("(12)", 2)).is_identity());
  EXPECT_TRUE(inverts(Permutation::identity(2), perm("(12)", 2)));
}

TEST(ShiftInvolution, KeepsExchangedPairsExhaustively) {
  for (int d = 1; d <= 6; ++d) {
    for (const auto& sigma : all_permutations(d)) {
      for (const auto& gamma : inverting_involutions(sigma)) {
        const auto shifted = shift_involution(gamma, sigma);
        ASSERT_TRUE(shifted.is_involution());
        ASSERT_TRUE(inverts(shifted, sigma));
        ASSERT_EQ(classify_involution_action(shifted, sigma).exchanged_pairs,
                  classify_involution_action(gamma, sigma).exchanged_pairs)
            << gamma.str() << " " << sigma.str();
      }
    }
  }
}
