#include <gtest/gtest.h>

#include "imbal/checks.hpp"
#include "imbal/oracle.hpp"
#include "imbal/realization.hpp"
#include "test_support.hpp"

namespace imbal {
namespace {

using Seq = std::vector<Imbalance>;

TEST(RealizeTest, ZeroSequence) {
  const auto result = realize(Seq{0, 0, 0}, 1);
  EXPECT_EQ(result.graph, new_rgraph(3, 1));
  EXPECT_EQ(result.arc_count, 0);
}

TEST(RealizeTest, SingleSupplier) {
  const auto result = realize(Seq{-2, -2, 4}, 2);
  auto expected = new_rgraph(3, 2);
  expected.add_arcs(2, 0, 2).add_arcs(2, 1, 2);
  EXPECT_EQ(result.graph, expected);
  EXPECT_EQ(result.arc_count, 4);
  EXPECT_EQ(result.vertex_map, (std::vector<Vertex>{0, 1, 2}));
}

TEST(RealizeTest, TwoSuppliersTwoConsumers) {
  const auto result = realize(Seq{-1, -1, 1, 1}, 1);
  EXPECT_EQ(result.arc_count, 2);
  EXPECT_EQ(imbalance_sequence(result.graph).values, (Seq{-1, -1, 1, 1}));
  EXPECT_EQ(testing::recount(4, testing::arcs_of(result.graph)), (Seq{-1, -1, 1, 1}));
}

// A zero-imbalance vertex has to relay flow: -2 needs arcs from both other
// vertices when r = 1, so three arcs are unavoidable although only two units
// of imbalance are positive.
TEST(RealizeTest, RelayThroughZeroVertex) {
  const Seq b{-2, 0, 2};
  const auto result = realize(b, 1);
  EXPECT_EQ(result.graph.imbalances(), b);
  EXPECT_EQ(result.arc_count, 3);
  EXPECT_EQ(min_arc_lower_bound(b), 2);
  EXPECT_EQ(min_arcs_brute(b, {3, 1}).count, 3);
  EXPECT_TRUE(is_transitive(result.graph));
}

TEST(RealizeTest, GreedyDeadEndIsRepaired) {
  // The greedy pass fills consumer 0 from suppliers 2 and 3, leaving supplier
  // 4 one unit short: its only unmet consumer (1) already holds its arc.
  const Seq b{-2, -2, 1, 1, 2};
  const auto result = realize(b, 1);
  EXPECT_EQ(result.graph.imbalances(), b);
  EXPECT_EQ(result.arc_count, 4);
  EXPECT_EQ(min_arcs_brute(b, {5, 1}).count, 4);
  EXPECT_TRUE(is_transitive(result.graph));
}

TEST(RealizeTest, InfeasibleCarriesWitness) {
  try {
    realize(Seq{-2, -2, 4}, 1);
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_EQ(e.code(), Errc::infeasible);
    EXPECT_EQ(e.witness(), (Witness{2, -4, -2, Bound::prefix_lower}));
  }
}

TEST(MinArcLowerBoundTest, Examples) {
  EXPECT_EQ(min_arc_lower_bound(Seq{0, 0, 0}), 0);
  EXPECT_EQ(min_arc_lower_bound(Seq{-2, -2, 4}), 4);
  try {
    min_arc_lower_bound(Seq{1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_parameter);
  }
}

// The lower bound never exceeds the true minimum, and realize always meets
// the true minimum (n <= 4, r <= 2 against exhaustive search).
TEST(RealizeProperties, MinimalAgainstBruteForce) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (Multiplicity r = 1; r <= 2; ++r) {
      for (const auto& b : enumerate_imbalance_sequences({n, r})) {
        const auto brute = min_arcs_brute(b, {n, r});
        const auto result = realize(b, r);
        EXPECT_EQ(result.arc_count, brute.count) << ::testing::PrintToString(b);
        EXPECT_LE(min_arc_lower_bound(b), brute.count);
      }
    }
  }
}

TEST(RealizeProperties, RoundTripOnAllFeasibleSequences) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (Multiplicity r = 1; r <= 3; ++r) {
      std::size_t feasible = 0;
      for_each_candidate_sequence(n, r, [&](const Seq& b) {
        if (!check_feasible_nondecreasing(b, r)) return;
        ++feasible;
        const auto result = realize(b, r);
        const auto& g = result.graph;
        ASSERT_EQ(g.imbalances(), b);
        EXPECT_EQ(result.arc_count, g.arc_count());
        EXPECT_GE(result.arc_count, min_arc_lower_bound(b));
        EXPECT_TRUE(is_transitive(g));
        for (const auto& [pair, m] : g.arcs()) {
          EXPECT_EQ(g.multiplicity(pair.second, pair.first), 0);
          EXPECT_LE(m, r);
        }
        EXPECT_EQ(realize(b, r).graph, g);  // deterministic
      });
      EXPECT_GT(feasible, 0u);
    }
  }
}

}  // namespace
}  // namespace imbal
