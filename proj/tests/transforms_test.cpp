#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "imbal/graph_io.hpp"
#include "imbal/oracle.hpp"
#include "imbal/realization.hpp"
#include "imbal/transforms.hpp"
#include "test_support.hpp"

namespace imbal {
namespace {

using Seq = std::vector<Imbalance>;

RGraph cycle3() {
  auto g = new_rgraph(3, 1);
  g.add_arcs(0, 1, 1).add_arcs(1, 2, 1).add_arcs(2, 0, 1);
  return g;
}

RGraph path3() {
  auto g = new_rgraph(3, 1);
  g.add_arcs(0, 1, 1).add_arcs(1, 2, 1);
  return g;
}

bool contains(const std::vector<Move>& moves, const Move& m) {
  return std::find(moves.begin(), moves.end(), m) != moves.end();
}

TEST(FindMovesTest, Examples) {
  const auto tri = find_moves(cycle3(), kAllMoveKinds, Direction::forward);
  EXPECT_TRUE(contains(tri, {MoveKind::triangle_cancel, {0, 1, 2}, Direction::forward}));

  const auto sc = find_moves(path3(), kAllMoveKinds, Direction::forward);
  EXPECT_EQ(sc, (std::vector<Move>{{MoveKind::path_shortcut, {0, 1, 2}, Direction::forward}}));

  auto dbl = new_rgraph(2, 2);
  dbl.add_arcs(0, 1, 1).add_arcs(1, 0, 1);
  EXPECT_EQ(find_moves(dbl, kAllMoveKinds, Direction::forward),
            (std::vector<Move>{{MoveKind::double_cancel, {0, 1}, Direction::forward}}));
}

TEST(FindMovesTest, TrianglesListedOncePerOrientation) {
  const auto moves = find_moves(cycle3(), {MoveKind::triangle_cancel}, Direction::forward);
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0].vertices, (std::vector<Vertex>{0, 1, 2}));
}

TEST(FindMovesTest, InverseApplicability) {
  // r = 1: no room for a double anywhere; r = 2 empty pair has room.
  EXPECT_TRUE(find_moves(new_rgraph(2, 1), {MoveKind::double_cancel}, Direction::inverse).empty());
  EXPECT_EQ(find_moves(new_rgraph(2, 2), {MoveKind::double_cancel}, Direction::inverse).size(),
            1u);
  // Both orientations of a triangle fit into an empty 3-vertex 1-graph.
  EXPECT_EQ(find_moves(new_rgraph(3, 1), {MoveKind::triangle_cancel}, Direction::inverse).size(),
            2u);
  // A single arc 0->2 can be expanded into 0->1->2.
  auto g = new_rgraph(3, 1);
  g.add_arcs(0, 2, 1);
  EXPECT_EQ(find_moves(g, {MoveKind::path_shortcut}, Direction::inverse),
            (std::vector<Move>{{MoveKind::path_shortcut, {0, 1, 2}, Direction::inverse}}));
}

TEST(FindMovesTest, ShortcutNeedsRoomOnClosingPair) {
  // 0->1->2 with one arc 0->2: transitive, but a second arc 0->2 still fits.
  auto g = new_rgraph(3, 2);
  g.add_arcs(0, 1, 1).add_arcs(1, 2, 1).add_arcs(0, 2, 1);
  EXPECT_TRUE(is_transitive(g));
  EXPECT_EQ(find_moves(g, kAllMoveKinds, Direction::forward),
            (std::vector<Move>{{MoveKind::path_shortcut, {0, 1, 2}, Direction::forward}}));
  EXPECT_EQ(reduce(g), add_arcs(new_rgraph(3, 2), 0, 2, 2));

  // With 0->2 saturated there is no room left.
  g.add_arcs(0, 2, 1);
  EXPECT_EQ(failed_precondition(g, {MoveKind::path_shortcut, {0, 1, 2}}),
            std::optional<std::string>("pair {0,2} has no room"));

  // Any arc 2->0 blocks the shortcut.
  auto h = new_rgraph(3, 2);
  h.add_arcs(0, 1, 1).add_arcs(1, 2, 1).add_arcs(2, 0, 1);
  EXPECT_EQ(failed_precondition(h, {MoveKind::path_shortcut, {0, 1, 2}}),
            std::optional<std::string>("needs no arc 2->0"));
}

TEST(ApplyMoveTest, Examples) {
  const auto empty = apply_move(cycle3(), {MoveKind::triangle_cancel, {0, 1, 2}});
  EXPECT_EQ(empty, new_rgraph(3, 1));
  EXPECT_EQ(imbalance_sequence(empty).values, (Seq{0, 0, 0}));

  const auto shortcut = apply_move(path3(), {MoveKind::path_shortcut, {0, 1, 2}});
  auto expected = new_rgraph(3, 1);
  expected.add_arcs(0, 2, 1);
  EXPECT_EQ(shortcut, expected);
  EXPECT_EQ(imbalance_sequence(shortcut).values, (Seq{-1, 0, 1}));
  EXPECT_EQ(imbalance_sequence(path3()).values, (Seq{-1, 0, 1}));

  auto dbl = new_rgraph(2, 2);
  dbl.add_arcs(0, 1, 1).add_arcs(1, 0, 1);
  const auto cancelled = apply_move(dbl, {MoveKind::double_cancel, {0, 1}});
  EXPECT_EQ(cancelled, new_rgraph(2, 2));
  EXPECT_EQ(imbalance_sequence(cancelled).values, (Seq{0, 0}));
}

TEST(ApplyMoveTest, NotApplicableNamesPrecondition) {
  try {
    apply_move(path3(), {MoveKind::triangle_cancel, {0, 1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::move_not_applicable);
    EXPECT_NE(std::string(e.what()).find("2->0"), std::string::npos) << e.what();
  }
  try {
    apply_move(new_rgraph(2, 1), {MoveKind::double_cancel, {0, 1}, Direction::inverse});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::move_not_applicable);
    EXPECT_NE(std::string(e.what()).find("no room"), std::string::npos) << e.what();
  }
  try {
    apply_move(path3(), {MoveKind::path_shortcut, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::move_not_applicable);
  }
}

TEST(ReduceTest, Examples) {
  EXPECT_EQ(reduce(new_rgraph(4, 2)), new_rgraph(4, 2));

  const auto [reduced, log] = reduce_with_log(cycle3());
  EXPECT_EQ(reduced, new_rgraph(3, 1));
  EXPECT_EQ(log, (std::vector<Move>{{MoveKind::triangle_cancel, {0, 1, 2}}}));

  auto tt = new_rgraph(3, 1);
  tt.add_arcs(0, 1, 1).add_arcs(1, 2, 1).add_arcs(0, 2, 1);
  EXPECT_EQ(reduce(tt), tt);
  // Reduction stops at a transitive graph, not necessarily a minimum one.
  EXPECT_EQ(arc_count(tt), 3);
  EXPECT_EQ(min_arc_lower_bound(imbalance_sequence(tt).values), 2);
}

TEST(ReduceTest, DoublesGoFirst) {
  auto g = new_rgraph(3, 2);
  g.add_arcs(0, 1, 1).add_arcs(1, 2, 1).add_arcs(2, 0, 1).add_arcs(1, 0, 1);
  const auto [reduced, log] = reduce_with_log(g);
  ASSERT_FALSE(log.empty());
  EXPECT_EQ(log.front().kind, MoveKind::double_cancel);
  EXPECT_TRUE(is_transitive(reduced));
}

void check_moves_on(const RGraph& g) {
  const auto seq = imbalance_sequence(g);
  for (auto direction : {Direction::forward, Direction::inverse}) {
    for (const auto& m : find_moves(g, kAllMoveKinds, direction)) {
      const auto h = apply_move(g, m);
      ASSERT_EQ(imbalance_sequence(h), seq) << to_string(m);
      ASSERT_EQ(h.arc_count() - g.arc_count(), m.arc_delta()) << to_string(m);
      ASSERT_TRUE(is_applicable(h, m.inverse())) << to_string(m);
      ASSERT_EQ(apply_move(h, m.inverse()), g) << to_string(m);
    }
  }
}

TEST(TransformProperties, RandomGraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const Multiplicity r = 1 + static_cast<Multiplicity>(rng() % 3);
    const auto g = testing::random_rgraph(rng, n, r);
    check_moves_on(g);
    const auto reduced = reduce(g);
    EXPECT_TRUE(is_transitive(reduced));
    EXPECT_EQ(imbalance_sequence(reduced), imbalance_sequence(g));
    EXPECT_LE(reduced.arc_count(), g.arc_count());
    EXPECT_GE(reduced.arc_count(), min_arc_lower_bound(g.imbalances()));
  }
}

// Graphs with no forward move are transitive; for r = 1 the converse holds too.
TEST(TransformProperties, FixpointIsTransitivityExhaustively) {
  for (Multiplicity r : {1, 2}) {
    std::size_t transitive_with_moves = 0;
    for_each_rgraph({3, r}, [&](const RGraph& g) {
      const bool fixpoint = find_moves(g, kAllMoveKinds, Direction::forward).empty();
      if (fixpoint) {
        EXPECT_TRUE(is_transitive(g)) << io::serialize_graph(g);
      }
      if (r == 1) {
        EXPECT_EQ(fixpoint, is_transitive(g)) << io::serialize_graph(g);
      }
      if (!fixpoint && is_transitive(g)) ++transitive_with_moves;
    });
    if (r == 2) {
      EXPECT_GT(transitive_with_moves, 0u);
    }
  }
}

}  // namespace
}  // namespace imbal
