#include "steiner/errors.hpp"
#include "steiner/extremal.hpp"
#include "steiner/serialization.hpp"
#include "steiner/steiner.hpp"
#include "steiner/tree_transforms.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

namespace steiner {
namespace {

std::vector<Vertex> ids(std::initializer_list<Vertex> v) { return v; }

// A spine c1..c6 (0..5) with b1, b2, b3 (6, 7, 8) hanging on c3 and leaves
// a1 on b2 and a2, a3 on b3.
Graph figure_tree() {
  return Graph::from_edges(12, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6},
                                                 {2, 7}, {2, 8}, {7, 9}, {8, 10}, {8, 11}});
}

TEST(IroningOut, StarRecentres) {
  const Graph star = star_graph(3);
  const Graph out = ironing_out(star, IroningMove{0, 1, ids({2, 3})});
  EXPECT_EQ(out, Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}}));
}

TEST(IroningOut, ThreeVertexPath) {
  // x = 0, u = 1, w = 2.
  const Graph out = ironing_out(path_graph(3), IroningMove{1, 2, ids({0})});
  EXPECT_EQ(out, Graph::from_edges(3, std::vector<Edge>{{0, 2}, {1, 2}}));
  EXPECT_TRUE(is_tree(out));
}

TEST(IroningOut, SpineWithHangingBranches) {
  const Graph t = figure_tree();
  const IroningMove move{2, 3, ids({7, 8})};
  const Graph out = ironing_out(t, move);
  const Graph expected = Graph::from_edges(12, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6},
                                                                 {3, 7}, {3, 8}, {7, 9}, {8, 10}, {8, 11}});
  EXPECT_EQ(out, expected);

  const IroningSplit split = ironing_split(t, move);
  EXPECT_EQ(split.u_side, ids({0, 1, 2, 6}));
  EXPECT_EQ(split.w_side, ids({3, 4, 5}));
  EXPECT_EQ(split.rest, ids({7, 8, 9, 10, 11}));

  const WeightFn unit = WeightFn::uniform(12, 1);
  for (unsigned k = 2; k <= 4; ++k) {
    const BigInt gap = sw_gap(t, move, unit, k);
    EXPECT_GT(gap, 0);
    EXPECT_EQ(gap, sw_k_weighted_tree(out, unit, k) - sw_k_weighted_tree(t, unit, k));
  }
}

TEST(IroningOut, Errors) {
  const Graph star = star_graph(3);
  EXPECT_THROW(ironing_out(star, IroningMove{0, 1, {}}), PreconditionError);
  EXPECT_THROW(ironing_out(star, IroningMove{1, 2, ids({0})}), PreconditionError);
  EXPECT_THROW(ironing_out(star, IroningMove{0, 1, ids({1})}), PreconditionError);
  EXPECT_THROW(ironing_out(star, IroningMove{0, 1, ids({2, 2})}), PreconditionError);
  EXPECT_THROW(ironing_out(cycle_graph(4), IroningMove{0, 1, ids({3})}), PreconditionError);
}

TEST(SwGap, BalancedSidesGiveZero) {
  // P_4 with u = 1, w = 2 and A = {0}: U = {1}, W = {2, 3}.
  const Graph p = path_graph(4);
  const IroningMove move{1, 2, ids({0})};
  EXPECT_EQ(sw_gap(p, move, WeightFn(std::vector<std::uint64_t>{1, 2, 1, 1}), 2), 0);
  EXPECT_EQ(sw_gap(p, move, WeightFn(std::vector<std::uint64_t>{5, 2, 1, 1}), 3), 0);
}

TEST(SwGap, PathCrossCheck) {
  const Graph p = path_graph(4);
  const IroningMove move{1, 2, ids({0})};
  const WeightFn unit = WeightFn::uniform(4, 1);
  const BigInt direct = sw_k_weighted(ironing_out(p, move), unit, 2) - sw_k_weighted(p, unit, 2);
  EXPECT_EQ(direct, -1);
  EXPECT_EQ(sw_gap(p, move, unit, 2), direct);
}

TEST(Canonicalize, PathIsUnchanged) {
  const Graph p = path_graph(6);
  const PathCanonicalization result = canonicalize_to_path(p, WeightFn::uniform(6, 1), 3);
  EXPECT_EQ(result.path, p);
  EXPECT_TRUE(result.trace.empty());
  ASSERT_EQ(result.sw_values.size(), 1u);
  EXPECT_EQ(result.sw_values[0], sw_k(p, 3));
}

TEST(Canonicalize, StarBecomesPathInOneMove) {
  const PathCanonicalization result = canonicalize_to_path(star_graph(3), WeightFn::uniform(4, 1), 2);
  ASSERT_EQ(result.trace.size(), 1u);
  EXPECT_EQ(result.trace[0], (IroningMove{0, 3, ids({1})}));
  EXPECT_EQ(result.path, Graph::from_edges(4, std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}}));
  EXPECT_EQ(result.sw_values, (std::vector<BigInt>{9, 10}));
}

TEST(Canonicalize, RandomTreeReachesPathValue) {
  testing::Rng rng(41);
  const Graph t = testing::random_tree(10, rng);
  const PathCanonicalization result = canonicalize_to_path(t, WeightFn::uniform(10, 1), 3);
  EXPECT_LE(result.path.max_degree(), 2u);
  EXPECT_TRUE(is_tree(result.path));
  EXPECT_EQ(result.sw_values.back(), 660);
}

TEST(Canonicalize, Errors) {
  EXPECT_THROW(canonicalize_to_path(cycle_graph(4), WeightFn::uniform(4, 1), 2), PreconditionError);
  EXPECT_THROW(canonicalize_to_path(star_graph(3), WeightFn(std::vector<std::uint64_t>{1, 0, 1, 1}), 2),
               PreconditionError);
}

TEST(Canonicalize, TraceRoundTripsThroughJson) {
  testing::Rng rng(42);
  const Graph t = testing::random_tree(12, rng);
  const PathCanonicalization result = canonicalize_to_path(t, testing::random_weights(12, 1, 3, rng), 2);
  const std::string text = trace_to_json(result.trace);
  EXPECT_EQ(trace_from_json(text), result.trace);
  EXPECT_EQ(trace_to_json(trace_from_json(text)), text);
  EXPECT_EQ(trace_to_json(std::vector<IroningMove>{IroningMove{0, 3, ids({1, 2})}}),
            "[\n  {\n    \"u\": 0,\n    \"w\": 3,\n    \"A\": [\n      1,\n      2\n    ]\n  }\n]\n");
  EXPECT_THROW(trace_from_json("[{\"u\": 0}]"), ParseError);
}

TEST(FundamentalBound, Examples) {
  EXPECT_EQ(fundamental_bound(3, 1, 2), Rational(4));
  EXPECT_EQ(fundamental_bound(4, 1, 3), Rational(10));
  EXPECT_EQ(fundamental_bound(4, 2, 2), Rational(8));
  EXPECT_EQ(sw_k_weighted_tree(path_graph(2), WeightFn(std::vector<std::uint64_t>{2, 2}), 2), 4);
  EXPECT_EQ(fundamental_bound(7, 3, 2), Rational(1, 3) * Rational(8, 3) * 21 + Rational(2, 3) * 21);
  EXPECT_THROW(fundamental_bound(3, 0, 2), PreconditionError);
  EXPECT_THROW(fundamental_bound(3, 1, 4), PreconditionError);
}

// Properties.

TEST(TransformProperties, GapIsExactAndPositive) {
  testing::Rng rng(43);
  int positive_cases = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph t = testing::random_tree(testing::uniform(rng, 3, 10), rng);
    const auto move = testing::random_ironing_move(t, rng);
    if (!move) continue;
    const WeightFn c = testing::random_weights(t.order(), 1, 3, rng);
    const unsigned k = static_cast<unsigned>(testing::uniform(rng, 2, 3));
    const BigInt gap = sw_gap(t, *move, c, k);
    ASSERT_EQ(gap, sw_k_weighted(ironing_out(t, *move), c, k) - sw_k_weighted(t, c, k));
    const IroningSplit split = ironing_split(t, *move);
    if (c.sum(split.u_side) > c.sum(split.w_side) && c.sum(split.rest) >= 1) {
      ASSERT_GT(gap, 0);
      ++positive_cases;
    }
  }
  EXPECT_GT(positive_cases, 50);
}

TEST(TransformProperties, FundamentalBoundHolds) {
  testing::Rng rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph t = testing::random_tree(testing::uniform(rng, 1, 10), rng);
    const WeightFn c = testing::random_weights(t.order(), 1, 3, rng);
    const unsigned k = static_cast<unsigned>(testing::uniform(rng, 2, 3));
    if (c.total() < k) continue;
    ASSERT_LE(Rational(sw_k_weighted_tree(t, c, k)), fundamental_bound(c.total(), c.min(), k));
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    ASSERT_EQ(Rational(sw_k(path_graph(n), std::min<unsigned>(3, n))), fundamental_bound(n, 1, std::min<unsigned>(3, n)));
  }
}

TEST(TransformProperties, CanonicalizationIsMonotoneAndShort) {
  testing::Rng rng(45);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph t = testing::random_tree(testing::uniform(rng, 1, 14), rng);
    const WeightFn c = testing::random_weights(t.order(), 1, 3, rng);
    const unsigned k = static_cast<unsigned>(testing::uniform(rng, 1, 3));
    if (c.total() < k) continue;
    const PathCanonicalization result = canonicalize_to_path(t, c, k);
    ASSERT_LE(result.path.max_degree(), 2u);
    ASSERT_TRUE(is_tree(result.path));
    ASSERT_LE(result.trace.size(), t.order());
    ASSERT_EQ(result.sw_values.size(), result.trace.size() + 1);
    ASSERT_EQ(result.sw_values.front(), sw_k_weighted(t, c, k));
    ASSERT_EQ(result.sw_values.back(), sw_k_weighted(result.path, c, k));
    for (std::size_t i = 1; i < result.sw_values.size(); ++i) {
      ASSERT_GE(result.sw_values[i], result.sw_values[i - 1]);
    }
  }
}

}  // namespace
}  // namespace steiner
