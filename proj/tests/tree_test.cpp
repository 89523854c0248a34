#include <gtest/gtest.h>

#include <bit>

#include "lazyfinger/error.hpp"
#include "lazyfinger/tree.hpp"
#include "test_support.hpp"

namespace lazyfinger {
namespace {

using testing::Rng;

TreeShape shape(std::size_t n, Key root, std::vector<std::pair<Key, Key>> children) {
  TreeShape s{n, root, std::vector<Key>(n + 1, kNone), std::vector<Key>(n + 1, kNone)};
  for (Key k = 1; k <= n; ++k) {
    s.left[k] = children[k - 1].first;
    s.right[k] = children[k - 1].second;
  }
  return s;
}

TEST(ValidateTree, SingleNode) {
  EXPECT_TRUE(validate_tree(shape(1, 1, {{0, 0}})));
  EXPECT_TRUE(validate_tree(StaticTree(shape(1, 1, {{0, 0}}))));
}

TEST(ValidateTree, RejectsInorderViolation) {
  // left[2] = 3 breaks the search-tree order.
  EXPECT_FALSE(validate_tree(shape(3, 2, {{0, 0}, {3, 1}, {0, 0}})));
  EXPECT_FALSE(validate_tree(shape(3, 2, {{0, 0}, {3, 0}, {0, 0}})));
}

TEST(ValidateTree, BalancedSeven) {
  EXPECT_TRUE(validate_tree(
      shape(7, 4, {{0, 0}, {1, 3}, {0, 0}, {2, 6}, {0, 0}, {5, 7}, {0, 0}})));
}

TEST(ValidateTree, RejectsCyclesSharedChildrenAndBadIndices) {
  EXPECT_FALSE(validate_tree(shape(2, 1, {{0, 2}, {0, 1}})));       // cycle
  EXPECT_FALSE(validate_tree(shape(3, 2, {{0, 0}, {1, 3}, {1, 0}})));  // 1 has two parents
  EXPECT_FALSE(validate_tree(shape(2, 1, {{0, 0}, {0, 0}})));       // 2 unreachable
  EXPECT_FALSE(validate_tree(shape(2, 3, {{0, 0}, {0, 0}})));       // root out of range
  EXPECT_FALSE(validate_tree(shape(2, 1, {{0, 5}, {0, 0}})));       // child out of range
  TreeShape empty;
  EXPECT_FALSE(validate_tree(empty));
  EXPECT_THROW(StaticTree(shape(2, 1, {{0, 2}, {0, 1}})), InputError);
}

TEST(BuildBalanced, SmallShapes) {
  const StaticTree one = build_balanced(1);
  EXPECT_EQ(one.root(), 1u);
  EXPECT_EQ(one.left(1), kNone);
  EXPECT_EQ(one.right(1), kNone);

  const StaticTree three = build_balanced(3);
  EXPECT_EQ(three.root(), 2u);
  EXPECT_EQ(three.left(2), 1u);
  EXPECT_EQ(three.right(2), 3u);

  const StaticTree seven = build_balanced(7);
  const std::vector<std::uint32_t> depths{2, 1, 2, 0, 2, 1, 2};
  for (Key k = 1; k <= 7; ++k) EXPECT_EQ(seven.depth(k), depths[k - 1]) << "key " << k;
  EXPECT_THROW(build_balanced(0), UsageError);
}

TEST(BuildBalanced, HeightIsMinimal) {
  for (std::size_t n = 1; n <= 300; ++n) {
    const StaticTree t = build_balanced(n);
    ASSERT_TRUE(validate_tree(t));
    // ceil(lg(n + 1)) - 1
    const auto expected = static_cast<std::uint32_t>(std::bit_width(n)) - 1;
    EXPECT_EQ(t.height(), expected) << "n = " << n;
  }
}

TEST(Lca, Examples) {
  const StaticTree t = build_balanced(7);
  EXPECT_EQ(lca(t, 1, 3), 2u);
  EXPECT_EQ(lca(t, 3, 5), 4u);
  for (Key k = 1; k <= 7; ++k) EXPECT_EQ(lca(t, k, k), k);
  EXPECT_THROW(lca(t, 0, 1), InputError);
  EXPECT_THROW(lca(t, 1, 8), InputError);
}

TEST(StepCost, Examples) {
  const StaticTree t = build_balanced(7);
  for (Key k = 1; k <= 7; ++k) EXPECT_EQ(step_cost(t, k, k), 0u);
  // Frozen from the root-path symmetric-difference walk.
  EXPECT_EQ(testing::walk_distance(t, 4, 7), 2u);
  EXPECT_EQ(testing::walk_distance(t, 5, 3), 4u);
  EXPECT_EQ(step_cost(t, 4, 7), 2u);
  EXPECT_EQ(step_cost(t, 5, 3), 4u);
  EXPECT_THROW(step_cost(t, 9, 1), InputError);
}

TEST(StepCost, MetricPropertiesOnRandomTrees) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 1, 24);
    const StaticTree t = testing::random_tree(n, rng);
    ASSERT_TRUE(validate_tree(t));
    for (Key i = 1; i <= n; ++i) {
      EXPECT_EQ(t.depth(i), step_cost(t, t.root(), i));
      for (Key j = 1; j <= n; ++j) {
        const Cost ij = step_cost(t, i, j);
        EXPECT_EQ(ij, step_cost(t, j, i));
        EXPECT_EQ(ij == 0, i == j);
        for (Key k = 1; k <= n; ++k) EXPECT_LE(step_cost(t, i, k), ij + step_cost(t, j, k));
      }
    }
  }
}

TEST(StepCost, AgreesWithExplicitWalkUpTo64) {
  Rng rng(12);
  std::vector<StaticTree> trees{testing::left_path(64), testing::right_path(64), testing::caterpillar(64),
                                testing::zigzag(64), build_balanced(64)};
  for (int i = 0; i < 30; ++i) trees.push_back(testing::random_tree(testing::uniform_size(rng, 1, 64), rng));
  for (const StaticTree& t : trees) {
    for (Key i = 1; i <= t.size(); ++i) {
      for (Key j = 1; j <= t.size(); ++j) {
        ASSERT_EQ(step_cost(t, i, j), testing::walk_distance(t, i, j));
      }
    }
  }
}

TEST(StaticTree, DerivedTablesAndPreorder) {
  const StaticTree t = testing::caterpillar(9);
  EXPECT_TRUE(validate_tree(t));
  EXPECT_EQ(t.subtree_min(t.root()), 1u);
  EXPECT_EQ(t.subtree_max(t.root()), 9u);
  const std::vector<Key> expected{2, 1, 4, 3, 6, 5, 8, 7, 9};
  EXPECT_EQ(preorder(t), expected);
}

}  // namespace
}  // namespace lazyfinger
