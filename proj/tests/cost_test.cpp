#include <gtest/gtest.h>

#include "lazyfinger/cost.hpp"
#include "lazyfinger/error.hpp"
#include "lazyfinger/seqgen.hpp"
#include "test_support.hpp"

namespace lazyfinger {
namespace {

using testing::Rng;

TEST(RootFinger, Examples) {
  const StaticTree t3 = build_balanced(3);
  EXPECT_EQ(run_root_finger(t3, SearchSequence(3, {2, 2, 2, 2})).transition_cost, 0u);
  const CostReport r = run_root_finger(t3, SearchSequence(3, {1, 2, 3}));
  EXPECT_EQ(r.transition_cost, 2u);
  EXPECT_EQ(r.initial_descent, 0u);
  EXPECT_EQ(r.total_with_root_start, 2u);
  EXPECT_EQ(run_root_finger(t3, SearchSequence(3, {})).total_with_root_start, 0u);
  EXPECT_THROW(run_root_finger(t3, SearchSequence(4, {1})), InputError);
}

TEST(LazyFinger, Examples) {
  const StaticTree t7 = build_balanced(7);
  const CostReport single = run_lazy_finger(t7, SearchSequence(7, {5}));
  EXPECT_EQ(single.transition_cost, 0u);
  EXPECT_EQ(single.initial_descent, 2u);

  const StaticTree t3 = build_balanced(3);
  const CostReport r = run_lazy_finger(t3, SearchSequence(3, {1, 2, 3}));
  EXPECT_EQ(r.transition_cost, 2u);
  EXPECT_EQ(r.initial_descent, 1u);
  EXPECT_EQ(r.total_with_root_start, 3u);

  EXPECT_EQ(run_lazy_finger(t7, SearchSequence(7, {3, 3, 3, 3})).transition_cost, 0u);
  EXPECT_EQ(run_lazy_finger(t7, SearchSequence(7, {})), CostReport{});
  EXPECT_THROW(run_lazy_finger(t7, SearchSequence(3, {1})), InputError);
}

TEST(LazyFinger, CursorKeepsPosition) {
  const StaticTree t = build_balanced(7);
  LazyFinger f(t);
  EXPECT_EQ(f.position(), 4u);
  EXPECT_EQ(f.move_to(5), 2u);
  EXPECT_EQ(f.position(), 5u);
  EXPECT_EQ(f.move_to(3), 4u);
  EXPECT_THROW(f.move_to(8), InputError);
}

TEST(CostReport, Render) {
  CostReport r{2, 1, 3, 3};
  EXPECT_EQ(r.render(),
            "transition_cost\t2\ninitial_descent\t1\ntotal_with_root_start\t3\nper_search_avg\t1.000000\n");
  EXPECT_EQ((CostReport{0, 0, 2, 3}).per_search_avg(), "0.666667");
  EXPECT_EQ(CostReport{}.per_search_avg(), "0.000000");
}

TEST(CostFromFrequencies, Examples) {
  EXPECT_EQ(cost_from_frequencies(build_balanced(3), PairTable(3)), 0u);

  PairTable p(3);
  p.set(1, 3, 5);
  p.set(3, 1, 5);
  TreeShape s{3, 1, {0, 0, 0, 2}, {0, 3, 0, 0}};  // 1 -> right 3 -> left 2
  EXPECT_EQ(cost_from_frequencies(StaticTree(s), p), 10u);
  EXPECT_EQ(cost_from_frequencies(build_balanced(3), p), 20u);
  EXPECT_THROW(cost_from_frequencies(build_balanced(4), p), InputError);
}

TEST(CostEngine, IdentitiesOnRandomInstances) {
  Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 1, 40);
    const StaticTree t = testing::random_tree(n, rng);
    const SearchSequence x = testing::random_sequence(n, testing::uniform_size(rng, 0, 300), rng);
    const CostReport lazy = run_lazy_finger(t, x);
    const CostReport root = run_root_finger(t, x);

    Cost walked = 0;
    for (std::size_t i = 1; i < x.size(); ++i) walked += testing::walk_distance(t, x[i - 1], x[i]);
    ASSERT_EQ(lazy.transition_cost, walked);
    ASSERT_EQ(lazy.total_with_root_start, testing::closed_form_lazy(t, x));
    ASSERT_EQ(cost_from_frequencies(t, frequencies_from_sequence(x)), lazy.transition_cost);
    ASSERT_LE(lazy.total_with_root_start, 2 * root.transition_cost);
    ASSERT_GE(lazy.total_with_root_start, lazy.transition_cost);
  }
}

}  // namespace
}  // namespace lazyfinger
