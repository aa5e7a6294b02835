#include <gtest/gtest.h>

#include <random>

#include "pincer_ml/baselines.hpp"
#include "support/fixtures.hpp"

namespace pincer_ml {
namespace {

using testing::codes;

LevelConfig config(DescentPolicy policy = DescentPolicy::FrequentParents) {
  LevelConfig cfg;
  cfg.minsup_per_level = {3, 2, 2};
  cfg.descent_policy = policy;
  return cfg;
}

TEST(Apriori, BookstoreLevelOne) {
  const LevelMatrix m = project_to_level(testing::bookstore(), 1);
  PassCounter counter;
  const AprioriResult r = apriori(m, 3, counter);
  EXPECT_EQ(counter.passes(), 4u);
  ASSERT_EQ(r.trace.size(), 4u);
  EXPECT_EQ(r.trace[0].candidates, 9u);
  EXPECT_EQ(r.trace[1].candidates, 21u);
  EXPECT_EQ(r.trace[2].candidates, 4u);
  EXPECT_EQ(r.trace[3].candidates, 1u);
  EXPECT_EQ(r.frequent.size(), 21u);
  EXPECT_EQ(r.frequent.back(), (FrequentSet{codes(m, {"C**", "D**", "E**", "G**"}), 4}));
  const std::vector<FrequentSet> want = {{codes(m, {"B**", "C**"}), 3},
                                         {codes(m, {"E**", "F**"}), 4},
                                         {codes(m, {"E**", "H**"}), 3},
                                         {codes(m, {"C**", "D**", "E**", "G**"}), 4}};
  EXPECT_EQ(maximal_of(r.frequent), want);
}

TEST(Apriori, SaturatedTransaction) {
  for (std::size_t width = 1; width <= 8; ++width) {
    std::vector<ItemIndex> all(width);
    for (std::size_t i = 0; i < width; ++i) all[i] = static_cast<ItemIndex>(i);
    const LevelMatrix m(1, testing::letter_vocabulary(width), {Itemset(all)});
    PassCounter counter;
    const AprioriResult r = apriori(m, 1, counter);
    EXPECT_EQ(r.frequent.size(), (std::size_t{1} << width) - 1);
    EXPECT_EQ(counter.passes(), width);
  }
}

TEST(AprioriProperty, MatchesExpandedPincer) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const LevelMatrix m = testing::random_matrix(rng, 12, 40);
    const Support minsup = 1 + rng() % 5;
    PassCounter a_counter;
    const AprioriResult a = apriori(m, minsup, a_counter);
    const PincerResult p = pincer_search(m, minsup);
    PassCounter e_counter;
    ASSERT_EQ(a.frequent, expand_frequent(p.maximal_itemsets(), m, e_counter)) << "round " << round;
    ASSERT_EQ(maximal_of(a.frequent), p.mfs) << "round " << round;
    ASSERT_LE(p.trace.passes, a_counter.passes()) << "round " << round;
  }
}

TEST(MlT2L1, AgreesWithFrequentParentsDriver) {
  const TransactionDB db = testing::bookstore();
  const MultiLevelResult base = ml_t2l1(db, config());
  const MultiLevelResult pincer = mine_multilevel(db, config());
  EXPECT_EQ(base.algorithm, "ml_t2l1");
  ASSERT_EQ(base.levels.size(), pincer.levels.size());
  for (std::size_t l = 0; l < base.levels.size(); ++l) {
    EXPECT_EQ(base.levels[l].vocabulary(), pincer.levels[l].vocabulary());
    EXPECT_EQ(base.levels[l].maximal, pincer.levels[l].maximal);
    EXPECT_EQ(base.levels[l].frequent, pincer.levels[l].frequent);
    EXPECT_EQ(base.levels[l].rules, pincer.levels[l].rules);
  }
  EXPECT_LT(pincer.total_passes(), base.total_passes());

  // The baseline ignores the configured policy.
  const MultiLevelResult other = ml_t2l1(db, config(DescentPolicy::MaximalItemsetItems));
  ASSERT_EQ(other.levels.size(), base.levels.size());
  for (std::size_t l = 0; l < base.levels.size(); ++l) {
    EXPECT_EQ(other.levels[l].vocabulary(), base.levels[l].vocabulary());
  }
}

TEST(MlT2L1, EmptyDatabase) {
  const TransactionDB db(testing::bookstore_taxonomy(), {});
  EXPECT_EQ(ml_t2l1(db, config()).total_passes(), 0u);
  EXPECT_TRUE(ml_t2l1(db, config()).levels.empty());
}

TEST(Compare, BookstoreRows) {
  const TransactionDB db = testing::bookstore();
  const ComparisonReport rep = compare(mine_multilevel(db, config()), ml_t2l1(db, config()));
  EXPECT_EQ(rep.algorithm_a, "pincer");
  EXPECT_EQ(rep.algorithm_b, "ml_t2l1");
  std::vector<std::size_t> level1_k;
  for (const auto& r : rep.rows)
    if (r.level == 1) level1_k.push_back(r.k);
  EXPECT_EQ(level1_k, (std::vector<std::size_t>{1, 2, 3, 4}));
  ASSERT_FALSE(rep.level_passes.empty());
  EXPECT_EQ(rep.level_passes[0].passes_a, 3u);
  EXPECT_EQ(rep.level_passes[0].passes_b, 4u);
  EXPECT_LT(rep.total_passes_a, rep.total_passes_b);
  EXPECT_LE(rep.total_candidates_a, rep.total_candidates_b);
  for (const auto& r : rep.rows) {
    EXPECT_EQ(r.candidates_delta(), static_cast<std::int64_t>(r.candidates_a) - static_cast<std::int64_t>(r.candidates_b));
  }
}

TEST(Compare, IdenticalRunsAndMismatch) {
  const TransactionDB db = testing::bookstore();
  const MultiLevelResult run = mine_multilevel(db, config());
  const ComparisonReport same = compare(run, run);
  for (const auto& r : same.rows) {
    EXPECT_EQ(r.candidates_delta(), 0);
    EXPECT_EQ(r.frequent_delta(), 0);
  }
  EXPECT_EQ(same.total_passes_a, same.total_passes_b);

  MultiLevelResult other = run;
  other.fingerprint ^= 1;
  try {
    compare(run, other);
    FAIL() << "expected InputMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InputMismatch);
  }
}

}  // namespace
}  // namespace pincer_ml
