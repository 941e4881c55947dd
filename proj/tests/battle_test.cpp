#include <gtest/gtest.h>

#include <sstream>

#include "wormlab/battle.hpp"
#include "wormlab/lemma_lab.hpp"

using namespace wormlab;

namespace {

Worm w(const char* text) { return parse_worm(text); }

}  // namespace

TEST(Battle, DeathSteps) {
  const Budget b;
  EXPECT_EQ(battle(Worm::of({0}), b).death_step, 1u);
  EXPECT_EQ(battle(Worm::of({1}), b).death_step, 3u);
  EXPECT_EQ(battle(Worm::of({0, 0}), b).death_step, 2u);
  EXPECT_EQ(battle(Worm::of({2}), b).death_step, 51u);
  EXPECT_EQ(battle(w("w"), b).death_step, 5u);
  EXPECT_EQ(battle(Worm(), b).death_step, 0u);
  EXPECT_EQ(battle(Worm::of({1, 0, 1}), b).death_step, 11u);
  EXPECT_EQ(battle(Worm::of({1, 1}), b).death_step, 19u);
}

TEST(Battle, TraceOfOne) {
  const BattleTrace t = battle(Worm::of({1}), Budget{});
  ASSERT_EQ(t.records.size(), 4u);
  EXPECT_EQ(t.records[0].worm, Worm::of({1}));
  EXPECT_EQ(t.records[1].worm, Worm::of({0, 0}));
  EXPECT_EQ(t.records[2].worm, Worm::of({0}));
  EXPECT_EQ(t.records[3].worm, Worm());
  EXPECT_TRUE(validate_trace(t));
}

TEST(Battle, MatchesOracle) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Worm a = random_transfinite_worm(rng, 3, 2, 1);
    const OracleBattle oracle = brute_force_battle(a, 1, 20'000, 4096);
    if (!oracle.death_step) continue;
    const BattleTrace t = battle(a, Budget{});
    EXPECT_EQ(t.death_step, oracle.death_step) << a.to_string();
    for (const auto& r : t.records) {
      if (r.worm) {
        EXPECT_EQ(*r.worm, oracle.worms[r.step]) << a.to_string() << " step " << r.step;
      }
    }
  }
}

TEST(Battle, BudgetExceeded) {
  Budget b;
  b.max_steps = 100;
  const BattleTrace t = battle(Worm::of({3}), b);
  EXPECT_FALSE(t.death_step);
  EXPECT_TRUE(t.budget_exceeded);
  EXPECT_TRUE(validate_trace(t));
}

TEST(Battle, LengthBudget) {
  Budget b;
  b.max_term_size = 64;
  const BattleTrace t = battle(Worm::of({3}), b);
  EXPECT_FALSE(t.death_step);
  for (const auto& r : t.records) EXPECT_LE(r.length, 64u);
}

TEST(Battle, RunBracketsFromIndex) {
  const BattleTrace t = run_brackets(Worm::of({1}), 4, Budget{});
  EXPECT_EQ(t.first_index, 4u);
  EXPECT_EQ(t.death_step, 6u);
  EXPECT_TRUE(validate_trace(t));
  const BattleTrace capped = run_brackets(Worm::of({1}), 4, Budget{}, {}, 3);
  EXPECT_FALSE(capped.death_step);
  EXPECT_EQ(capped.total_steps, 3u);
}

TEST(Battle, ValidateRejectsMutations) {
  BattleTrace t = battle(Worm::of({1, 1}), Budget{});
  ASSERT_TRUE(validate_trace(t));
  BattleTrace bad = t;
  bad.records[2].worm = Worm::of({5});
  EXPECT_FALSE(validate_trace(bad));
  bad = t;
  bad.records[3].step = 7;
  EXPECT_FALSE(validate_trace(bad));
  bad = t;
  bad.records[1].length += 1;
  EXPECT_FALSE(validate_trace(bad));
  bad = t;
  bad.death_step = *t.death_step + 1;
  EXPECT_FALSE(validate_trace(bad));
  bad = t;
  bad.first_index = 2;
  EXPECT_FALSE(validate_trace(bad));
}

TEST(Battle, Checkpoints) {
  BattleOptions opts;
  opts.full_records = 4;
  const BattleTrace t = battle(Worm::of({2}), Budget{}, opts);
  EXPECT_EQ(t.death_step, 51u);
  EXPECT_TRUE(validate_trace(t));
  std::size_t full = 0;
  for (const auto& r : t.records) full += r.worm.has_value();
  EXPECT_LT(full, t.records.size());
}

TEST(Battle, Export) {
  const BattleTrace t = battle(Worm::of({1}), Budget{});
  std::ostringstream csv;
  write_csv(csv, t);
  EXPECT_EQ(csv.str(), "step,length,leading\n0,1,1\n1,2,0\n2,1,0\n3,0,T\n");
  std::ostringstream json;
  write_json_lines(json, t);
  EXPECT_NE(json.str().find(R"({"length":2,"step":1,"worm":"0.0"})"), std::string::npos);
  EXPECT_NE(json.str().find(R"("death_step":3)"), std::string::npos);
}
