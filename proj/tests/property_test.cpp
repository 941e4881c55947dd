// Seeded randomized properties across modules.

#include <gtest/gtest.h>

#include "wormlab/battle.hpp"
#include "wormlab/hierarchy.hpp"
#include "wormlab/lemma_lab.hpp"

using namespace wormlab;

namespace {

constexpr int kCases = 300;

std::uint64_t pick(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

}  // namespace

TEST(Property, OrdinalTextRoundTrip) {
  Rng rng(1);
  for (int i = 0; i < kCases; ++i) {
    const Ordinal a = random_ordinal(rng, 3);
    EXPECT_EQ(parse_ordinal(a.to_string()), a) << a.to_string();
  }
}

TEST(Property, WormTextRoundTrip) {
  Rng rng(2);
  for (int i = 0; i < kCases; ++i) {
    const Worm a = random_transfinite_worm(rng, 8, 4, 3);
    EXPECT_EQ(parse_worm(a.to_string()), a) << a.to_string();
  }
}

TEST(Property, TreeTextRoundTrip) {
  Rng rng(3);
  for (int i = 0; i < kCases; ++i) {
    const TreeOrdinal t = random_tree(rng, 4);
    EXPECT_EQ(parse_tree(t.to_string()), t) << t.to_string();
  }
}

TEST(Property, CompareIsTotalOrder) {
  Rng rng(4);
  for (int i = 0; i < kCases; ++i) {
    const Ordinal a = random_ordinal(rng, 2);
    const Ordinal b = random_ordinal(rng, 2);
    const Ordinal c = random_ordinal(rng, 2);
    EXPECT_EQ(compare(a, b) == std::strong_ordering::equal, a == b);
    EXPECT_EQ(compare(a, b) == std::strong_ordering::less, compare(b, a) == std::strong_ordering::greater);
    if (a < b && b < c) {
      EXPECT_LT(a, c);
    }
  }
}

TEST(Property, AdditionLaws) {
  Rng rng(5);
  for (int i = 0; i < kCases; ++i) {
    const Ordinal a = random_ordinal(rng, 2);
    const Ordinal b = random_ordinal(rng, 2);
    const Ordinal c = random_ordinal(rng, 2);
    EXPECT_EQ(add(add(a, b), c), add(a, add(b, c)));
    EXPECT_LE(a, add(a, b));
    EXPECT_LE(b, add(a, b));
    if (!b.is_zero()) {
      EXPECT_LT(a, add(a, b));
    }
  }
}

TEST(Property, FundamentalSequenceDescends) {
  Rng rng(6);
  for (int i = 0; i < kCases; ++i) {
    const Ordinal a = random_ordinal(rng, 3);
    if (a.is_zero()) continue;
    const std::uint64_t x = pick(rng, 0, 6);
    const Ordinal ax = fund_seq(a, x);
    EXPECT_LT(ax, a);
    if (a.is_limit()) {
      EXPECT_LT(ax, fund_seq(a, x + 1));
    }
  }
}

TEST(Property, CollapseCommutesWithBrackets) {
  Rng rng(7);
  for (int i = 0; i < kCases; ++i) {
    const Ordinal a = random_ordinal(rng, 2);
    const TreeOrdinal t = canonical_tree(a);
    EXPECT_EQ(collapse(t), a);
    const std::uint64_t x = pick(rng, 0, 5);
    EXPECT_EQ(collapse(fs_std(t, x)), fund_seq(a, x)) << a.to_string() << " " << x;
  }
}

TEST(Property, QFormIsStepDown) {
  Rng rng(8);
  for (int i = 0; i < kCases; ++i) {
    const Ordinal alpha(pick(rng, 0, 3));
    const std::uint64_t k = pick(rng, 0, 4);
    const Worm b = random_worm(rng, 5, 4);
    EXPECT_EQ(q_form(alpha, k, b), step_down(prepend(alpha.successor(), b), k)) << b.to_string();
  }
}

TEST(Property, StepDownDescends) {
  Rng rng(9);
  for (int i = 0; i < kCases; ++i) {
    const Worm a = random_worm(rng, 8, 4, false);
    const std::uint64_t k = pick(rng, 0, 5);
    EXPECT_TRUE(lt0(step_down(a, k), a)) << a.to_string() << " " << k;
  }
}

TEST(Property, TauNaturality) {
  Rng rng(10);
  for (int i = 0; i < kCases; ++i) {
    const Worm a = random_worm(rng, 6, 3, false);
    const std::uint64_t x = pick(rng, 0, 5);
    EXPECT_EQ(tau(step_down(a, x)), fs_worm(tau(a), x + 1)) << a.to_string() << " " << x;
  }
}

TEST(Property, ReductsAreRelated) {
  Rng rng(11);
  for (int i = 0; i < kCases; ++i) {
    const TreeOrdinal t = random_tree(rng, 4);
    EXPECT_TRUE(reduces(t, random_reduct(rng, t, false))) << t.to_string();
    const TreeOrdinal u = random_reduct(rng, t, true);
    EXPECT_TRUE(reduces_end(t, u)) << t.to_string() << " " << u.to_string();
    EXPECT_LE(collapse(u), collapse(t));
  }
}

TEST(Property, ProductionBattleMatchesOracle) {
  Rng rng(12);
  Budget b;
  b.max_steps = 5'000;
  b.max_term_size = 4096;
  for (int i = 0; i < 100; ++i) {
    const Worm a = random_transfinite_worm(rng, 4, 2, 1);
    const std::uint64_t first = pick(rng, 1, 4);
    const BattleTrace t = run_brackets(a, first, b);
    const OracleBattle oracle = brute_force_battle(a, first, b.max_steps, b.max_term_size);
    EXPECT_TRUE(validate_trace(t));
    if (oracle.death_step && t.death_step) {
      EXPECT_EQ(*t.death_step, *oracle.death_step) << a.to_string();
    }
    for (const auto& r : t.records) {
      if (r.worm && r.step < oracle.worms.size()) {
        EXPECT_EQ(*r.worm, oracle.worms[r.step]);
      }
    }
  }
}

TEST(Property, HardyTreeMatchesOrdinalOnCanonicalTrees) {
  Rng rng(13);
  Budget b;
  b.max_steps = 200'000;
  for (int i = 0; i < kCases; ++i) {
    const Ordinal a = random_ordinal(rng, 2, 2, 2);
    const std::uint64_t x = pick(rng, 0, 4);
    const Evaluation ho = hardy_ord(a, x, b);
    if (!ho.value) continue;
    EXPECT_EQ(hardy_tree(canonical_tree(a), x, b).value, ho.value) << a.to_string() << " " << x;
    EXPECT_EQ(collapsed_hardy(a, Natural(x), b).value, ho.value) << a.to_string() << " " << x;
  }
}

TEST(Property, EmittedTracesValidate) {
  Rng rng(14);
  Budget b;
  b.max_steps = 5'000;
  for (int i = 0; i < 100; ++i) {
    const TreeOrdinal t = random_tree(rng, 3);
    const std::uint64_t x = pick(rng, 0, 4);
    EvalTrace std_trace;
    hardy_tree(t, x, b, &std_trace);
    EXPECT_TRUE(validate_trace(std_trace)) << t.to_string();
    EvalTrace worm_trace;
    hardy_tree_wormstyle(t, x, b, &worm_trace);
    EXPECT_TRUE(validate_trace(worm_trace)) << t.to_string();
    EvalTrace ord_trace;
    hardy_ord(collapse(t), x, b, &ord_trace);
    EXPECT_TRUE(validate_trace(ord_trace)) << t.to_string();
  }
}

TEST(Property, SerialAndParallelSweepsAgree) {
  for (const auto& suite : {"stepdown", "tau_naturality", "bridge", "norm_step", "evaluators"}) {
    EXPECT_EQ(sweep(suite, 64, 99, Budget{}, ExecutionPolicy::serial),
              sweep(suite, 64, 99, Budget{}, ExecutionPolicy::parallel))
        << suite;
  }
}

TEST(Property, InstancesReplayFromSeed) {
  for (const auto& suite : suite_names()) {
    if (suite == "fh_sandwich") continue;
    const std::uint64_t seed = instance_seed(5, 3);
    EXPECT_EQ(run_instance(suite, seed, Budget{}), run_instance(suite, seed, Budget{})) << suite;
  }
}
