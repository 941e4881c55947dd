#include <gtest/gtest.h>

#include "wormlab/worm.hpp"

using namespace wormlab;

namespace {

Worm w(const char* text) { return parse_worm(text); }
Ordinal o(const char* text) { return parse_ordinal(text); }

}  // namespace

TEST(Worm, ParseAndFormat) {
  EXPECT_TRUE(w("T").is_top());
  EXPECT_TRUE(w("").is_top());
  EXPECT_EQ(w("1.0.w+2").to_string(), "1.0.w+2");
  EXPECT_EQ(w("1.0.1"), Worm::of({1, 0, 1}));
  EXPECT_EQ(Worm().to_string(), "T");
  EXPECT_THROW(w("1..0"), ParseError);
  EXPECT_THROW(w("1.x"), ParseError);
}

TEST(Worm, Length) {
  EXPECT_EQ(length(Worm()), 0u);
  EXPECT_EQ(length(Worm::of({1, 0})), 2u);
  EXPECT_EQ(length(Worm::of({0, 0, 0, 0, 0})), 5u);
}

TEST(Worm, HeadAndRemainder) {
  EXPECT_EQ(head(Worm(), o("3")), Worm());
  EXPECT_EQ(head(Worm::of({2, 1, 3}), Ordinal(2)), Worm::of({2}));
  EXPECT_EQ(remainder(Worm::of({2, 1, 3}), Ordinal(2)), Worm::of({1, 3}));
  const Worm a = Worm::of({0, 4, 2});
  EXPECT_EQ(remainder(a, Ordinal(1)), a);
  EXPECT_EQ(head(Worm::of({3, 5, 2, 7})), Worm::of({3, 5}));
}

TEST(Worm, Chop) {
  EXPECT_EQ(chop(Worm()), Worm());
  EXPECT_EQ(chop(Worm::of({0, 1})), Worm::of({1}));
  EXPECT_EQ(chop(w("w+1")), w("w"));
  EXPECT_THROW(chop(w("w")), DomainError);
}

TEST(Worm, StepDown) {
  EXPECT_EQ(step_down(Worm::of({1}), 1), Worm::of({0, 0}));
  EXPECT_EQ(step_down(w("w"), 3), Worm::of({3}));
  EXPECT_EQ(step_down(Worm::of({2, 1}), 1), Worm::of({1, 1, 1}));
  EXPECT_EQ(step_down(Worm::of({0, 5}), 9), Worm::of({5}));
  EXPECT_EQ(step_down(Worm(), 4), Worm());
}

TEST(Worm, Promote) {
  EXPECT_EQ(promote(Worm()), Worm());
  EXPECT_EQ(promote(Worm::of({0, 1})), Worm::of({1, 2}));
  EXPECT_EQ(promote(w("w")), w("w+1"));
}

TEST(Worm, QForm) {
  EXPECT_EQ(q_form(Ordinal(0), 1, Worm()), Worm::of({0, 0}));
  EXPECT_EQ(q_form(Ordinal(1), 0, Worm::of({1})), Worm::of({1, 1}));
}

TEST(Worm, Tau) {
  EXPECT_EQ(tau(Worm()), TreeOrdinal());
  EXPECT_EQ(tau(Worm::of({0})), TreeOrdinal::units(1));
  EXPECT_EQ(tau(Worm::of({1})), TreeOrdinal::omega_power(TreeOrdinal::units(1)));
  EXPECT_EQ(tau(Worm::of({0, 1})), parse_tree("w+1"));
  EXPECT_EQ(tau(Worm::of({1, 0})), parse_tree("1+w"));
  EXPECT_EQ(tau(Worm::of({1, 0, 1})), parse_tree("w+1+w"));
  EXPECT_THROW(tau(w("w")), DomainError);
}

TEST(Worm, Ordinal) {
  EXPECT_EQ(worm_ordinal(Worm()), Ordinal());
  EXPECT_EQ(worm_ordinal(Worm::of({0})), omega_tower(0));
  EXPECT_EQ(worm_ordinal(Worm::of({1})), omega_tower(1));
  EXPECT_EQ(worm_ordinal(Worm::of({2})), omega_tower(2));
  EXPECT_EQ(worm_ordinal(Worm::of({0, 1})), o("w+1"));
  EXPECT_EQ(worm_ordinal(Worm::of({1, 0})), o("w"));
  EXPECT_EQ(worm_ordinal(Worm::of({1, 0, 1})), o("w*2"));
}

TEST(Worm, Lt0) {
  const Worm a = Worm::of({2, 0, 1});
  EXPECT_FALSE(lt0(a, a));
  EXPECT_TRUE(lt0(Worm::of({0}), Worm::of({1})));
  EXPECT_TRUE(lt0(Worm(), Worm::of({0})));
  EXPECT_TRUE(lt0(step_down(a, 2), a));
}

TEST(Worm, Sub) {
  const Worm c = Worm::of({0, 3});
  EXPECT_TRUE(sub(Worm(), Worm::of({4, 1})));
  EXPECT_TRUE(sub(concat(Worm::of({1}), c), concat(Worm::of({7, 2}), c)));
  EXPECT_FALSE(sub(concat(Worm::of({3}), c), concat(Worm::of({7, 2}), c)));
  const Worm a = concat(Worm::of({4}), prepend(o("w"), c));
  EXPECT_FALSE(sub_m(prepend(Ordinal(5), c), a, 3));
  EXPECT_TRUE(sub_m(prepend(Ordinal(2), c), a, 3));
  EXPECT_TRUE(sub(prepend(Ordinal(5), c), a));
}
