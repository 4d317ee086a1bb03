#include "cauchy/cindex.hpp"

#include "../support/cindex_oracle.hpp"

#include <gtest/gtest.h>

using namespace cauchy;

namespace {

RatPoly rp(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(std::move(v));
}

struct Instance {
  fixtures::FactoredDenominator fp;
  RatPoly p, q;
  Rational a, b;
};

// Random q/p with q not vanishing at any real root of p, so the oracle's
// factorization describes the reduced function.
Instance random_instance(fixtures::Gen& g) {
  for (;;) {
    Instance in;
    in.fp = fixtures::random_denominator(g, 5);
    in.p = in.fp.expand();
    in.q = g.coin(0.1) ? RatPoly() : g.rat_poly(static_cast<std::size_t>(g.integer(0, 5)), 9, 3);
    if (in.q.is_zero()) in.q = rp({1});
    bool shared = false;
    for (const auto& r : in.fp.roots) shared = shared || in.q(r.at).is_zero();
    if (shared) continue;
    // Endpoints often land on poles so the closed-interval accounting is exercised.
    auto pick = [&]() {
      if (!in.fp.roots.empty() && g.coin(0.3))
        return in.fp.roots[static_cast<std::size_t>(g.integer(0, static_cast<long>(in.fp.roots.size()) - 1))].at;
      return g.rational(14, 4);
    };
    in.a = pick();
    in.b = pick();
    if (in.a == in.b) continue;
    if (in.b < in.a) std::swap(in.a, in.b);
    return in;
  }
}

}  // namespace

TEST(Jump, Examples) {
  const RationalFunction inv_x(rp({1}), rp({0, 1}));
  EXPECT_EQ(jump_at(inv_x, Rational(0), Side::right), half_int(1));
  EXPECT_EQ(jump_at(inv_x, Rational(0), Side::left), half_int(-1));
  const RationalFunction inv_x2(rp({1}), rp({0, 0, 1}));
  EXPECT_EQ(jump_at(inv_x2, Rational(0), Side::left), half_int(1));
  EXPECT_EQ(jump_at(inv_x2, Rational(0), Side::right), half_int(1));
  EXPECT_EQ(jump_at(inv_x, Rational(1), Side::right), half_int(0));
  // x/x has a removable singularity.
  EXPECT_EQ(jump_at(RationalFunction(rp({0, 1}), rp({0, 1})), Rational(0), Side::right), half_int(0));
  EXPECT_THROW(RationalFunction(rp({1}), RatPoly()), Error);
}

TEST(CindexPolyE, Examples) {
  EXPECT_EQ(cindex_polyE(Rational(-1), Rational(1), rp({1}), rp({0, 1})), half_int(2));
  EXPECT_EQ(cindex_polyE(Rational(0), Rational(1), rp({1}), rp({0, 1})), half_int(1));
  EXPECT_EQ(changes_alt_itv_smods(Rational(0), Rational(1), rp({0, 1}), rp({1})), 1);
  EXPECT_EQ(cindex_polyE(Rational(-1), Rational(1), rp({1}), rp({0, 0, 1})), half_int(0));
}

TEST(CindexPolyUbd, Examples) {
  EXPECT_EQ(cindex_poly_ubd(rp({1}), rp({0, 1})), half_int(2));
  EXPECT_EQ(cindex_poly_ubd(RatPoly(), rp({1, 0, 1})), half_int(0));
}

TEST(CindexProperties, MatchesJumpEnumerationOracle) {
  fixtures::Gen g(30);
  for (int k = 0; k < 500; ++k) {
    const Instance in = random_instance(g);
    const long expected = fixtures::oracle_cindex_twice(in.fp, in.q, in.a, in.b);
    ASSERT_EQ(cindex_polyE(in.a, in.b, in.q, in.p).twice(), expected)
        << "q=" << fixtures::describe(in.q) << " p=" << fixtures::describe(in.p) << " [" << in.a << ", " << in.b << "]";
  }
}

TEST(CindexProperties, UbdMatchesJumpAtSum) {
  fixtures::Gen g(31);
  for (int k = 0; k < 300; ++k) {
    const Instance in = random_instance(g);
    const RationalFunction f(in.q, in.p);
    HalfInteger sum;
    for (const auto& r : in.fp.roots) sum = sum + jump_at(f, r.at, Side::right) - jump_at(f, r.at, Side::left);
    ASSERT_EQ(cindex_poly_ubd(in.q, in.p), sum);
    ASSERT_EQ(sum.twice(), fixtures::oracle_cindex_ubd_twice(in.fp, in.q));
  }
}

TEST(CindexProperties, JumpAtMatchesOracleAndIgnoresCommonFactors) {
  fixtures::Gen g(32);
  for (int k = 0; k < 300; ++k) {
    const Instance in = random_instance(g);
    // A shared factor must not change any jump.
    const RatPoly extra = g.rat_poly(static_cast<std::size_t>(g.integer(1, 2)), 5);
    const RationalFunction f(in.q * extra, in.p * extra);
    for (std::size_t i = 0; i < in.fp.roots.size(); ++i) {
      const auto j = fixtures::oracle_jumps(in.fp, in.q, i);
      ASSERT_EQ(jump_at(f, in.fp.roots[i].at, Side::right).twice(), j.right);
      ASSERT_EQ(jump_at(f, in.fp.roots[i].at, Side::left).twice(), j.left);
    }
  }
}

TEST(CindexProperties, IntervalAdditivity) {
  fixtures::Gen g(33);
  int with_pole = 0;
  for (int k = 0; k < 300; ++k) {
    const Instance in = random_instance(g);
    Rational mid = g.coin(0.5) && !in.fp.roots.empty() ? in.fp.roots[0].at : g.rational(14, 4);
    if (!(in.a < mid && mid < in.b)) mid = (in.a + in.b) / Rational(2);
    if (in.p(mid).is_zero()) ++with_pole;
    ASSERT_EQ(cindex_polyE(in.a, in.b, in.q, in.p),
              cindex_polyE(in.a, mid, in.q, in.p) + cindex_polyE(mid, in.b, in.q, in.p));
  }
  EXPECT_GT(with_pole, 0);
}

TEST(CindexProperties, ScalingInvariance) {
  fixtures::Gen g(34);
  for (int k = 0; k < 200; ++k) {
    const Instance in = random_instance(g);
    Rational c = g.rational(9, 9);
    if (c.is_zero()) c = Rational(-3);
    ASSERT_EQ(cindex_polyE(in.a, in.b, in.q.scaled(c), in.p.scaled(c)), cindex_polyE(in.a, in.b, in.q, in.p));
  }
}

TEST(CindexProperties, ClassicVariationIdentity) {
  fixtures::Gen g(35);
  int checked = 0;
  while (checked < 200) {
    const Instance in = random_instance(g);
    if (in.p(in.a).is_zero() || in.p(in.b).is_zero() || in.q(in.a).is_zero() || in.q(in.b).is_zero()) continue;
    if (gcd(in.p, in.q) != rp({1})) continue;
    const HalfInteger idx = cindex_polyE(in.a, in.b, in.q, in.p);
    ASSERT_TRUE(idx.is_integer());
    ASSERT_EQ(Integer(changes_itv_smods(in.a, in.b, in.p, in.q)), idx.to_integer());
    ++checked;
  }
}
