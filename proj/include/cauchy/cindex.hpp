#pragma once

// Cauchy indices of rational functions q/p, using the closed-interval
// convention: right jumps are summed over [a, b), left jumps over (a, b].

#include "cauchy/sturm.hpp"

namespace cauchy {

/// f = numer / denom.
struct RationalFunction {
  RatPoly numer;
  RatPoly denom;

  RationalFunction(RatPoly q, RatPoly p) : numer(std::move(q)), denom(std::move(p)) {
    if (denom.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
  }

  /// Both parts divided by their gcd.
  RationalFunction reduced() const {
    RatPoly g = gcd(denom, numer);
    return {div_exact(numer, g), div_exact(denom, g)};
  }
};

enum class Side { left, right };

/// +1/2 if f tends to +infinity as u approaches x from the given side,
/// -1/2 if it tends to -infinity, 0 otherwise.
inline HalfInteger jump_at(const RationalFunction& f, const Rational& x, Side side) {
  const RationalFunction g = f.reduced();
  if (!g.denom(x).is_zero()) return {};

  // First nonvanishing derivative of the denominator decides its one-sided sign.
  RatPoly d = g.denom;
  unsigned order = 0;
  Rational value = d(x);
  while (value.is_zero()) {
    d = derivative(d);
    ++order;
    value = d(x);
  }
  Sign denom_side = value.sign();
  if (side == Side::left && order % 2 == 1) denom_side = -denom_side;

  const Sign s = g.numer(x).sign() * denom_side;
  return half_int(s.value());
}

/// Index of q/p over [a, b].
inline HalfInteger cindex_polyE(const Rational& a, const Rational& b, const RatPoly& q, const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroDenominator, "Cauchy index with zero denominator");
  if (!(a < b)) throw Error(ErrorKind::BadInterval, "need a < b, got [" + a.str() + ", " + b.str() + "]");
  const RatPoly g = gcd(p, q);
  return half_int(changes_alt_itv_smods(a, b, div_exact(p, g), div_exact(q, g)));
}

/// Index of q/p over the whole real line.
inline HalfInteger cindex_poly_ubd(const RatPoly& q, const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroDenominator, "Cauchy index with zero denominator");
  const RatPoly g = gcd(p, q);
  const auto chain = smods(div_exact(p, g), div_exact(q, g));
  return half_int(changes_alt(chain.signs_at_neg_inf()) - changes_alt(chain.signs_at_pos_inf()));
}

}  // namespace cauchy
