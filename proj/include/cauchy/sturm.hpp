#pragma once

// Signed remainder sequences and sign-variation counts.

#include "cauchy/poly.hpp"

#include <span>
#include <vector>

namespace cauchy {

/// [p, q, -(p rem q), ...] up to the first zero entry. Entries past the
/// first two are stored as primitive integer polynomials, i.e. positive
/// rational multiples of the true signed remainders; signs at every point
/// are therefore exact.
struct SignedRemainderChain {
  std::vector<RatPoly> polys;

  std::vector<Sign> signs_at(const Rational& x) const {
    std::vector<Sign> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p(x).sign());
    return out;
  }
  std::vector<Sign> signs_at_pos_inf() const {
    std::vector<Sign> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.is_zero() ? Sign::zero() : p.lead().sign());
    return out;
  }
  std::vector<Sign> signs_at_neg_inf() const {
    std::vector<Sign> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
      if (p.is_zero()) {
        out.push_back(Sign::zero());
        continue;
      }
      Sign s = p.lead().sign();
      out.push_back(p.deg() % 2 == 1 ? -s : s);
    }
    return out;
  }
};

inline SignedRemainderChain smods(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::BothZero, "smods(0, 0)");
  SignedRemainderChain chain;
  chain.polys.push_back(p);
  if (q.is_zero()) return chain;
  chain.polys.push_back(q);
  if (p.is_zero()) return chain;

  detail::ZPoly a = detail::primitive_integer(p);
  detail::ZPoly b = detail::primitive_integer(q);
  for (;;) {
    detail::ZPoly r = detail::neg_rem_primitive(a, b);
    if (r.empty()) break;
    chain.polys.push_back(detail::to_rat(r));
    a = std::move(b);
    b = std::move(r);
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Sign variations
// ---------------------------------------------------------------------------

/// Classic variation count; zeros are discarded.
inline long changes(std::span<const Sign> signs) {
  long n = 0;
  int last = 0;
  for (Sign s : signs) {
    if (s.is_zero()) continue;
    if (last != 0 && last != s.value()) ++n;
    last = s.value();
  }
  return n;
}

/// Sum of |sign(v_i) - sign(v_{i+1})|; zeros participate.
inline long changes_alt(std::span<const Sign> signs) {
  long n = 0;
  for (std::size_t i = 0; i + 1 < signs.size(); ++i) {
    int d = signs[i].value() - signs[i + 1].value();
    n += d < 0 ? -d : d;
  }
  return n;
}

namespace detail {
inline std::vector<Sign> signs_of(std::span<const Rational> values) {
  std::vector<Sign> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.sign());
  return out;
}
}  // namespace detail

inline long changes(std::span<const Rational> values) { return changes(detail::signs_of(values)); }
inline long changes_alt(std::span<const Rational> values) { return changes_alt(detail::signs_of(values)); }

inline long changes_itv_smods(const Rational& a, const Rational& b, const RatPoly& p, const RatPoly& q) {
  if (!(a < b)) throw Error(ErrorKind::BadInterval, "need a < b, got [" + a.str() + ", " + b.str() + "]");
  if (p(a).is_zero() || p(b).is_zero())
    throw Error(ErrorKind::EndpointIsRoot, "p vanishes at an interval endpoint");
  const auto chain = smods(p, q);
  return changes(chain.signs_at(a)) - changes(chain.signs_at(b));
}

/// Endpoints may be roots of any chain entry.
inline long changes_alt_itv_smods(const Rational& a, const Rational& b, const RatPoly& p, const RatPoly& q) {
  if (!(a < b)) throw Error(ErrorKind::BadInterval, "need a < b, got [" + a.str() + ", " + b.str() + "]");
  const auto chain = smods(p, q);
  return changes_alt(chain.signs_at(a)) - changes_alt(chain.signs_at(b));
}

/// Variation difference between -infinity and +infinity.
inline long changes_R_smods(const RatPoly& p, const RatPoly& q) {
  const auto chain = smods(p, q);
  return changes(chain.signs_at_neg_inf()) - changes(chain.signs_at_pos_inf());
}

/// Number of distinct real roots of p in (a, b).
inline long sturm_count_interval(const RatPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm count of the zero polynomial");
  return changes_itv_smods(a, b, p, derivative(p));
}

/// Number of distinct real roots of p.
inline long sturm_count_real(const RatPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm count of the zero polynomial");
  return changes_R_smods(p, derivative(p));
}

}  // namespace cauchy
