#pragma once

// Dense univariate polynomials over Rational and GaussianRational.

#include "cauchy/exactnum.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace cauchy {

/// Dense polynomial with ascending coefficients. The highest stored
/// coefficient is never zero; the zero polynomial has no coefficients.
template <typename T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }
  /// c * x^k
  static Poly monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Degree; nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  /// Degree, or throws ZeroPolynomial.
  std::size_t deg() const {
    if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial);
    return c_.size() - 1;
  }

  std::span<const T> coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  /// Coefficient of x^k (zero beyond the degree).
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& lead() const {
    if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial);
    return c_.back();
  }

  template <typename X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Poly operator-() const {
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(-a);
    return Poly(std::move(v));
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  Poly scaled(const T& s) const {
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(a * s);
    return Poly(std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Leading coefficient scaled to one. Zero stays zero.
  Poly monic() const {
    if (is_zero()) return {};
    T inv = T(1) / c_.back();
    return scaled(inv);
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<T> c_;
};

/// Ascending coefficients, e.g. [-1, 0, 1].
template <typename T>
std::ostream& operator<<(std::ostream& os, const Poly<T>& p) {
  os << "[";
  for (std::size_t k = 0; k < p.size(); ++k) os << (k ? ", " : "") << p.coeffs()[k];
  return os << "]";
}

using RatPoly = Poly<Rational>;
using GaussPoly = Poly<GaussianRational>;

template <typename T>
Poly<T> pow(Poly<T> base, unsigned e) {
  Poly<T> out = Poly<T>::constant(T(1));
  while (e) {
    if (e & 1u) out *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Basic operations
// ---------------------------------------------------------------------------

template <typename T>
T eval(const Poly<T>& p, const T& x) {
  return p(x);
}

inline GaussianRational eval(const GaussPoly& p, const GaussianRational& x) { return p(x); }

template <typename T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.size() <= 1) return {};
  std::vector<T> v;
  v.reserve(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) v.push_back(p.coeffs()[k] * T(Rational(static_cast<long>(k))));
  return Poly<T>(std::move(v));
}

inline GaussPoly to_gauss(const RatPoly& p) {
  std::vector<GaussianRational> v;
  v.reserve(p.size());
  for (const auto& a : p.coeffs()) v.emplace_back(a);
  return GaussPoly(std::move(v));
}

inline GaussPoly conj(const GaussPoly& p) {
  std::vector<GaussianRational> v;
  v.reserve(p.size());
  for (const auto& a : p.coeffs()) v.push_back(a.conj());
  return GaussPoly(std::move(v));
}

/// q(t) = p(a + b t), by Horner's scheme on polynomials.
template <typename T>
Poly<T> compose_affine(const Poly<T>& p, const T& a, const T& b) {
  Poly<T> inner({a, b});
  Poly<T> acc;
  auto cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * inner + Poly<T>::constant(*it);
  return acc;
}

/// Coefficientwise real and imaginary parts: p = re + i*im.
inline std::pair<RatPoly, RatPoly> re_im_parts(const GaussPoly& p) {
  std::vector<Rational> re, im;
  re.reserve(p.size());
  im.reserve(p.size());
  for (const auto& a : p.coeffs()) {
    re.push_back(a.re);
    im.push_back(a.im);
  }
  return {RatPoly(std::move(re)), RatPoly(std::move(im))};
}

/// Euclidean division over a field; returns (quotient, remainder).
template <typename T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& p, const Poly<T>& d) {
  if (d.is_zero()) throw Error(ErrorKind::ZeroDenominator, "polynomial division by zero");
  if (p.size() < d.size()) return {Poly<T>{}, p};
  std::vector<T> r(p.coeffs().begin(), p.coeffs().end());
  std::vector<T> q(p.size() - d.size() + 1, T(0));
  const auto dc = d.coeffs();
  const T inv = T(1) / dc.back();
  const bool unit = dc.back() == T(1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const T& top = r[k + dc.size() - 1];
    if (top.is_zero()) continue;
    T f = unit ? top : top * inv;
    for (std::size_t j = 0; j < dc.size(); ++j) r[k + j] -= f * dc[j];
    q[k] = std::move(f);
  }
  r.resize(dc.size() - 1);
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <typename T>
Poly<T> rem(const Poly<T>& p, const Poly<T>& d) {
  return divmod(p, d).second;
}

/// Quotient p / g, which must be exact.
template <typename T>
Poly<T> div_exact(const Poly<T>& p, const Poly<T>& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroDenominator, "exact division by the zero polynomial");
  auto [q, r] = divmod(p, g);
  if (!r.is_zero()) throw Error(ErrorKind::NotDivisible, "nonzero remainder in exact division");
  return q;
}

// ---------------------------------------------------------------------------
// Integer polynomials (internal)
// ---------------------------------------------------------------------------

namespace detail {

using ZPoly = std::vector<Integer>;  // ascending, trimmed

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& a : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divides by the (positive) content; signs are preserved.
inline void make_primitive(ZPoly& p) {
  Integer g = content(p);
  if (g > 1)
    for (auto& a : p) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

/// Positive rational multiple of p with coprime integer coefficients.
inline ZPoly primitive_integer(const RatPoly& p) {
  Integer l = 1;
  for (const auto& a : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.raw().get_den_mpz_t());
  ZPoly out;
  out.reserve(p.size());
  for (const auto& a : p.coeffs()) {
    Integer v = a.raw().get_num() * (l / a.raw().get_den());
    out.push_back(std::move(v));
  }
  make_primitive(out);
  return out;
}

inline RatPoly to_rat(const ZPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& a : p) v.emplace_back(a);
  return RatPoly(std::move(v));
}

/// Pseudo-remainder: lc(d)^(deg a - deg d + 1) * a mod d. Returns the
/// remainder and whether the multiplier lc(d)^(...) is negative.
inline std::pair<ZPoly, bool> pseudo_rem(ZPoly a, const ZPoly& d) {
  if (a.size() < d.size()) return {std::move(a), false};
  const std::size_t delta = a.size() - d.size();
  const Integer& l = d.back();
  std::size_t steps = 0;
  while (!a.empty() && a.size() >= d.size()) {
    const std::size_t shift = a.size() - d.size();
    Integer top = a.back();
    for (auto& c : a) c *= l;
    for (std::size_t j = 0; j < d.size(); ++j) a[shift + j] -= top * d[j];
    trim(a);
    ++steps;
  }
  // Pad the multiplier to exactly delta + 1 factors of l.
  Integer extra;
  mpz_pow_ui(extra.get_mpz_t(), l.get_mpz_t(), delta + 1 - steps);
  if (extra != 1)
    for (auto& c : a) c *= extra;
  const bool negative = l < 0 && (delta + 1) % 2 == 1;
  return {std::move(a), negative};
}

/// Positive multiple of (-(a rem d)), made primitive.
inline ZPoly neg_rem_primitive(const ZPoly& a, const ZPoly& d) {
  auto [r, negative] = pseudo_rem(a, d);
  if (!negative)
    for (auto& c : r) c = -c;
  make_primitive(r);
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// gcd / squarefree part / root bound
// ---------------------------------------------------------------------------

/// Monic gcd over Q[x] via the primitive pseudo-remainder sequence over Z[x].
/// gcd(0, 0) = 0.
inline RatPoly gcd(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  detail::ZPoly a = detail::primitive_integer(p);
  detail::ZPoly b = detail::primitive_integer(q);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    auto [r, negative] = detail::pseudo_rem(a, b);
    (void)negative;
    detail::make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return detail::to_rat(a).monic();
}

/// Monic gcd over Q(i)[x] by Euclid with monic remainders.
inline GaussPoly gcd(const GaussPoly& p, const GaussPoly& q) {
  GaussPoly a = p.monic(), b = q.monic();
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.is_zero()) {
    GaussPoly r = rem(a, b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// p / gcd(p, p'), monic.
template <typename T>
Poly<T> squarefree_part(const Poly<T>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree part of the zero polynomial");
  return div_exact(p, gcd(p, derivative(p))).monic();
}

/// 1 + max_k |a_k|_1 / |a_n|_inf, where |z|_1 = |Re z| + |Im z| and
/// |z|_inf = max(|Re z|, |Im z|). Bounds the modulus of every root; for a
/// real leading coefficient the two norms of a_n coincide.
inline Rational cauchy_root_bound(const GaussPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root bound of the zero polynomial");
  if (p.is_constant()) throw Error(ErrorKind::ConstantPolynomial, "root bound of a constant");
  const auto cs = p.coeffs();
  const Rational lead = std::max(abs(cs.back().re), abs(cs.back().im));
  Rational best = 0;
  for (std::size_t k = 0; k + 1 < cs.size(); ++k) best = std::max(best, cs[k].norm1() / lead);
  return Rational(1) + best;
}

}  // namespace cauchy
