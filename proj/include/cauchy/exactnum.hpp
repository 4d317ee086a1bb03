#pragma once

// Exact scalars: rationals, Gaussian rationals, half-integers and signs.
// Backed by GMP; every value is kept in canonical form.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cauchy {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorKind {
  Parse,
  ZeroPolynomial,
  ConstantPolynomial,
  NotDivisible,
  BothZero,
  EndpointIsRoot,
  BadInterval,
  ZeroDenominator,
  PointOnPath,
  NotClosed,
  InvalidSegment,
  RootOnBorder,
  DegenerateRectangle,
  DegenerateDirection,
  NoConvergence,
  TooCloseToPath,
  Internal,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::ZeroPolynomial: return "zero polynomial";
    case ErrorKind::ConstantPolynomial: return "constant polynomial";
    case ErrorKind::NotDivisible: return "not divisible";
    case ErrorKind::BothZero: return "both polynomials zero";
    case ErrorKind::EndpointIsRoot: return "endpoint is a root";
    case ErrorKind::BadInterval: return "bad interval";
    case ErrorKind::ZeroDenominator: return "zero denominator";
    case ErrorKind::PointOnPath: return "point on path";
    case ErrorKind::NotClosed: return "loop not closed";
    case ErrorKind::InvalidSegment: return "invalid segment";
    case ErrorKind::RootOnBorder: return "root on border";
    case ErrorKind::DegenerateRectangle: return "degenerate rectangle";
    case ErrorKind::DegenerateDirection: return "degenerate direction";
    case ErrorKind::NoConvergence: return "no convergence";
    case ErrorKind::TooCloseToPath: return "too close to path";
    case ErrorKind::Internal: return "internal invariant breach";
  }
  return "unknown error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
        kind_(kind),
        detail_(detail) {}
  explicit Error(ErrorKind kind) : Error(kind, "") {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

// ---------------------------------------------------------------------------
// Sign
// ---------------------------------------------------------------------------

class Sign {
 public:
  constexpr Sign() = default;
  constexpr explicit Sign(int v) : v_(v > 0 ? 1 : (v < 0 ? -1 : 0)) {}

  static constexpr Sign negative() { return Sign(-1); }
  static constexpr Sign zero() { return Sign(0); }
  static constexpr Sign positive() { return Sign(1); }

  constexpr int value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  constexpr Sign operator-() const { return Sign(-v_); }
  constexpr Sign operator*(Sign o) const { return Sign(v_ * o.v_); }
  constexpr auto operator<=>(const Sign&) const = default;

 private:
  int v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Sign s) { return os << s.value(); }

// ---------------------------------------------------------------------------
// Integer
// ---------------------------------------------------------------------------

using Integer = mpz_class;

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}                     // NOLINT(implicit)
  Rational(long v) : v_(v) {}                    // NOLINT(implicit)
  Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Rational(const Integer& v) : v_(v) {}          // NOLINT(implicit)
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "p/q" or an exact decimal "d.ddd" (optional sign).
  /// Exponent notation is rejected.
  static Rational parse(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Sign sign() const { return Sign(sgn(v_)); }
  double to_double() const { return v_.get_d(); }

  /// "p" or "p/q".
  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Sign sign_of(const Rational& x) { return x.sign(); }

inline Rational abs(const Rational& x) { return x.sign().value() < 0 ? -x : x; }

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> Rational {
    throw Error(ErrorKind::Parse, "invalid rational '" + std::string(text) + "': " + why);
  };
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) return fail("empty");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto all_digits = [](std::string_view d) {
    if (d.empty()) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };

  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail("expected p/q");
    Integer d(std::string(den), 10);
    if (d == 0) return fail("zero denominator");
    out = Rational(Integer(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      return fail("expected exact decimal");
    std::string digits = std::string(whole) + std::string(frac);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    out = Rational(Integer(digits.empty() ? std::string("0") : digits, 10), scale);
  } else {
    if (!all_digits(s)) return fail("expected integer");
    out = Rational(Integer(std::string(s), 10));
  }
  return negative ? -out : out;
}

// ---------------------------------------------------------------------------
// GaussianRational
// ---------------------------------------------------------------------------

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(int r) : re(r) {}               // NOLINT(implicit)
  GaussianRational(const Rational& r) : re(r) {}   // NOLINT(implicit)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }
  /// |re|^2 + |im|^2
  Rational norm2() const { return re * re + im * im; }
  /// |re| + |im|
  Rational norm1() const { return abs(re) + abs(im); }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.norm2();
    if (n.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  std::string str() const {
    if (im.is_zero()) return re.str();
    std::string out = re.is_zero() ? "" : re.str();
    if (im.sign().value() > 0 && !re.is_zero()) out += "+";
    if (im == Rational(1)) return out + "i";
    if (im == Rational(-1)) return out + "-i";
    return out + im.str() + "*i";
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }
};

// ---------------------------------------------------------------------------
// HalfInteger
// ---------------------------------------------------------------------------

/// A value in (1/2)Z, stored as twice the value.
class HalfInteger {
 public:
  HalfInteger() = default;

  static HalfInteger from_twice(Integer twice) {
    HalfInteger h;
    h.twice_ = std::move(twice);
    return h;
  }
  static HalfInteger from_integer(const Integer& v) { return from_twice(v * 2); }

  const Integer& twice() const { return twice_; }
  bool is_integer() const { return mpz_even_p(twice_.get_mpz_t()) != 0; }
  bool is_zero() const { return twice_ == 0; }

  /// Exact integer value; throws if the value is not an integer.
  Integer to_integer() const {
    if (!is_integer()) throw Error(ErrorKind::Internal, "half-integer " + str() + " is not an integer");
    return twice_ / 2;
  }
  Rational to_rational() const { return Rational(twice_, Integer(2)); }
  double to_double() const { return twice_.get_d() / 2.0; }

  std::string str() const { return is_integer() ? Integer(twice_ / 2).get_str() : twice_.get_str() + "/2"; }

  HalfInteger operator-() const { return from_twice(-twice_); }
  HalfInteger& operator+=(const HalfInteger& o) { twice_ += o.twice_; return *this; }
  HalfInteger& operator-=(const HalfInteger& o) { twice_ -= o.twice_; return *this; }
  friend HalfInteger operator+(HalfInteger a, const HalfInteger& b) { return a += b; }
  friend HalfInteger operator-(HalfInteger a, const HalfInteger& b) { return a -= b; }

  friend bool operator==(const HalfInteger& a, const HalfInteger& b) { return a.twice_ == b.twice_; }
  friend std::strong_ordering operator<=>(const HalfInteger& a, const HalfInteger& b) {
    int c = cmp(a.twice_, b.twice_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const HalfInteger& h) { return os << h.str(); }

 private:
  Integer twice_ = 0;
};

inline HalfInteger half_int(const Integer& numer_of_halves) { return HalfInteger::from_twice(numer_of_halves); }
inline HalfInteger half_int(long numer_of_halves) { return HalfInteger::from_twice(Integer(numer_of_halves)); }

}  // namespace cauchy
