#pragma once

// Piecewise paths made of line segments and quarter-aligned circular arcs,
// their Cauchy indices about a point, and winding numbers.
//
// For a path g on [0, 1] and a point z0 the index is taken of
// f(t) = Im(g(t) - z0) / Re(g(t) - z0). For a closed path avoiding z0 the
// winding number equals minus half of that index.

#include "cauchy/exactnum.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace cauchy {

/// g(t) = (1 - t) a + t b.
struct LineSeg {
  GaussianRational a;
  GaussianRational b;
  friend bool operator==(const LineSeg&, const LineSeg&) = default;
};

/// Circular arc from angle from_quarter * pi/2 to to_quarter * pi/2;
/// counterclockwise iff to_quarter > from_quarter.
struct ArcSeg {
  GaussianRational center;
  Rational radius;
  long from_quarter = 0;
  long to_quarter = 0;
  friend bool operator==(const ArcSeg&, const ArcSeg&) = default;
};

using PathSeg = std::variant<LineSeg, ArcSeg>;

namespace detail {

inline long mod4(long k) { return ((k % 4) + 4) % 4; }

/// cos and sin of k * pi/2.
inline std::pair<int, int> quarter_unit(long k) {
  switch (mod4(k)) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

inline GaussianRational arc_point(const ArcSeg& s, long k) {
  auto [c, sn] = quarter_unit(k);
  return {s.center.re + s.radius * Rational(c), s.center.im + s.radius * Rational(sn)};
}

inline void validate(const ArcSeg& s) {
  if (s.radius.sign().value() <= 0) throw Error(ErrorKind::InvalidSegment, "arc radius must be positive");
  if (s.from_quarter == s.to_quarter) throw Error(ErrorKind::InvalidSegment, "arc with zero sweep");
  if (std::abs(s.to_quarter - s.from_quarter) > 4)
    throw Error(ErrorKind::InvalidSegment, "arc sweeps more than one full turn");
}

inline void validate(const LineSeg&) {}

/// Where a nonzero offset (dx, dy) sits on the circle of directions: either
/// exactly at a quarter angle k*pi/2, or strictly inside quarter j, i.e. in
/// (j*pi/2, (j+1)*pi/2). Both reported mod 4.
struct Direction {
  bool on_quarter;
  long index;
};

inline Direction direction_of(const Rational& dx, const Rational& dy) {
  const int sx = dx.sign().value(), sy = dy.sign().value();
  if (sy == 0) return {true, sx > 0 ? 0 : 2};
  if (sx == 0) return {true, sy > 0 ? 1 : 3};
  if (sx > 0) return {false, sy > 0 ? 0 : 3};
  return {false, sy > 0 ? 1 : 2};
}

/// sign(sigma * sqrt(radicand) - rhs) for radicand >= 0.
inline int sign_sqrt_minus(int sigma, const Rational& radicand, const Rational& rhs) {
  if (sigma == 0 || radicand.is_zero()) return -rhs.sign().value();
  const int rs = rhs.sign().value();
  if (sigma > 0) {
    if (rs <= 0) return 1;
    const Rational sq = rhs * rhs;
    return radicand > sq ? 1 : (radicand < sq ? -1 : 0);
  }
  if (rs >= 0) return -1;
  const Rational sq = rhs * rhs;
  return radicand > sq ? -1 : (radicand < sq ? 1 : 0);
}

}  // namespace detail

inline std::pair<GaussianRational, GaussianRational> seg_endpoints(const LineSeg& s) { return {s.a, s.b}; }

inline std::pair<GaussianRational, GaussianRational> seg_endpoints(const ArcSeg& s) {
  return {detail::arc_point(s, s.from_quarter), detail::arc_point(s, s.to_quarter)};
}

inline std::pair<GaussianRational, GaussianRational> seg_endpoints(const PathSeg& s) {
  return std::visit([](const auto& v) { return seg_endpoints(v); }, s);
}

inline bool point_on_seg(const LineSeg& s, const GaussianRational& z0) {
  const GaussianRational d = s.b - s.a, w = z0 - s.a;
  if (!(d.re * w.im - d.im * w.re).is_zero()) return false;
  // Collinear: parameter t = <w, d> / |d|^2 must lie in [0, 1].
  const Rational dot = w.re * d.re + w.im * d.im;
  const Rational len2 = d.norm2();
  if (len2.is_zero()) return w.is_zero();
  return dot.sign().value() >= 0 && dot <= len2;
}

inline bool point_on_seg(const ArcSeg& s, const GaussianRational& z0) {
  const Rational dx = z0.re - s.center.re, dy = z0.im - s.center.im;
  if (dx * dx + dy * dy != s.radius * s.radius) return false;
  const auto dir = detail::direction_of(dx, dy);
  const long lo = std::min(s.from_quarter, s.to_quarter), hi = std::max(s.from_quarter, s.to_quarter);
  if (dir.on_quarter) {
    for (long k = lo; k <= hi; ++k)
      if (detail::mod4(k) == dir.index) return true;
  } else {
    for (long j = lo; j < hi; ++j)
      if (detail::mod4(j) == dir.index) return true;
  }
  return false;
}

inline bool point_on_seg(const PathSeg& s, const GaussianRational& z0) {
  return std::visit([&](const auto& v) { return point_on_seg(v, z0); }, s);
}

/// Index of a line segment about z0; one of -1, -1/2, 0, 1/2, 1.
inline HalfInteger cindex_line(const GaussianRational& a, const GaussianRational& b, const GaussianRational& z0) {
  if (point_on_seg(LineSeg{a, b}, z0)) throw Error(ErrorKind::PointOnPath, z0.str() + " lies on the segment");
  const Rational c1 = a.re - z0.re;
  const Rational c2 = b.re - z0.re;
  const Rational c3 = a.im * b.re + z0.re * b.im + z0.im * a.re - z0.im * b.re - b.im * a.re - z0.re * a.im;
  const Rational d1 = a.im - z0.im;
  const Rational d2 = b.im - z0.im;
  const int s1 = c1.sign().value(), s2 = c2.sign().value();

  // Crosses the vertical line through z0 in the interior.
  if ((s1 > 0 && s2 < 0) || (s1 < 0 && s2 > 0)) return half_int(c3.sign().value() > 0 ? 2 : -2);

  // Exactly one endpoint on the vertical line.
  if (((s1 == 0) != (s2 == 0)) && (s1 != 0 || !d1.is_zero()) && (s2 != 0 || !d2.is_zero())) {
    const bool plus = (s1 == 0 && ((s2 > 0) == (d1.sign().value() > 0))) ||
                      (s2 == 0 && ((s1 > 0) == (d2.sign().value() < 0)));
    return half_int(plus ? 1 : -1);
  }
  return {};
}

inline HalfInteger cindex_line(const LineSeg& s, const GaussianRational& z0) { return cindex_line(s.a, s.b, z0); }

/// Index of a quarter-aligned arc about z0.
///
/// Poles of f are the arc points with cos(theta) = u, u = (Re z0 - Re c) / r.
/// At such a point the numerator r sin(theta) - dy is decided by comparing
/// squares, the denominator r cos(theta) - dx changes sign according to
/// -r sin(theta), and at tangencies (sin(theta) = 0) keeps the sign of
/// -r cos(theta) on both sides.
inline HalfInteger cindex_arc(const ArcSeg& s, const GaussianRational& z0) {
  detail::validate(s);
  if (point_on_seg(s, z0)) throw Error(ErrorKind::PointOnPath, z0.str() + " lies on the arc");

  const Rational dx = z0.re - s.center.re, dy = z0.im - s.center.im;
  const Rational& r = s.radius;
  const Rational r2 = r * r, dx2 = dx * dx;
  if (dx2 > r2) return {};

  const bool ccw = s.to_quarter > s.from_quarter;
  const long lo = std::min(s.from_quarter, s.to_quarter), hi = std::max(s.from_quarter, s.to_quarter);
  const int su = dx.sign().value();
  const Rational radicand = r2 - dx2;  // r^2 sin^2 at the crossing

  Integer twice = 0;
  // Contribution of one crossing. theta_pos: quarter index if at a quarter
  // point (may be an endpoint), otherwise unused. sin_sign, cos_sign: signs
  // of sin/cos at the crossing. num: sign of the numerator there.
  auto add = [&](bool at_quarter, long theta_pos, int sin_sign, int cos_sign, int num) {
    int d_theta_right, d_theta_left;
    if (sin_sign != 0) {
      d_theta_right = -sin_sign;
      d_theta_left = sin_sign;
    } else {
      d_theta_right = d_theta_left = -cos_sign;
    }
    const int d_t_right = ccw ? d_theta_right : d_theta_left;
    const int d_t_left = ccw ? d_theta_left : d_theta_right;
    const int jump_plus = num * d_t_right;   // in halves
    const int jump_minus = num * d_t_left;   // in halves

    bool at_start = false, at_end = false;
    if (at_quarter) {
      at_start = theta_pos == s.from_quarter;
      at_end = theta_pos == s.to_quarter;
    }
    if (!at_end) twice += jump_plus;
    if (!at_start) twice -= jump_minus;
  };

  if (radicand.is_zero()) {
    // Tangency at theta = 0 (u = 1) or theta = pi (u = -1).
    const long target = su > 0 ? 0 : 2;
    const int num = -dy.sign().value();  // r*0 - dy
    for (long k = lo; k <= hi; ++k)
      if (detail::mod4(k) == target) add(true, k, 0, su, num);
  } else if (su == 0) {
    // theta = pi/2 or 3pi/2; both are quarter points.
    for (long k = lo; k <= hi; ++k) {
      const long m = detail::mod4(k);
      if (m != 1 && m != 3) continue;
      const int sn = m == 1 ? 1 : -1;
      const int num = (r * Rational(sn) - dy).sign().value();
      add(true, k, sn, 0, num);
    }
  } else {
    // Two crossings per turn, strictly inside quarters: sin > 0 in quarter
    // 0 (u > 0) or 1 (u < 0); sin < 0 in quarter 3 (u > 0) or 2 (u < 0).
    const long upper_q = su > 0 ? 0 : 1, lower_q = su > 0 ? 3 : 2;
    for (long j = lo; j < hi; ++j) {
      const long m = detail::mod4(j);
      if (m != upper_q && m != lower_q) continue;
      const int sn = m == upper_q ? 1 : -1;
      const int num = detail::sign_sqrt_minus(sn, radicand, dy);
      add(false, 0, sn, su, num);
    }
  }
  return HalfInteger::from_twice(twice);
}

inline HalfInteger cindex_seg(const PathSeg& s, const GaussianRational& z0) {
  return std::visit(
      [&](const auto& v) -> HalfInteger {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, LineSeg>)
          return cindex_line(v, z0);
        else
          return cindex_arc(v, z0);
      },
      s);
}

inline PathSeg reversed(const PathSeg& s) {
  if (auto l = std::get_if<LineSeg>(&s)) return LineSeg{l->b, l->a};
  const auto& a = std::get<ArcSeg>(s);
  return ArcSeg{a.center, a.radius, a.to_quarter, a.from_quarter};
}

// ---------------------------------------------------------------------------
// Loop
// ---------------------------------------------------------------------------

/// A closed sequence of segments. Construction checks that consecutive
/// segments meet exactly and that the last one returns to the start.
class Loop {
 public:
  explicit Loop(std::vector<PathSeg> segs) : segs_(std::move(segs)) {
    if (segs_.empty()) throw Error(ErrorKind::NotClosed, "empty loop");
    for (const auto& s : segs_) std::visit([](const auto& v) { detail::validate(v); }, s);
    for (std::size_t k = 0; k < segs_.size(); ++k) {
      const auto end = seg_endpoints(segs_[k]).second;
      const auto next = seg_endpoints(segs_[(k + 1) % segs_.size()]).first;
      if (!(end == next))
        throw Error(ErrorKind::NotClosed,
                    "segment " + std::to_string(k) + " ends at " + end.str() + " but the next starts at " + next.str());
    }
  }

  const std::vector<PathSeg>& segments() const { return segs_; }

  Loop reversed() const {
    std::vector<PathSeg> out;
    out.reserve(segs_.size());
    for (auto it = segs_.rbegin(); it != segs_.rend(); ++it) out.push_back(cauchy::reversed(*it));
    return Loop(std::move(out));
  }

  /// Cyclic shift so that segment k comes first.
  Loop rotated(std::size_t k) const {
    std::vector<PathSeg> out;
    out.reserve(segs_.size());
    for (std::size_t j = 0; j < segs_.size(); ++j) out.push_back(segs_[(j + k) % segs_.size()]);
    return Loop(std::move(out));
  }

  bool contains_point(const GaussianRational& z0) const {
    return std::any_of(segs_.begin(), segs_.end(), [&](const auto& s) { return point_on_seg(s, z0); });
  }

 private:
  std::vector<PathSeg> segs_;
};

/// Sum of the segment indices about z0.
inline HalfInteger cindex_loop(const Loop& loop, const GaussianRational& z0) {
  HalfInteger total;
  for (const auto& s : loop.segments()) total += cindex_seg(s, z0);
  return total;
}

inline Integer winding_number(const Loop& loop, const GaussianRational& z0) {
  if (loop.contains_point(z0)) throw Error(ErrorKind::PointOnPath, z0.str() + " lies on the loop");
  const HalfInteger total = cindex_loop(loop, z0);
  if (mpz_divisible_ui_p(total.twice().get_mpz_t(), 4) == 0)
    throw Error(ErrorKind::Internal, "loop index " + total.str() + " is not an even integer");
  return -total.twice() / 4;
}

}  // namespace cauchy
