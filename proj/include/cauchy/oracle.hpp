#pragma once

// Floating-point cross-checks for the exact kernels. Test harness only.

#include "cauchy/path.hpp"
#include "cauchy/poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace cauchy::oracle {

using cplx = std::complex<double>;

struct ApproxRoot {
  double re = 0;
  double im = 0;
  double residual = 0;

  cplx value() const { return {re, im}; }
};

inline cplx to_complex(const GaussianRational& z) { return {z.re.to_double(), z.im.to_double()}; }

inline std::vector<cplx> to_complex(const GaussPoly& p) {
  std::vector<cplx> out;
  out.reserve(p.size());
  for (const auto& a : p.coeffs()) out.push_back(to_complex(a));
  return out;
}

inline cplx horner(const std::vector<cplx>& c, cplx x) {
  cplx acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Durand-Kerner simultaneous iteration. Starts from a perturbed circle of
/// radius given by the Cauchy bound; stops once the largest step is below
/// tol or after max_iter sweeps.
inline std::vector<ApproxRoot> numeric_roots(const GaussPoly& p, double tol = 1e-12, int max_iter = 1000,
                                             unsigned seed = 12345) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "numeric roots of the zero polynomial");
  if (p.is_constant()) throw Error(ErrorKind::ConstantPolynomial, "numeric roots of a constant");
  std::vector<cplx> c = to_complex(p);
  const cplx lead = c.back();
  for (auto& a : c) a /= lead;
  const std::size_t n = c.size() - 1;

  double bound = 0;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[k]));
  const double radius = 0.5 * (1.0 + bound);

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2 * std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius * (1 + jitter(rng)), theta + jitter(rng));
  }

  bool converged = false;
  for (int it = 0; it < max_iter && !converged; ++it) {
    double max_step = 0;
    for (std::size_t k = 0; k < n; ++k) {
      cplx denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) denom *= z[k] - z[j];
      if (denom == cplx(0)) denom = cplx(1e-300, 0);
      const cplx step = horner(c, z[k]) / denom;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    converged = max_step < tol;
  }

  std::vector<ApproxRoot> out;
  out.reserve(n);
  const auto raw = to_complex(p);
  for (const auto& r : z) out.push_back({r.real(), r.imag(), std::abs(horner(raw, r))});
  if (!converged) {
    // Clustered roots converge only linearly; accept when every residual is
    // tiny relative to the magnitude of the terms being summed.
    for (const auto& r : out) {
      double mag = 0, pw = 1;
      for (const auto& a : raw) {
        mag += std::abs(a) * pw;
        pw *= std::abs(r.value());
      }
      if (!(r.residual <= 1e-10 * mag)) throw Error(ErrorKind::NoConvergence, "Durand-Kerner did not converge");
    }
  }
  return out;
}

namespace detail {

inline double distance_to_segment(cplx a, cplx b, cplx z) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  double t = len2 == 0 ? 0 : ((z - a) * std::conj(d)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(a + t * d - z);
}

inline double seg_length(const PathSeg& s) {
  if (auto l = std::get_if<LineSeg>(&s)) return std::abs(to_complex(l->b) - to_complex(l->a));
  const auto& a = std::get<ArcSeg>(s);
  return a.radius.to_double() * std::numbers::pi / 2 * std::abs(static_cast<double>(a.to_quarter - a.from_quarter));
}

inline cplx seg_point(const PathSeg& s, double t) {
  if (auto l = std::get_if<LineSeg>(&s)) return (1 - t) * to_complex(l->a) + t * to_complex(l->b);
  const auto& a = std::get<ArcSeg>(s);
  const double theta = std::numbers::pi / 2 * ((1 - t) * a.from_quarter + t * a.to_quarter);
  return to_complex(a.center) + std::polar(a.radius.to_double(), theta);
}

inline double distance_to_seg(const PathSeg& s, cplx z) {
  if (auto l = std::get_if<LineSeg>(&s)) return distance_to_segment(to_complex(l->a), to_complex(l->b), z);
  const auto& a = std::get<ArcSeg>(s);
  // Closest point on the full circle if its angle is traversed, else an endpoint.
  const cplx c = to_complex(a.center);
  const double r = a.radius.to_double();
  double best = std::min(std::abs(seg_point(s, 0) - z), std::abs(seg_point(s, 1) - z));
  if (z != c) {
    const double lo = std::numbers::pi / 2 * std::min(a.from_quarter, a.to_quarter);
    const double hi = std::numbers::pi / 2 * std::max(a.from_quarter, a.to_quarter);
    double ang = std::arg(z - c);
    for (int k = -3; k <= 3; ++k) {
      const double th = ang + 2 * std::numbers::pi * k;
      if (th >= lo && th <= hi) best = std::min(best, std::abs(std::abs(z - c) - r));
    }
  } else {
    best = r;
  }
  return best;
}

}  // namespace detail

inline double distance_to_loop(const Loop& loop, const GaussianRational& z0) {
  const cplx z = to_complex(z0);
  double best = INFINITY;
  for (const auto& s : loop.segments()) best = std::min(best, detail::distance_to_seg(s, z));
  return best;
}

inline double loop_length(const Loop& loop) {
  double len = 0;
  for (const auto& s : loop.segments()) len += detail::seg_length(s);
  return len;
}

/// (1 / 2pi) times the accumulated principal-branch argument increments
/// over `steps` points spread along the loop by arc length.
inline double numeric_winding(const Loop& loop, const GaussianRational& z0, long steps) {
  const double len = loop_length(loop);
  if (distance_to_loop(loop, z0) < 10 * len / static_cast<double>(steps))
    throw Error(ErrorKind::TooCloseToPath, z0.str() + " is too close to the loop for " + std::to_string(steps) + " steps");
  const cplx z = to_complex(z0);
  double total = 0;
  for (const auto& s : loop.segments()) {
    const long n = std::max(1L, std::lround(static_cast<double>(steps) * detail::seg_length(s) / len));
    cplx prev = detail::seg_point(s, 0) - z;
    for (long k = 1; k <= n; ++k) {
      const cplx cur = detail::seg_point(s, static_cast<double>(k) / static_cast<double>(n)) - z;
      total += std::arg(cur / prev);
      prev = cur;
    }
  }
  return total / (2 * std::numbers::pi);
}

}  // namespace cauchy::oracle
