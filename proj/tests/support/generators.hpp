#pragma once

// Seeded random instances shared by the unit and acceptance suites.

#include "cauchy/oracle.hpp"
#include "cauchy/path.hpp"
#include "cauchy/poly.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace cauchy::fixtures {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// num / den with |num| <= max_num, 1 <= den <= max_den.
  Rational rational(long max_num, long max_den = 1) {
    return Rational(Integer(integer(-max_num, max_num)), Integer(integer(1, max_den)));
  }
  GaussianRational gauss(long max_num, long max_den = 1) { return {rational(max_num, max_den), rational(max_num, max_den)}; }

  RatPoly rat_poly(std::size_t degree, long max_num, long max_den = 1) {
    std::vector<Rational> c;
    for (std::size_t k = 0; k <= degree; ++k) c.push_back(rational(max_num, max_den));
    while (c.back().is_zero()) c.back() = rational(max_num, max_den);
    return RatPoly(std::move(c));
  }

  GaussPoly gauss_poly(std::size_t degree, long max_num, long max_den = 1) {
    std::vector<GaussianRational> c;
    for (std::size_t k = 0; k <= degree; ++k) c.push_back(gauss(max_num, max_den));
    while (c.back().is_zero()) c.back() = gauss(max_num, max_den);
    return GaussPoly(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::string describe(const GaussPoly& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < p.size(); ++k) os << (k ? ", " : "") << p.coeffs()[k];
  os << "]";
  return os.str();
}

inline std::string describe(const RatPoly& p) { return describe(to_gauss(p)); }

/// Random closed loop: a start point, a few random lines and quarter-aligned
/// arcs, closed by a final line back to the start.
inline Loop random_loop(Gen& g, std::size_t max_pieces = 6) {
  const GaussianRational start = g.gauss(8, 2);
  GaussianRational cur = start;
  std::vector<PathSeg> segs;
  const std::size_t pieces = static_cast<std::size_t>(g.integer(2, static_cast<long>(max_pieces)));
  for (std::size_t k = 0; k < pieces; ++k) {
    if (g.coin(0.4)) {
      const long k0 = g.integer(-4, 4);
      long sweep = g.integer(-4, 4);
      if (sweep == 0) sweep = 1;
      const Rational r = Rational(Integer(g.integer(1, 12)), Integer(g.integer(1, 3)));
      const auto [c, s] = detail::quarter_unit(k0);
      const GaussianRational center{cur.re - r * Rational(c), cur.im - r * Rational(s)};
      ArcSeg arc{center, r, k0, k0 + sweep};
      cur = seg_endpoints(arc).second;
      segs.emplace_back(arc);
    } else {
      GaussianRational next = g.gauss(10, 3);
      segs.emplace_back(LineSeg{cur, next});
      cur = next;
    }
  }
  segs.emplace_back(LineSeg{cur, start});
  return Loop(std::move(segs));
}

/// Random point whose distance from the loop is at least `margin`, or
/// nullopt after repeated failures.
inline std::optional<GaussianRational> random_point_off(Gen& g, const Loop& loop, double margin) {
  for (int tries = 0; tries < 200; ++tries) {
    GaussianRational z = g.gauss(12 * 7, 7);
    if (loop.contains_point(z)) continue;
    if (oracle::distance_to_loop(loop, z) >= margin) return z;
  }
  return std::nullopt;
}

/// Counts oracle roots strictly inside a rectangle; nullopt if a root lies
/// within `margin` of the border.
inline std::optional<long> oracle_count(const std::vector<oracle::ApproxRoot>& roots, const GaussianRational& ll,
                                        const GaussianRational& ur, double margin) {
  const double x0 = ll.re.to_double(), y0 = ll.im.to_double(), x1 = ur.re.to_double(), y1 = ur.im.to_double();
  long n = 0;
  for (const auto& r : roots) {
    const bool inside = r.re > x0 && r.re < x1 && r.im > y0 && r.im < y1;
    const double dx = std::min(std::abs(r.re - x0), std::abs(r.re - x1));
    const double dy = std::min(std::abs(r.im - y0), std::abs(r.im - y1));
    const bool near_v = dx < margin && r.im > y0 - margin && r.im < y1 + margin;
    const bool near_h = dy < margin && r.re > x0 - margin && r.re < x1 + margin;
    if (near_v || near_h) return std::nullopt;
    if (inside) ++n;
  }
  return n;
}

}  // namespace cauchy::fixtures
