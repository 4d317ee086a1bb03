#pragma once

// Root counting in rectangles and half-planes via Cauchy indices along the
// border, and the Routh-Hurwitz stability test built on top of it.

#include "cauchy/cindex.hpp"
#include "cauchy/poly.hpp"
#include "cauchy/sturm.hpp"

#include <array>
#include <future>
#include <optional>
#include <string>
#include <vector>

namespace cauchy {

struct Rectangle {
  GaussianRational lower_left;
  GaussianRational upper_right;

  Rectangle(GaussianRational ll, GaussianRational ur) : lower_left(std::move(ll)), upper_right(std::move(ur)) {
    if (!(lower_left.re < upper_right.re) || !(lower_left.im < upper_right.im))
      throw Error(ErrorKind::DegenerateRectangle,
                  "corners " + lower_left.str() + " and " + upper_right.str() + " do not span a rectangle");
  }

  GaussianRational lower_right() const { return {upper_right.re, lower_left.im}; }
  GaussianRational upper_left() const { return {lower_left.re, upper_right.im}; }
  Rational width() const { return upper_right.re - lower_left.re; }
  Rational height() const { return upper_right.im - lower_left.im; }

  /// Counterclockwise corners starting at the lower left.
  std::array<GaussianRational, 4> corners() const { return {lower_left, lower_right(), upper_right, upper_left()}; }

  /// Strictly inside.
  bool contains(const GaussianRational& z) const {
    return lower_left.re < z.re && z.re < upper_right.re && lower_left.im < z.im && z.im < upper_right.im;
  }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// Outcome of one border segment check and its index contribution.
struct EdgeCertificate {
  GaussianRational from;
  GaussianRational to;
  bool root_free = false;
  /// changes_alt_itv_smods(0, 1, pR/g, pI/g) along the edge; set when root_free.
  std::optional<long> changes_alt;
};

enum class RegionKind { rectangle, upper_half_plane, half_plane };

struct RootCountReport {
  long count = 0;
  RegionKind region = RegionKind::rectangle;
  std::optional<Rectangle> rect;
  /// For half-planes: the directed line a -> b; the region lies to its left.
  std::optional<std::pair<GaussianRational, GaussianRational>> line;
  std::vector<EdgeCertificate> border;
  /// For half-plane counts: the two variation counts used.
  std::optional<long> real_axis_changes;
  std::optional<long> index_changes;
};

class RootOnBorder : public Error {
 public:
  RootOnBorder(const std::string& where, std::vector<EdgeCertificate> border)
      : Error(ErrorKind::RootOnBorder, where), border_(std::move(border)) {}
  const std::vector<EdgeCertificate>& border() const { return border_; }

 private:
  std::vector<EdgeCertificate> border_;
};

struct CountOptions {
  /// Worker threads for independent edge computations; 1 runs inline.
  unsigned threads = 1;
};

namespace detail {

/// pR/g and pI/g for p composed with a + (b - a) t, g = gcd(pR, pI).
inline std::pair<RatPoly, RatPoly> edge_parts(const GaussPoly& p, const GaussianRational& a,
                                             const GaussianRational& b) {
  auto [pr, pi] = re_im_parts(compose_affine(p, a, b - a));
  const RatPoly g = gcd(pr, pi);
  return {div_exact(pr, g), div_exact(pi, g)};
}

}  // namespace detail

/// True iff p has no root on the closed segment [a, b].
inline bool no_proots_line(const GaussPoly& p, const GaussianRational& a, const GaussianRational& b) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "every point is a root of the zero polynomial");
  if (p(a).is_zero() || p(b).is_zero()) return false;
  auto [pr, pi] = re_im_parts(compose_affine(p, a, b - a));
  const RatPoly g = gcd(pr, pi);
  return changes_itv_smods(Rational(0), Rational(1), g, derivative(g)) == 0;
}

inline RootCountReport proots_rectangle(const GaussPoly& p, const Rectangle& rect, const CountOptions& opts = {}) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot count roots of the zero polynomial");
  const auto c = rect.corners();

  auto run_edge = [&](std::size_t j) {
    EdgeCertificate e{c[j], c[(j + 1) % 4], false, std::nullopt};
    e.root_free = no_proots_line(p, e.from, e.to);
    if (e.root_free) {
      auto [a, b] = detail::edge_parts(p, e.from, e.to);
      e.changes_alt = changes_alt_itv_smods(Rational(0), Rational(1), a, b);
    }
    return e;
  };

  std::vector<EdgeCertificate> border;
  border.reserve(4);
  if (opts.threads > 1) {
    std::array<std::future<EdgeCertificate>, 4> jobs;
    for (std::size_t j = 0; j < 4; ++j) jobs[j] = std::async(std::launch::async, run_edge, j);
    for (auto& f : jobs) border.push_back(f.get());
  } else {
    for (std::size_t j = 0; j < 4; ++j) border.push_back(run_edge(j));
  }

  long total = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    if (!border[j].root_free)
      throw RootOnBorder("edge " + std::to_string(j + 1) + " from " + border[j].from.str() + " to " +
                             border[j].to.str(),
                         border);
    total += *border[j].changes_alt;
  }
  if (total > 0 || (-total) % 4 != 0)
    throw Error(ErrorKind::Internal, "border variation sum " + std::to_string(total) + " is not a nonpositive multiple of 4");

  RootCountReport out;
  out.count = -total / 4;
  out.region = RegionKind::rectangle;
  out.rect = rect;
  out.border = std::move(border);
  if (out.count > static_cast<long>(p.deg())) throw Error(ErrorKind::Internal, "count exceeds degree");
  return out;
}

/// Roots with Im z > 0, counted with multiplicity.
inline RootCountReport proots_upper(const GaussPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot count roots of the zero polynomial");
  const GaussPoly pm = p.monic();
  auto [pr, pi] = re_im_parts(pm);
  const RatPoly g = gcd(pi, pr);
  const long real_roots = changes_R_smods(g, derivative(g));
  if (real_roots != 0) throw RootOnBorder("real axis", {});

  const long n = static_cast<long>(pm.deg());
  const long index = changes_R_smods(pr, pi);
  if ((n - index) % 2 != 0 || n - index < 0 || n - index > 2 * n)
    throw Error(ErrorKind::Internal, "degree minus index " + std::to_string(n - index) + " is not a valid count");

  RootCountReport out;
  out.count = (n - index) / 2;
  out.region = RegionKind::upper_half_plane;
  out.line = std::pair{GaussianRational(0), GaussianRational(1)};
  out.real_axis_changes = real_roots;
  out.index_changes = index;
  return out;
}

/// Roots w with Im((w - a) / (b - a)) > 0, i.e. left of the direction a -> b.
inline RootCountReport proots_half(const GaussPoly& p, const GaussianRational& a, const GaussianRational& b) {
  if (a == b) throw Error(ErrorKind::DegenerateDirection, "half-plane direction with a = b");
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot count roots of the zero polynomial");
  RootCountReport out;
  try {
    out = proots_upper(compose_affine(p, a, b - a));
  } catch (const RootOnBorder&) {
    throw RootOnBorder("line through " + a.str() + " and " + b.str(), {});
  }
  out.region = RegionKind::half_plane;
  out.line = std::pair{a, b};
  return out;
}

/// All roots strictly in the left half-plane Re z < 0. Roots on the
/// imaginary axis make p unstable.
inline bool routh_stable(const GaussPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "stability of the zero polynomial");
  if (p.is_constant()) throw Error(ErrorKind::ConstantPolynomial, "stability of a constant polynomial");
  try {
    return proots_half(p, GaussianRational(0), GaussianRational::i()).count == static_cast<long>(p.deg());
  } catch (const RootOnBorder&) {
    return false;
  }
}

}  // namespace cauchy
