#pragma once

// Direct jump enumeration for q/p where p is built from known real roots.
// Shares nothing with the remainder-sequence path beyond exact arithmetic.

#include "generators.hpp"

#include <vector>

namespace cauchy::fixtures {

struct KnownPole {
  Rational at;
  unsigned multiplicity;
};

/// p = lead * prod (x - r_i)^m_i * prod (x^2 + b x + c), with b^2 < 4c.
struct FactoredDenominator {
  Rational lead;
  std::vector<KnownPole> roots;
  std::vector<std::pair<Rational, Rational>> quadratics;

  RatPoly expand() const {
    RatPoly p = RatPoly::constant(lead);
    for (const auto& r : roots)
      for (unsigned k = 0; k < r.multiplicity; ++k) p *= RatPoly{-r.at, Rational(1)};
    for (const auto& [b, c] : quadratics) p *= RatPoly{c, b, Rational(1)};
    return p;
  }

  /// p(x) / (x - r_i)^m_i evaluated at r_i.
  Rational cofactor_at(std::size_t i) const {
    const Rational& x = roots[i].at;
    Rational v = lead;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      Rational d = x - roots[j].at;
      for (unsigned k = 0; k < roots[j].multiplicity; ++k) v *= d;
    }
    for (const auto& [b, c] : quadratics) v *= x * x + b * x + c;
    return v;
  }
};

struct OracleJumps {
  int right = 0;  // in halves
  int left = 0;
};

/// One-sided jumps of q/p at the i-th known real root of p; q(r_i) != 0.
inline OracleJumps oracle_jumps(const FactoredDenominator& p, const RatPoly& q, std::size_t i) {
  const int qs = q(p.roots[i].at).sign().value();
  const int h = p.cofactor_at(i).sign().value();
  const int right_sign = h;
  const int left_sign = p.roots[i].multiplicity % 2 == 1 ? -h : h;
  return {qs * right_sign, qs * left_sign};
}

/// Twice the closed-interval index of q/p over [a, b].
inline long oracle_cindex_twice(const FactoredDenominator& p, const RatPoly& q, const Rational& a, const Rational& b) {
  long twice = 0;
  for (std::size_t i = 0; i < p.roots.size(); ++i) {
    const Rational& x = p.roots[i].at;
    const auto j = oracle_jumps(p, q, i);
    if (a <= x && x < b) twice += j.right;
    if (a < x && x <= b) twice -= j.left;
  }
  return twice;
}

/// Twice the index over the whole real line.
inline long oracle_cindex_ubd_twice(const FactoredDenominator& p, const RatPoly& q) {
  long twice = 0;
  for (std::size_t i = 0; i < p.roots.size(); ++i) {
    const auto j = oracle_jumps(p, q, i);
    twice += j.right - j.left;
  }
  return twice;
}

/// Random denominator of total degree <= max_degree, with at least degree 1.
inline FactoredDenominator random_denominator(Gen& g, std::size_t max_degree) {
  FactoredDenominator p;
  do {
    p = {};
    p.lead = g.rational(9, 4);
    if (p.lead.is_zero()) p.lead = Rational(1);
    std::size_t deg = 0;
    const std::size_t target = static_cast<std::size_t>(g.integer(1, static_cast<long>(max_degree)));
    while (deg < target) {
      if (target - deg >= 2 && g.coin(0.25)) {
        // x^2 + b x + c with c > b^2 / 4.
        Rational b = g.rational(6, 3);
        Rational c = b * b / Rational(4) + Rational(Integer(g.integer(1, 20)), Integer(g.integer(1, 5)));
        p.quadratics.emplace_back(b, c);
        deg += 2;
        continue;
      }
      Rational r = g.rational(12, 4);
      auto same = [&](const KnownPole& k) { return k.at == r; };
      if (auto it = std::find_if(p.roots.begin(), p.roots.end(), same); it != p.roots.end()) {
        ++it->multiplicity;
      } else {
        p.roots.push_back({r, 1});
      }
      ++deg;
    }
  } while (p.roots.empty() && g.coin(0.7));
  return p;
}

}  // namespace cauchy::fixtures
