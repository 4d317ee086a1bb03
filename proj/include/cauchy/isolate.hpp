#pragma once

// Complex root isolation by rectangle bisection driven by exact counts.

#include "cauchy/counting.hpp"

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace cauchy {

struct IsolationBox {
  Rectangle rect;
  long multiplicity = 1;
};

struct IsolationStats {
  std::size_t max_depth = 0;
  std::size_t count_calls = 0;
};

struct IsolateOptions {
  /// Keep bisecting single-root boxes while wider or taller than this.
  std::optional<Rational> max_width;
  unsigned threads = 1;
};

/// Square [-B-d, B+d]^2 with B the Cauchy root bound and d the first of
/// B/3, B/9, ... for which no root lies on the border.
inline Rectangle initial_box(const GaussPoly& p) {
  const Rational bound = cauchy_root_bound(p);
  Rational delta = bound / Rational(3);
  for (;;) {
    const Rational h = bound + delta;
    Rectangle r({-h, -h}, {h, h});
    const auto c = r.corners();
    bool clean = true;
    for (std::size_t j = 0; j < 4 && clean; ++j) clean = no_proots_line(p, c[j], c[(j + 1) % 4]);
    if (clean) return r;
    delta /= Rational(3);
  }
}

namespace detail {

struct IsolationJob {
  Rectangle rect;
  long count;  // roots of the squarefree part inside
  std::size_t depth;
};

/// Splits rect with a root-free line near its midpoint along the longer side
/// (vertical line on ties). Candidates: mid, then mid + side/(3 * 2^k).
inline std::pair<Rectangle, Rectangle> split_rect(const GaussPoly& q, const Rectangle& rect) {
  const bool vertical = rect.width() >= rect.height();
  const Rational lo = vertical ? rect.lower_left.re : rect.lower_left.im;
  const Rational side = vertical ? rect.width() : rect.height();
  const Rational mid = lo + side / Rational(2);

  Rational offset = 0;
  Rational step = side / Rational(3);
  for (;;) {
    const Rational s = mid + offset;
    const GaussianRational from = vertical ? GaussianRational(s, rect.lower_left.im) : GaussianRational(rect.lower_left.re, s);
    const GaussianRational to = vertical ? GaussianRational(s, rect.upper_right.im) : GaussianRational(rect.upper_right.re, s);
    if (no_proots_line(q, from, to)) {
      if (vertical)
        return {Rectangle(rect.lower_left, {s, rect.upper_right.im}), Rectangle({s, rect.lower_left.im}, rect.upper_right)};
      return {Rectangle(rect.lower_left, {rect.upper_right.re, s}), Rectangle({rect.lower_left.re, s}, rect.upper_right)};
    }
    offset = step;
    step /= Rational(2);
  }
}

}  // namespace detail

/// Disjoint boxes, each holding exactly one distinct root of p, sorted by
/// the lower-left corner (Re, then Im).
inline std::vector<IsolationBox> isolate_roots(const GaussPoly& p, const IsolateOptions& opts,
                                               IsolationStats* stats = nullptr) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  if (p.is_constant()) throw Error(ErrorKind::ConstantPolynomial, "a constant polynomial has no roots");

  const GaussPoly q = squarefree_part(p);
  const Rectangle start = initial_box(p);

  std::mutex mu;
  std::condition_variable cv;
  std::deque<detail::IsolationJob> queue;
  std::vector<IsolationBox> out;
  IsolationStats local;
  std::size_t busy = 0;
  std::exception_ptr failure;

  {
    const long n = proots_rectangle(q, start).count;
    local.count_calls = 1;
    if (n != static_cast<long>(q.deg())) throw Error(ErrorKind::Internal, "initial box misses roots");
    queue.push_back({start, n, 0});
  }

  auto needs_shrink = [&](const Rectangle& r) {
    return opts.max_width && (r.width() > *opts.max_width || r.height() > *opts.max_width);
  };

  // Processes one job; returns child jobs and finished boxes.
  auto process = [&](const detail::IsolationJob& job, std::vector<detail::IsolationJob>& children,
                     std::vector<IsolationBox>& done, std::size_t& calls) {
    if (job.count == 1 && !needs_shrink(job.rect)) {
      // The box holds one distinct root and p has no border roots, so the
      // multiplicity-counted tally of p is that root's order.
      const long m = proots_rectangle(p, job.rect).count;
      ++calls;
      done.push_back({job.rect, m});
      return;
    }
    auto [left, right] = detail::split_rect(q, job.rect);
    const long nl = proots_rectangle(q, left).count;
    const long nr = proots_rectangle(q, right).count;
    calls += 2;
    if (nl + nr != job.count) throw Error(ErrorKind::Internal, "bisection counts are not additive");
    if (nl > 0) children.push_back({left, nl, job.depth + 1});
    if (nr > 0) children.push_back({right, nr, job.depth + 1});
  };

  auto worker = [&] {
    for (;;) {
      detail::IsolationJob job{start, 0, 0};
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return !queue.empty() || busy == 0 || failure; });
        if (failure || queue.empty()) return;
        job = queue.front();
        queue.pop_front();
        ++busy;
        local.max_depth = std::max(local.max_depth, job.depth);
      }
      std::vector<detail::IsolationJob> children;
      std::vector<IsolationBox> done;
      std::size_t calls = 0;
      std::exception_ptr err;
      try {
        process(job, children, done, calls);
      } catch (...) {
        err = std::current_exception();
      }
      {
        std::lock_guard lock(mu);
        --busy;
        if (err && !failure) failure = err;
        for (auto& c : children) queue.push_back(std::move(c));
        for (auto& d : done) out.push_back(std::move(d));
        local.count_calls += calls;
      }
      cv.notify_all();
    }
  };

  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(out.begin(), out.end(), [](const IsolationBox& x, const IsolationBox& y) {
    if (x.rect.lower_left.re != y.rect.lower_left.re) return x.rect.lower_left.re < y.rect.lower_left.re;
    return x.rect.lower_left.im < y.rect.lower_left.im;
  });
  if (stats) *stats = local;
  return out;
}

inline std::vector<IsolationBox> isolate_roots(const GaussPoly& p, std::optional<Rational> max_width = std::nullopt) {
  IsolateOptions opts;
  opts.max_width = std::move(max_width);
  return isolate_roots(p, opts);
}

}  // namespace cauchy
