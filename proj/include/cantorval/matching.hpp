#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/rational.hpp"

namespace cantorval {

/// Finite metric space with labeled points; validated on construction
/// (square, symmetric, zero diagonal, positive off-diagonal, triangle
/// inequality, distinct labels).
class FiniteMetric {
 public:
  FiniteMetric(std::vector<std::string> labels, std::vector<std::vector<Rational>> dist);
  /// Points of the real line with |x - y|; labels are the rendered values.
  static FiniteMetric from_points(std::span<const Rational> points);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t index_of(const std::string& label) const;
  const Rational& distance(std::size_t i, std::size_t j) const { return dist_.at(i).at(j); }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> dist_;
};

/// All alpha in {0} u {d(p, q)} such that every point has a partner at
/// distance exactly alpha. Throws on an empty space.
std::vector<Rational> center_of_metric(const FiniteMetric& c);

/// The real line; points are rationals, ordered by value.
struct RealLine {
  using Point = Rational;
  Rational distance(const Rational& x, const Rational& y) const { return abs(x - y); }
  std::string label(const Rational& x) const { return x.str(); }
};

/// A finite metric space; points are indices, ordered by index.
struct MetricPoints {
  using Point = std::size_t;
  const FiniteMetric* metric = nullptr;
  Rational distance(std::size_t x, std::size_t y) const { return metric->distance(x, y); }
  std::string label(std::size_t x) const { return metric->label(x); }
};

enum class Direction { forward, backward };

/// One assignment pi(domain) = image made at stage m.
struct MatchStep {
  std::size_t step = 0;
  Direction direction = Direction::forward;
  std::size_t stage = 0;
  std::size_t domain = 0;
  std::size_t image = 0;
  /// d(a_domain, b_image).
  Rational distance;
  /// Nearest cluster point to the source and its partner at distance alpha.
  std::string nearest;
  std::string target;
  /// d(target, chosen point); must be below 1 / (stage + 1).
  Rational target_gap;
  /// |distance - alpha| <= bound, with bound = d(source, C) + 1 / (stage + 1).
  Rational bound;
  bool within_bound = false;
};

struct MatchTrace {
  Rational alpha;
  std::size_t stages = 0;
  std::vector<MatchStep> steps;
  std::vector<std::string> notes;

  /// pi as a map over the indices assigned so far.
  std::vector<std::optional<std::size_t>> permutation() const;
  std::string csv() const;
};

/// The back-and-forth construction over stages m = 0..n-1. pi(0) = 0 is fixed
/// first. A forward stage matches a_m through its nearest cluster point x
/// and the least partner y with d(x, y) = alpha to the least unused b_j with
/// d(y, b_j) < 1 / (m + 1); a backward stage does the same from b_m.
/// Throws PreconditionError when alpha has no partner in the cluster or
/// when a prefix runs out ("prefix exhausted at step m").
template <class Space>
MatchTrace build_permutation(const Space& space, std::span<const typename Space::Point> a,
                             std::span<const typename Space::Point> b, std::span<const typename Space::Point> cluster,
                             const Rational& alpha, std::size_t n);

/// Every distance among the last `window` steps lies within tol of alpha.
/// Throws PreconditionError when the trace is shorter than the window.
bool verify_convergence(const MatchTrace& trace, const Rational& alpha, std::size_t window, const Rational& tol);

// Implementation.

namespace detail {

template <class Space>
std::size_t nearest(const Space& space, const typename Space::Point& p, std::span<const typename Space::Point> cluster) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < cluster.size(); ++i) {
    if (space.distance(p, cluster[i]) < space.distance(p, cluster[best])) best = i;
  }
  return best;
}

}  // namespace detail

template <class Space>
MatchTrace build_permutation(const Space& space, std::span<const typename Space::Point> a,
                             std::span<const typename Space::Point> b, std::span<const typename Space::Point> cluster,
                             const Rational& alpha, std::size_t n) {
  if (cluster.empty()) throw PreconditionError("cluster set is empty");
  if (n == 0) throw PreconditionError("number of stages must be positive");
  if (a.empty() || b.empty()) throw PreconditionError("sequences must be nonempty");
  // partner[i]: least cluster index at distance alpha from cluster[i].
  std::vector<std::size_t> partner(cluster.size());
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    std::size_t j = 0;
    while (j < cluster.size() && space.distance(cluster[i], cluster[j]) != alpha) ++j;
    if (j == cluster.size())
      throw PreconditionError("alpha = " + alpha.str() + " is not in the center: " + space.label(cluster[i]) + " has no partner");
    partner[i] = j;
  }

  MatchTrace trace;
  trace.alpha = alpha;
  trace.stages = n;
  trace.notes.push_back("pi(0) = 0 is fixed before the stages");
  std::vector<std::optional<std::size_t>> fwd(a.size());
  std::vector<std::optional<std::size_t>> bwd(b.size());
  auto record = [&](Direction dir, std::size_t m, std::size_t i, std::size_t j, std::optional<std::size_t> near) {
    MatchStep s;
    s.step = trace.steps.size();
    s.direction = dir;
    s.stage = m;
    s.domain = i;
    s.image = j;
    s.distance = space.distance(a[i], b[j]);
    const Rational threshold(1, static_cast<long>(m + 1));
    if (near) {
      const auto& src = dir == Direction::forward ? a[i] : b[j];
      const auto& dst = dir == Direction::forward ? b[j] : a[i];
      const auto& y = cluster[partner[*near]];
      s.nearest = space.label(cluster[*near]);
      s.target = space.label(y);
      s.target_gap = space.distance(y, dst);
      s.bound = space.distance(src, cluster[*near]) + threshold;
    } else {
      s.bound = abs(s.distance - alpha);
    }
    s.within_bound = abs(s.distance - alpha) <= s.bound;
    fwd[i] = j;
    bwd[j] = i;
    trace.steps.push_back(std::move(s));
  };
  record(Direction::forward, 0, 0, 0, std::nullopt);

  for (std::size_t m = 0; m < n; ++m) {
    const Rational threshold(1, static_cast<long>(m + 1));
    if (m >= a.size() || m >= b.size()) throw PreconditionError("prefix exhausted at step " + std::to_string(m));
    if (!fwd[m]) {
      const std::size_t x = detail::nearest(space, a[m], cluster);
      const auto& y = cluster[partner[x]];
      std::size_t j = 0;
      while (j < b.size() && (bwd[j] || !(space.distance(y, b[j]) < threshold))) ++j;
      if (j == b.size()) throw PreconditionError("prefix exhausted at step " + std::to_string(m));
      record(Direction::forward, m, m, j, x);
    }
    if (!bwd[m]) {
      const std::size_t x = detail::nearest(space, b[m], cluster);
      const auto& y = cluster[partner[x]];
      std::size_t i = 0;
      while (i < a.size() && (fwd[i] || !(space.distance(y, a[i]) < threshold))) ++i;
      if (i == a.size()) throw PreconditionError("prefix exhausted at step " + std::to_string(m));
      record(Direction::backward, m, i, m, x);
    }
  }
  return trace;
}

}  // namespace cantorval
