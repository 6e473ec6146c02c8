#include "cantorval/matching.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cantorval {

FiniteMetric::FiniteMetric(std::vector<std::string> labels, std::vector<std::vector<Rational>> dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  const std::size_t n = labels_.size();
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) throw PreconditionError("metric labels must be distinct");
  if (dist_.size() != n) throw PreconditionError("distance matrix must be square");
  for (const auto& row : dist_) {
    if (row.size() != n) throw PreconditionError("distance matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!dist_[i][i].is_zero()) throw PreconditionError("distance matrix diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (dist_[i][j] != dist_[j][i]) throw PreconditionError("distance matrix must be symmetric");
      if (i != j && dist_[i][j].sign() <= 0) throw PreconditionError("distinct points must have positive distance");
      for (std::size_t k = 0; k < n; ++k) {
        if (dist_[i][k] > dist_[i][j] + dist_[j][k])
          throw PreconditionError("triangle inequality fails at (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")");
      }
    }
  }
}

FiniteMetric FiniteMetric::from_points(std::span<const Rational> points) {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> dist;
  for (const Rational& p : points) {
    labels.push_back(p.str());
    dist.emplace_back();
    for (const Rational& q : points) dist.back().push_back(abs(p - q));
  }
  return FiniteMetric(std::move(labels), std::move(dist));
}

std::size_t FiniteMetric::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw PreconditionError("unknown metric label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<Rational> center_of_metric(const FiniteMetric& c) {
  if (c.size() == 0) throw PreconditionError("center_of_metric needs a nonempty space");
  std::vector<Rational> candidates{Rational(0)};
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) candidates.push_back(c.distance(i, j));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Rational> out;
  for (const Rational& alpha : candidates) {
    bool ok = true;
    for (std::size_t i = 0; i < c.size() && ok; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < c.size() && !found; ++j) found = c.distance(i, j) == alpha;
      ok = found;
    }
    if (ok) out.push_back(alpha);
  }
  return out;
}

std::vector<std::optional<std::size_t>> MatchTrace::permutation() const {
  std::vector<std::optional<std::size_t>> pi;
  for (const MatchStep& s : steps) {
    if (pi.size() <= s.domain) pi.resize(s.domain + 1);
    pi[s.domain] = s.image;
  }
  return pi;
}

std::string MatchTrace::csv() const {
  std::ostringstream os;
  os << "step,direction,m,pi_m,distance\n";
  for (const MatchStep& s : steps) {
    os << s.step << ',' << (s.direction == Direction::forward ? "forward" : "backward") << ',' << s.domain << ',' << s.image
       << ',' << s.distance << '\n';
  }
  return os.str();
}

bool verify_convergence(const MatchTrace& trace, const Rational& alpha, std::size_t window, const Rational& tol) {
  if (trace.steps.size() < window) throw PreconditionError("trace is shorter than the window");
  return std::all_of(trace.steps.end() - static_cast<std::ptrdiff_t>(window), trace.steps.end(),
                     [&](const MatchStep& s) { return abs(s.distance - alpha) <= tol; });
}

}  // namespace cantorval
