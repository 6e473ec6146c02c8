#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>

#include "cantorval/center.hpp"
#include "cantorval/errors.hpp"
#include "cantorval/matching.hpp"
#include "cantorval/serialize.hpp"
#include "support.hpp"

using cantorval::Direction;
using cantorval::FiniteMetric;
using cantorval::MatchTrace;
using cantorval::Rational;
using cantorval::RealLine;

namespace {

Rational R(const char* s) { return Rational::parse(s); }
using Rats = std::vector<Rational>;

MatchTrace run_real(const Rats& a, const Rats& b, const Rats& cluster, const Rational& alpha, std::size_t n) {
  return cantorval::build_permutation(RealLine{}, std::span<const Rational>(a), std::span<const Rational>(b),
                                      std::span<const Rational>(cluster), alpha, n);
}

Rats around(const Rats& centers, const Rational& offset, std::size_t length) {
  Rats out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(centers[i % centers.size()] + offset / Rational(static_cast<long>(i + 2)));
  return out;
}

Rational dist_to(const Rational& x, const Rats& cluster) {
  Rational best = cantorval::abs(x - cluster.front());
  for (const auto& c : cluster) best = std::min(best, cantorval::abs(x - c));
  return best;
}

// Injective, covers every index below n on both sides, and each step keeps
// its chosen point within 1/(m+1) of the target.
void check_trace(const MatchTrace& t, const Rats& a, const Rats& b, const Rats& cluster, const Rational& alpha, std::size_t n) {
  std::set<std::size_t> domain, range;
  for (const auto& s : t.steps) {
    CHECK(domain.insert(s.domain).second);
    CHECK(range.insert(s.image).second);
    CHECK(s.distance == cantorval::abs(a[s.domain] - b[s.image]));
    if (s.step == 0) continue;
    const Rational threshold(1, static_cast<long>(s.stage + 1));
    const Rational& src = s.direction == Direction::forward ? a[s.domain] : b[s.image];
    const Rational& dst = s.direction == Direction::forward ? b[s.image] : a[s.domain];
    const Rational y = R(s.target.c_str());
    CHECK(s.target_gap == cantorval::abs(y - dst));
    CHECK(s.target_gap < threshold);
    CHECK(cantorval::abs(R(s.nearest.c_str()) - src) == dist_to(src, cluster));
    CHECK(cantorval::abs(R(s.nearest.c_str()) - y) == alpha);
    CHECK(s.within_bound);
    CHECK(cantorval::abs(s.distance - alpha) <= dist_to(src, cluster) + threshold);
  }
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(domain.count(i) == 1);
    CHECK(range.count(i) == 1);
  }
}

cantorval::Json load_config(const std::string& name) {
  std::ifstream in(std::string(CANTORVAL_SOURCE_DIR) + "/tools/configs/" + name);
  REQUIRE(in.good());
  return cantorval::Json::parse(in);
}

}  // namespace

TEST_CASE("center of a finite metric") {
  const Rats two{R("0"), R("1")};
  CHECK(cantorval::center_of_metric(FiniteMetric::from_points(two)) == Rats{R("0"), R("1")});
  const Rats three{R("0"), R("1"), R("2")};
  CHECK(cantorval::center_of_metric(FiniteMetric::from_points(three)) == Rats{R("0"), R("1")});
  CHECK(cantorval::center_finite(three) == Rats{R("0"), R("1")});
  const Rats single{R("5")};
  CHECK(cantorval::center_of_metric(FiniteMetric::from_points(single)) == Rats{R("0")});
}

TEST_CASE("center of the 4-cycle metric by exhaustive check") {
  const std::vector<std::vector<Rational>> d{
      {R("0"), R("1"), R("2"), R("1")}, {R("1"), R("0"), R("1"), R("2")}, {R("2"), R("1"), R("0"), R("1")}, {R("1"), R("2"), R("1"), R("0")}};
  const FiniteMetric m({"p0", "p1", "p2", "p3"}, d);
  Rats expected;
  for (const char* alpha : {"0", "1", "2", "3"}) {
    bool all = true;
    for (std::size_t i = 0; i < 4; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < 4; ++j) any = any || d[i][j] == R(alpha);
      all = all && any;
    }
    if (all) expected.push_back(R(alpha));
  }
  CHECK(expected == Rats{R("0"), R("1"), R("2")});
  CHECK(cantorval::center_of_metric(m) == expected);
}

TEST_CASE("property: center_of_metric agrees with center_finite on the line") {
  gen::Source src(71);
  for (int i = 0; i < 300; ++i) {
    Rats pts;
    const long k = src.integer(1, 6);
    for (long j = 0; j < k; ++j) pts.push_back(src.rational(0, 3, 4));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    CHECK(cantorval::center_of_metric(FiniteMetric::from_points(pts)) == cantorval::center_finite(pts));
  }
}

TEST_CASE("finite metric validation") {
  using M = std::vector<std::vector<Rational>>;
  CHECK_THROWS_AS(FiniteMetric({"a", "a"}, M{{R("0"), R("1")}, {R("1"), R("0")}}), cantorval::PreconditionError);
  CHECK_THROWS_AS(FiniteMetric({"a", "b"}, M{{R("0"), R("1")}}), cantorval::PreconditionError);
  CHECK_THROWS_AS(FiniteMetric({"a", "b"}, M{{R("0"), R("1")}, {R("2"), R("0")}}), cantorval::PreconditionError);
  CHECK_THROWS_AS(FiniteMetric({"a", "b"}, M{{R("1"), R("1")}, {R("1"), R("0")}}), cantorval::PreconditionError);
  CHECK_THROWS_AS(FiniteMetric({"a", "b"}, M{{R("0"), R("0")}, {R("0"), R("0")}}), cantorval::PreconditionError);
  CHECK_THROWS_AS(FiniteMetric({"a", "b", "c"}, M{{R("0"), R("1"), R("5")}, {R("1"), R("0"), R("1")}, {R("5"), R("1"), R("0")}}),
                  cantorval::PreconditionError);
  CHECK_THROWS_AS(cantorval::center_of_metric(FiniteMetric({}, M{})), cantorval::PreconditionError);
  const FiniteMetric ok({"x", "y"}, M{{R("0"), R("1")}, {R("1"), R("0")}});
  CHECK(ok.index_of("y") == 1);
  CHECK_THROWS_AS(ok.index_of("z"), cantorval::PreconditionError);
}

TEST_CASE("two-point cluster at distance one") {
  const Rats a = around({R("0")}, R("1"), 256);
  const Rats b = around({R("1")}, R("-1"), 256);
  const Rats c{R("0"), R("1")};
  const auto t = run_real(a, b, c, R("1"), 64);
  check_trace(t, a, b, c, R("1"), 64);
  CHECK(t.steps.front().domain == 0);
  CHECK(t.steps.front().image == 0);
  for (const auto& s : t.steps) {
    if (s.stage >= 48) CHECK(cantorval::abs(s.distance - R("1")) <= R("1/16"));
  }
  CHECK(cantorval::verify_convergence(t, R("1"), 16, R("1/8")));
}

TEST_CASE("self matching with alpha zero") {
  const Rats c{R("0"), R("1")};
  const Rats a = around(c, R("1/2"), 512);
  const auto t = run_real(a, a, c, R("0"), 128);
  check_trace(t, a, a, c, R("0"), 128);
  for (const auto& s : t.steps) {
    const std::size_t m = s.direction == Direction::forward ? s.domain : s.image;
    CHECK(s.distance <= dist_to(a[m], c) * Rational(2) + Rational(1, static_cast<long>(s.stage + 1)));
  }
  CHECK(cantorval::verify_convergence(t, R("0"), 32, R("1/32")));
}

TEST_CASE("level 2 Cantor points with alpha 2/3") {
  const Rats c{R("0"), R("2/9"), R("2/3"), R("8/9")};
  const auto center = cantorval::center_of_metric(FiniteMetric::from_points(c));
  CHECK(std::find(center.begin(), center.end(), R("2/3")) != center.end());
  const Rats a = around(c, R("1/4"), 512);
  const Rats b = around({R("8/9"), R("2/3"), R("2/9"), R("0")}, R("-1/4"), 512);
  const auto t = run_real(a, b, c, R("2/3"), 64);
  check_trace(t, a, b, c, R("2/3"), 64);
  CHECK(cantorval::verify_convergence(t, R("2/3"), 16, R("1/8")));
}

TEST_CASE("build_permutation preconditions") {
  const Rats c{R("0"), R("1")};
  const Rats a = around({R("0")}, R("1"), 8);
  const Rats b = around({R("1")}, R("-1"), 8);
  CHECK_THROWS_WITH_AS(run_real(a, b, c, R("1/2"), 4), doctest::Contains("not in the center"), cantorval::PreconditionError);
  CHECK_THROWS_AS(run_real(a, b, Rats{}, R("1"), 4), cantorval::PreconditionError);
  CHECK_THROWS_AS(run_real(a, b, c, R("1"), 0), cantorval::PreconditionError);
  CHECK_THROWS_WITH_AS(run_real(a, b, c, R("1"), 16), doctest::Contains("prefix exhausted at step"), cantorval::PreconditionError);
}

TEST_CASE("property: longer runs extend shorter ones verbatim") {
  gen::Source src(72);
  for (int round = 0; round < 40; ++round) {
    Rats c;
    const long k = src.integer(1, 4);
    for (long j = 0; j < k; ++j) c.push_back(src.rational(0, 2, 6));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    const auto center = cantorval::center_of_metric(FiniteMetric::from_points(c));
    const Rational alpha = center[static_cast<std::size_t>(src.integer(0, static_cast<long>(center.size()) - 1))];
    // Sequences visiting every cluster point with shrinking offsets.
    Rats a, b;
    for (std::size_t i = 0; i < 1200; ++i) {
      const Rational ea = src.rational(-1, 1, 5) / Rational(static_cast<long>(i + 2));
      const Rational eb = src.rational(-1, 1, 5) / Rational(static_cast<long>(i + 2));
      a.push_back(c[static_cast<std::size_t>(src.integer(0, static_cast<long>(c.size()) - 1))] + ea);
      b.push_back(c[static_cast<std::size_t>(src.integer(0, static_cast<long>(c.size()) - 1))] + eb);
    }
    const std::size_t n1 = static_cast<std::size_t>(src.integer(4, 40));
    const std::size_t n2 = n1 + static_cast<std::size_t>(src.integer(1, 20));
    const auto t1 = run_real(a, b, c, alpha, n1);
    const auto t2 = run_real(a, b, c, alpha, n2);
    check_trace(t2, a, b, c, alpha, n2);
    REQUIRE(t2.steps.size() >= t1.steps.size());
    for (std::size_t i = 0; i < t1.steps.size(); ++i) {
      CHECK(t1.steps[i].domain == t2.steps[i].domain);
      CHECK(t1.steps[i].image == t2.steps[i].image);
      CHECK(t1.steps[i].distance == t2.steps[i].distance);
    }
    const auto pi = t2.permutation();
    for (std::size_t i = 0; i < n2; ++i) CHECK(pi[i].has_value());
  }
}

TEST_CASE("matching in a finite metric space") {
  using M = std::vector<std::vector<Rational>>;
  const FiniteMetric m({"p0", "p1", "p2", "p3"},
                       M{{R("0"), R("1"), R("2"), R("1")}, {R("1"), R("0"), R("1"), R("2")}, {R("2"), R("1"), R("0"), R("1")}, {R("1"), R("2"), R("1"), R("0")}});
  std::vector<std::size_t> a, b;
  for (std::size_t i = 0; i < 64; ++i) {
    a.push_back(i % 4);
    b.push_back((i * 3) % 4);
  }
  const std::vector<std::size_t> cluster{0, 1, 2, 3};
  const cantorval::MetricPoints space{&m};
  const auto t = cantorval::build_permutation(space, std::span<const std::size_t>(a), std::span<const std::size_t>(b),
                                              std::span<const std::size_t>(cluster), R("2"), 16);
  for (const auto& s : t.steps) {
    if (s.step > 0) CHECK(s.distance == R("2"));
  }
  CHECK(cantorval::verify_convergence(t, R("2"), 8, R("0")));
}

TEST_CASE("verify_convergence") {
  MatchTrace perfect;
  for (int i = 0; i < 10; ++i) {
    cantorval::MatchStep s;
    s.distance = R("3/2");
    perfect.steps.push_back(s);
  }
  CHECK(cantorval::verify_convergence(perfect, R("3/2"), 10, R("0")));
  MatchTrace outlier = perfect;
  outlier.steps[7].distance = R("2");
  CHECK_FALSE(cantorval::verify_convergence(outlier, R("3/2"), 5, R("1/4")));
  CHECK(cantorval::verify_convergence(outlier, R("3/2"), 2, R("1/4")));
  CHECK_THROWS_AS(cantorval::verify_convergence(perfect, R("3/2"), 11, R("0")), cantorval::PreconditionError);
}

TEST_CASE("configs run and are deterministic") {
  for (const char* name : {"two_points.json", "cantor_level2.json"}) {
    const auto cfg = load_config(name);
    const auto t1 = cantorval::run_match_config(cfg);
    const auto t2 = cantorval::run_match_config(cfg);
    CHECK(cantorval::to_json(t1).dump() == cantorval::to_json(t2).dump());
    CHECK(t1.csv() == t2.csv());
    CHECK(cantorval::verify_convergence(t1, t1.alpha, 16, R("1/8")));
  }
  auto bad = load_config("two_points.json");
  bad["space"] = "plane";
  CHECK_THROWS_AS(cantorval::run_match_config(bad), cantorval::PreconditionError);
  bad = load_config("two_points.json");
  bad.erase("alpha");
  CHECK_THROWS_AS(cantorval::run_match_config(bad), cantorval::PreconditionError);
  bad = load_config("two_points.json");
  bad["stages"] = -3;
  CHECK_THROWS_AS(cantorval::run_match_config(bad), cantorval::PreconditionError);
}
