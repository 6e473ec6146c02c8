#include "cantorval/center.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "cantorval/errors.hpp"

namespace cantorval {

namespace {

bool all_negative(const Range& r) { return r.hi < 0 || (r.hi == 0 && !r.hi_closed); }

void merge_into(std::vector<Range>& regions, const Range& next) {
  if (!regions.empty()) {
    Range& last = regions.back();
    if (last.hi == next.lo && (last.hi_closed || next.lo_closed)) {
      last.hi = next.hi;
      last.hi_closed = next.hi_closed;
      return;
    }
  }
  regions.push_back(next);
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Smallest m in 0..4 with lambda * approx == approx(level + m) cut at lambda * b.
std::size_t self_similarity_shift(const Approximation& approx, const Rational& lambda, const Rational& b) {
  if (lambda.sign() <= 0 || lambda > Rational(1)) throw PreconditionError("scaling ratio must lie in (0, 1]");
  if (b.sign() <= 0) throw PreconditionError("self-similarity bound must be positive");
  const IntervalSet image = approx.set.intersect(Interval(Rational(0), b)).scale(lambda);
  for (std::size_t m = 0; m <= 4; ++m) {
    const IntervalSet finer = m == 0 ? approx.set : approximation(approx.spec, approx.level + m).set;
    if (finer.intersect(Interval(Rational(0), lambda * b)) == image) return m;
  }
  throw PreconditionError("self-similarity hypothesis fails for ratio " + lambda.str() + " on [0, " + b.str() + "]");
}

// Exclusion engine for a self-similar set C with C n [0, lambda * hi] =
// lambda * C. Points are rescaled into (base_lo, base_hi] and certified
// there; the far region beyond base_hi uses the diameter certificate.
struct Frame {
  IntervalSet outer;
  std::vector<Rational> anchors;
  std::vector<Interval> anchor_intervals;
  std::vector<std::pair<Range, OpenInterval>> rules;
  std::vector<OpenInterval> gaps;
  Rational ratio;
  Rational base_lo;
  Rational base_hi;
  std::vector<Rational> base_terms;
  ExclusionCertificate far;
};

std::optional<Rational> find_anchor(const Frame& f, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) return std::nullopt;
  auto it = std::upper_bound(f.anchors.begin(), f.anchors.end(), lo);
  if (it != f.anchors.end() && *it < hi) return *it;
  for (const Interval& iv : f.anchor_intervals) {
    const Rational a = max(lo, iv.lo);
    const Rational z = min(hi, iv.hi);
    if (a < z) return midpoint(a, z);
  }
  return std::nullopt;
}

std::optional<ExclusionCertificate> try_gap(const Frame& f, const OpenInterval& g, const Rational& t) {
  const auto x = find_anchor(f, g.lo - t, min(g.hi - t, t));
  if (!x) return std::nullopt;
  return ExclusionCertificate::through(g, *x);
}

struct Outcome {
  enum Kind { member, excluded, unresolved } kind = unresolved;
  std::optional<ExclusionCertificate> base;
  unsigned depth = 0;
  bool fallback = false;
};

Outcome classify(const Frame& f, const Rational& t, const std::vector<ExclusionCertificate>& cache) {
  Outcome out;
  if (t > f.base_hi) {
    if (f.far.excludes(t)) {
      out.kind = Outcome::excluded;
      out.base = f.far;
    }
    return out;
  }
  Rational u = t;
  while (u <= f.base_lo) {
    u /= f.ratio;
    ++out.depth;
  }
  if (std::find(f.base_terms.begin(), f.base_terms.end(), u) != f.base_terms.end()) {
    out.kind = Outcome::member;
    return out;
  }
  for (auto it = cache.rbegin(); it != cache.rend(); ++it) {
    if (it->excludes(u)) {
      out.kind = Outcome::excluded;
      out.base = *it;
      return out;
    }
  }
  for (const auto& [when, gap] : f.rules) {
    if (!when.contains(u)) continue;
    if (auto c = try_gap(f, gap, u)) {
      out.kind = Outcome::excluded;
      out.base = std::move(c);
      return out;
    }
  }
  for (const OpenInterval& gap : f.gaps) {
    if (auto c = try_gap(f, gap, u)) {
      out.kind = Outcome::excluded;
      out.base = std::move(c);
      out.fallback = true;
      return out;
    }
  }
  return out;
}

// Sweeps the grid, fills the report, and checks each base certificate against
// the outer approximation.
void sweep(const Frame& f, std::span<const Rational> grid, CenterReport& report) {
  std::vector<ExclusionCertificate> cache;
  std::map<std::pair<std::size_t, unsigned>, std::size_t> emitted;
  std::vector<Rational> stray;
  for (const Rational& t : grid) {
    ++report.grid.points;
    Outcome o = classify(f, t, cache);
    if (o.kind == Outcome::member) {
      ++report.grid.members;
      if (!report.is_member(t)) report.members.push_back({t, MemberStatus::level_uniform, "term (partner map s -> s +/- t)"});
      continue;
    }
    if (o.kind == Outcome::unresolved) {
      ++report.grid.unresolved;
      report.unresolved.push_back(Range::point(t));
      continue;
    }
    ++report.grid.excluded;
    const bool is_far = o.base->excluded == f.far.excluded;
    std::size_t base_index = 0;
    if (!is_far) {
      auto hit = std::find_if(cache.begin(), cache.end(), [&](const ExclusionCertificate& c) {
        return c.excluded == o.base->excluded && c.witness == o.base->witness;
      });
      if (hit == cache.end()) {
        if (!o.base->sound_for(f.outer)) throw std::logic_error("unsound certificate for t = " + t.str());
        cache.push_back(*o.base);
        hit = cache.end() - 1;
      }
      base_index = static_cast<std::size_t>(hit - cache.begin()) + 1;
      if (o.fallback) stray.push_back(t);
    }
    const auto key = std::make_pair(base_index, o.depth);
    if (emitted.count(key) == 0) {
      ExclusionCertificate c = o.depth == 0 ? *o.base : o.base->scaled(pow(f.ratio, static_cast<long>(o.depth)));
      if (o.depth > 0) c.note = "scaled by " + f.ratio.str() + "^" + std::to_string(o.depth);
      emitted.emplace(key, report.certificates.size());
      report.certificates.push_back(std::move(c));
    }
  }
  if (!stray.empty()) {
    report.notes.push_back(std::to_string(stray.size()) + " grid point(s) needed a gap outside the preferred rule, first at t = " +
                           stray.front().str());
  }
}

struct WitnessRule {
  Range alphas;
  Rational witness;
};

OpenInterval const* find_gap(const std::vector<OpenInterval>& gaps, const Range& r) {
  for (const OpenInterval& g : gaps) {
    if (r.inside(g)) return &g;
  }
  return nullptr;
}

// Certificate for a whole table row against the gaps of `hull` (plus the
// region beyond its diameter).
std::optional<ExclusionCertificate> table_certificate(const WitnessRule& rule, const IntervalSet& hull,
                                                      const std::vector<OpenInterval>& gaps, const std::string& hull_name) {
  if (hull.contains(rule.witness) == Membership::outside)
    throw PreconditionError("witness " + rule.witness.str() + " is not in " + hull_name);
  const OpenInterval* up = find_gap(gaps, rule.alphas.shifted(rule.witness));
  if (up == nullptr) return std::nullopt;
  ExclusionCertificate c{rule.alphas, rule.witness, *up, std::nullopt, {}};
  const Range down = rule.alphas.negated_around(rule.witness);
  if (!all_negative(down)) {
    const OpenInterval* low = find_gap(gaps, down);
    if (low == nullptr) return std::nullopt;
    c.lower_gap = *low;
  }
  return c;
}

// Replays a witness table on [1/4, 4) and scales by powers of 4 below 1/4.
void table_sweep(const std::vector<WitnessRule>& table, const IntervalSet& hull, const std::string& hull_name,
                 std::span<const Rational> members, std::span<const Rational> grid, CenterReport& report) {
  std::vector<OpenInterval> gaps = hull.gaps_within(Interval(Rational(0), gn::diameter()));
  gaps.emplace_back(gn::diameter(), Rational(3) * gn::diameter());
  std::vector<std::optional<ExclusionCertificate>> base;
  for (const WitnessRule& rule : table) {
    base.push_back(table_certificate(rule, hull, gaps, hull_name));
    if (!base.back()) report.notes.push_back("no gap at this level for witness " + rule.witness.str() + " on " + rule.alphas.str());
  }
  std::map<std::pair<std::size_t, unsigned>, bool> emitted;
  for (const Rational& t : grid) {
    ++report.grid.points;
    if (std::find(members.begin(), members.end(), t) != members.end()) {
      ++report.grid.members;
      continue;
    }
    Rational u = t;
    unsigned depth = 0;
    while (u < Rational(1, 4)) {
      u *= Rational(4);
      ++depth;
    }
    std::size_t row = table.size();
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!table[i].alphas.contains(u)) continue;
      if (depth > 0 && Rational(1) <= table[i].alphas.lo) continue;
      row = i;
      break;
    }
    if (row == table.size() || !base[row]) {
      ++report.grid.unresolved;
      report.unresolved.push_back(Range::point(t));
      continue;
    }
    ++report.grid.excluded;
    if (!emitted.emplace(std::make_pair(row, depth), true).second) continue;
    ExclusionCertificate c = depth == 0 ? *base[row] : base[row]->scaled(quarter_pow(depth));
    c.note = depth == 0 ? "witness table" : "witness table scaled by 1/4^" + std::to_string(depth);
    report.certificates.push_back(std::move(c));
  }
}

std::vector<WitnessRule> z_table() {
  return {
      {Range::open(Rational(1, 4), Rational(1, 3)), Rational(1, 2)},
      {Range::point(Rational(1, 4)), Rational(11, 24)},
      {Range::point(Rational(1, 3)), Rational(17, 32)},
      {Range::open(Rational(1, 3), Rational(2, 3)), Rational(1, 3)},
      {Range::point(Rational(2, 3)), Rational(1, 4)},
      {Range::open(Rational(2, 3), Rational(1)), Rational(0)},
      {Range::point(Rational(1)), Rational(11, 24)},
      {Range::open(Rational(1), Rational(4)), Rational(1)},
  };
}

}  // namespace

std::optional<ExclusionCertificate> ExclusionCertificate::from_gap(const OpenInterval& gap, const Rational& witness) {
  if (witness.sign() < 0 || Rational(2) * witness > gap.lo) return std::nullopt;
  return ExclusionCertificate{Range::open(gap.lo - witness, gap.hi - witness), witness, gap, std::nullopt, {}};
}

std::optional<ExclusionCertificate> ExclusionCertificate::through(const OpenInterval& gap, const Rational& witness) {
  if (witness.sign() < 0) return std::nullopt;
  const Range r = Range::open(max(witness, gap.lo - witness), gap.hi - witness);
  if (r.empty()) return std::nullopt;
  return ExclusionCertificate{r, witness, gap, std::nullopt, {}};
}

ExclusionCertificate ExclusionCertificate::scaled(const Rational& factor) const {
  if (factor.sign() <= 0) throw PreconditionError("certificate scale factor must be positive");
  ExclusionCertificate c{excluded.scaled(factor), witness * factor, OpenInterval(gap.lo * factor, gap.hi * factor), std::nullopt, note};
  if (lower_gap) c.lower_gap = OpenInterval(lower_gap->lo * factor, lower_gap->hi * factor);
  return c;
}

bool ExclusionCertificate::sound_for(const IntervalSet& outer) const {
  if (excluded.empty() || outer.contains(witness) == Membership::outside) return false;
  if (outer.intersects(gap) || !excluded.shifted(witness).inside(gap)) return false;
  const Range down = excluded.negated_around(witness);
  if (all_negative(down)) return true;
  return lower_gap && !outer.intersects(*lower_gap) && down.inside(*lower_gap);
}

bool CenterReport::is_member(const Rational& t) const {
  for (const MemberEntry& m : members) {
    if (m.value == t) return true;
  }
  for (const Range& r : member_regions) {
    if (r.contains(t)) return true;
  }
  return false;
}

bool CenterReport::is_excluded(const Rational& t) const {
  if (excluded_above && t > *excluded_above) return true;
  for (const ExclusionCertificate& c : certificates) {
    if (c.excludes(t)) return true;
  }
  for (const Range& r : excluded_regions) {
    if (r.contains(t)) return true;
  }
  return false;
}

bool CenterReport::consistent() const {
  for (const MemberEntry& m : members) {
    if (is_excluded(m.value)) return false;
  }
  for (const Range& r : member_regions) {
    if (is_excluded(r.lo) && r.lo_closed) return false;
    if (is_excluded(r.hi) && r.hi_closed) return false;
    if (r.lo < r.hi && is_excluded(midpoint(r.lo, r.hi))) return false;
  }
  return true;
}

std::vector<Rational> center_finite(std::span<const Rational> points) {
  if (points.empty()) throw PreconditionError("center_finite needs a nonempty set");
  const std::vector<Rational> p = sorted_unique({points.begin(), points.end()});
  std::vector<Rational> candidates{Rational(0)};
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) candidates.push_back(p[j] - p[i]);
  }
  candidates = sorted_unique(std::move(candidates));
  auto has = [&](const Rational& x) { return std::binary_search(p.begin(), p.end(), x); };
  std::vector<Rational> out;
  for (const Rational& alpha : candidates) {
    const bool ok = std::all_of(p.begin(), p.end(), [&](const Rational& x) { return has(x + alpha) || has(x - alpha); });
    if (ok) out.push_back(alpha);
  }
  return out;
}

bool in_center(const IntervalSet& s, const Rational& alpha) {
  if (s.empty()) throw PreconditionError("in_center needs a nonempty set");
  if (alpha.sign() < 0) throw PreconditionError("distance must be nonnegative");
  return s.subset_of(s.translate(alpha).unite(s.translate(-alpha)));
}

CenterReport center_interval_set(const IntervalSet& s, std::uint64_t seed) {
  if (s.empty()) throw PreconditionError("center_interval_set needs a nonempty set");
  CenterReport report;
  report.description = "center of a finite interval union";
  report.set = s;
  const Rational diam = s.max() - s.min();
  const std::vector<Rational> ends = s.endpoints();
  std::vector<Rational> breaks{Rational(0), diam};
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      const Rational d = ends[j] - ends[i];
      breaks.push_back(d);
      breaks.push_back(d / Rational(2));
    }
  }
  breaks = sorted_unique(std::move(breaks));

  std::mt19937_64 rng(seed);
  constexpr long kSteps = 1L << 20;
  std::uniform_int_distribution<long> pick(1, kSteps - 1);

  auto record = [&](const Range& r, bool member) { merge_into(member ? report.member_regions : report.excluded_regions, r); };
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    const Rational& b = breaks[i];
    record(Range::point(b), in_center(s, b));
    if (i + 1 == breaks.size()) break;
    const Rational& next = breaks[i + 1];
    const bool verdict = in_center(s, midpoint(b, next));
    bool agree = true;
    for (int k = 0; k < 3; ++k) {
      const Rational sample = b + (next - b) * Rational(pick(rng), kSteps);
      if (in_center(s, sample) != verdict) agree = false;
    }
    if (!agree) {
      report.unresolved.push_back(Range::open(b, next));
      report.notes.push_back("cell " + Range::open(b, next).str() + " failed the constancy audit");
      continue;
    }
    record(Range::open(b, next), verdict);
  }
  report.excluded_above = diam;
  for (const Range& r : report.member_regions) {
    if (r.lo == r.hi) report.members.push_back({r.lo, MemberStatus::level_uniform, "exact interval check"});
  }
  return report;
}

std::vector<ExclusionCertificate> gap_exclusions(std::span<const OpenInterval> gaps, std::span<const Rational> probes) {
  std::vector<ExclusionCertificate> out;
  for (const OpenInterval& g : gaps) {
    for (const Rational& x : probes) {
      if (auto c = ExclusionCertificate::from_gap(g, x)) out.push_back(std::move(*c));
    }
  }
  return out;
}

std::vector<Rational> propagate_scaled_exclusions(const Approximation& approx, const Rational& lambda, const Rational& b,
                                                  std::span<const Rational> non_members, std::size_t steps) {
  self_similarity_shift(approx, lambda, b);
  std::vector<Rational> out;
  for (const Rational& x : non_members) {
    if (x.sign() < 0 || !(x < b)) throw PreconditionError("non-member " + x.str() + " is outside [0, " + b.str() + ")");
    if (approx.set.contains(x) != Membership::outside)
      throw PreconditionError(x.str() + " is not certified outside the approximation");
    Rational y = x;
    for (std::size_t n = 1; n <= steps; ++n) {
      y *= lambda;
      out.push_back(y);
    }
  }
  return sorted_unique(std::move(out));
}

Rational term_partner(const TermSequence& spec, std::size_t n, std::span<const std::size_t> index_set, std::size_t k) {
  if (k < 1 || k > n) throw PreconditionError("term index must lie in 1.." + std::to_string(n));
  std::vector<std::size_t> idx(index_set.begin(), index_set.end());
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) throw PreconditionError("index set has repeated entries");
  Rational point;
  for (std::size_t i : idx) {
    if (i < 1 || i > n) throw PreconditionError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    point += spec.term(i - 1);
  }
  const Rational a = spec.term(k - 1);
  return std::binary_search(idx.begin(), idx.end(), k) ? point - a : point + a;
}

std::vector<Rational> sweep_grid(const Rational& hi, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) out.push_back(hi * Rational(static_cast<long>(i), static_cast<long>(count)));
  return out;
}

CenterReport verify_geometric_center(const Rational& a, const Rational& q, std::size_t level, std::size_t grid) {
  if (q <= Rational(2)) throw PreconditionError("ratio q must exceed 2");
  if (level < 1) throw PreconditionError("level must be at least 1");
  const TermSequence spec = TermSequence::geometric(a, q);
  const Approximation approx = approximation(spec, level);
  const Rational diam = spec.total();
  const Rational c1 = a / q;
  const Rational c2 = c1 / q;
  const Rational e1 = spec.tail_sum(1);

  CenterReport report;
  report.description = "subsums of " + a.str() + "/" + q.str() + "^n";
  report.set = approx.set;
  report.level = level;
  for (std::size_t k = 0; k < level; ++k) {
    const Rational t = spec.term(k);
    if (!in_center(approx.set, t)) throw std::logic_error("term " + t.str() + " fails on the approximation");
    report.members.push_back({t, MemberStatus::level_uniform, "partner map s -> s +/- " + t.str()});
  }
  if (approximation(spec, level - 1).set.scale(Rational(1) / q) != approx.set.intersect(Interval(Rational(0), e1)))
    throw std::logic_error("self-similarity fails on the approximation");

  Frame f;
  f.outer = approx.set;
  // Finite subsums of a few more terms are points of the set as well.
  f.anchors = approx.set.endpoints();
  for (const Rational& x : partial_sums(spec, std::max<std::size_t>(level, std::min<std::size_t>(level + 6, 16))))
    f.anchors.push_back(x);
  f.anchors = sorted_unique(std::move(f.anchors));
  f.rules.emplace_back(Range::open(c2, c1), OpenInterval(e1, c1));
  f.gaps = approx.set.gaps();
  f.ratio = Rational(1) / q;
  f.base_lo = c2;
  f.base_hi = c1;
  f.base_terms = {c1};
  f.far = *ExclusionCertificate::through(OpenInterval(diam, Rational(3) * diam), c1);
  f.far.note = "diameter";
  report.excluded_above = c1;
  report.certificates.push_back(f.far);
  const std::vector<Rational> points = sweep_grid(diam, grid);
  sweep(f, points, report);
  return report;
}

CenterReport verify_cantorval_center(std::size_t digit_level, std::size_t grid) {
  if (digit_level < 4) throw PreconditionError("insufficient level: need at least 4 digit positions");
  const TermSequence spec = TermSequence::cantorval();
  const Approximation approx = approximation(spec, gn::terms_for_digits(digit_level));

  CenterReport report;
  report.description = "Guthrie-Nymann Cantorval";
  report.set = approx.set;
  report.level = digit_level;
  for (std::size_t k = 1; k <= digit_level; ++k) {
    for (const Rational& t : {Rational(3) * quarter_pow(k), Rational(2) * quarter_pow(k)}) {
      if (!in_center(approx.set, t)) throw std::logic_error("term " + t.str() + " fails on the approximation");
      report.members.push_back({t, MemberStatus::level_uniform, "partner map s -> s +/- " + t.str()});
    }
  }
  const Approximation coarser = approximation(spec, approx.level - 2);
  if (coarser.set.scale(Rational(1, 4)) != approx.set.intersect(Interval(Rational(0), Rational(5, 12))))
    throw std::logic_error("self-similarity fails on the approximation");

  Frame f;
  f.outer = approx.set;
  f.anchors = approx.set.endpoints();
  const IntervalSet inside = x_intervals(std::min<std::size_t>(digit_level, 5));
  f.anchor_intervals.assign(inside.parts().begin(), inside.parts().end());
  f.rules.emplace_back(Range::open(Rational(7, 12), Rational(7, 6)), OpenInterval(Rational(7, 6), Rational(5, 4)));
  f.rules.emplace_back(Range{Rational(29, 96), Rational(7, 12), false, true}, OpenInterval(Rational(29, 48), Rational(5, 8)));
  f.rules.emplace_back(Range{Rational(5, 24), Rational(29, 96), false, true}, OpenInterval(Rational(5, 12), Rational(1, 2)));
  f.gaps = approx.set.gaps();
  f.ratio = Rational(1, 4);
  f.base_lo = Rational(5, 24);
  f.base_hi = gn::symmetry_center();
  f.base_terms = {Rational(1, 2), Rational(3, 4)};
  f.far = *ExclusionCertificate::through(OpenInterval(gn::diameter(), Rational(5)), gn::symmetry_center());
  f.far.note = "diameter; 5/6 lies in [2/3, 1]";
  report.excluded_above = gn::symmetry_center();
  report.certificates.push_back(f.far);
  const std::vector<Rational> points = sweep_grid(gn::symmetry_center(), grid);
  sweep(f, points, report);
  return report;
}

CenterReport verify_z_trivial(std::size_t level, std::size_t grid) {
  if (level < 2) throw PreconditionError("level must be at least 2");
  CenterReport report;
  report.description = "Z = [0, 5/3] minus the interior of the Cantorval";
  report.set = z_hull(level);
  report.level = level;
  report.members.push_back({Rational(0), MemberStatus::level_uniform, "trivial"});
  const std::vector<Rational> points = sweep_grid(Rational(2), grid);
  const std::vector<Rational> members{Rational(0)};
  table_sweep(z_table(), report.set, "the Z hull", members, points, report);
  return report;
}

CenterReport verify_y_center(std::size_t level, std::size_t grid) {
  if (level < 2) throw PreconditionError("level must be at least 2");
  const IntervalSet y = y_hull(level);
  CenterReport report;
  report.description = "Y = Z n X, the boundary of the Cantorval";
  report.set = y;
  report.level = level;
  report.members.push_back({Rational(0), MemberStatus::level_uniform, "trivial"});

  const IntervalSet low = y.intersect(Interval(Rational(0), Rational(2, 3)));
  if (low.translate(Rational(1)) != y.intersect(Interval(Rational(1), gn::diameter())))
    throw std::logic_error("identity (Y n [0,2/3]) + 1 = Y n [1,5/3] fails at level " + std::to_string(level));
  report.members.push_back({Rational(1), MemberStatus::at_level, "(Y n [0,2/3]) + 1 = Y n [1,5/3]"});

  std::vector<Rational> members{Rational(0), Rational(1)};
  for (std::size_t n = 1; n <= level; ++n) {
    const Rational unit = quarter_pow(static_cast<unsigned>(n));
    const IntervalSet head = y.intersect(Interval(Rational(0), Rational(1, 6) * quarter_pow(static_cast<unsigned>(n - 1))));
    const IntervalSet moved = head.translate(unit).unite(head.translate(Rational(2) * unit));
    if (!moved.subset_of(y)) {
      if (n == 1) throw std::logic_error("identity for 1/4 fails at level " + std::to_string(level));
      report.notes.push_back("scaled identity for " + unit.str() + " not verified at this level");
      continue;
    }
    report.members.push_back({unit, MemberStatus::at_level,
                              "(Y n [0," + (Rational(1, 6) * quarter_pow(static_cast<unsigned>(n - 1))).str() + "]) + {" +
                                  unit.str() + ", " + (Rational(2) * unit).str() + "} inside Y"});
    members.push_back(unit);
  }
  report.notes.push_back("1 = 1/4^0 is a member; the sequence 0, 1/4, 1/16, ... written in the statement omits it");

  std::vector<WitnessRule> table;
  for (WitnessRule& r : z_table()) {
    if (r.alphas.lo == r.alphas.hi && (r.alphas.lo == Rational(1, 4) || r.alphas.lo == Rational(1))) continue;
    table.push_back(std::move(r));
  }
  for (std::size_t n = level + 1; n < 64; ++n) members.push_back(quarter_pow(static_cast<unsigned>(n)));
  const std::vector<Rational> points = sweep_grid(Rational(2), grid);
  table_sweep(table, y, "the Y hull", members, points, report);
  return report;
}

ImpossibilityResult subsum_impossibility(std::span<const Rational> center_members, const Rational& set_max,
                                         const Rational& omitted_bound) {
  if (omitted_bound.sign() < 0) throw PreconditionError("omitted bound must be nonnegative");
  std::vector<Rational> m(center_members.begin(), center_members.end());
  std::sort(m.begin(), m.end());
  if (std::adjacent_find(m.begin(), m.end()) != m.end()) throw PreconditionError("center members must be distinct");
  Rational total = omitted_bound;
  for (const Rational& x : m) {
    if (x.sign() <= 0) throw PreconditionError("center members must be positive");
    total += x;
  }
  ImpossibilityResult r;
  const std::string scope = " (impossible for sequences with pairwise distinct terms)";
  if (m.empty() && omitted_bound.is_zero() && set_max.sign() > 0) {
    r.verdict = Verdict::impossible;
    r.explanation = "the center has no positive member, yet the maximum " + set_max.str() + " is positive" + scope;
  } else if (total < set_max) {
    r.verdict = Verdict::impossible;
    r.explanation = "every term lies in the center, whose positive part sums to at most " + total.str() + " < " + set_max.str() + scope;
  } else {
    r.explanation = "the center's positive part sums to at least the maximum " + set_max.str() + "; no contradiction";
  }
  return r;
}

}  // namespace cantorval
