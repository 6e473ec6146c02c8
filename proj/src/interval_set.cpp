#include "cantorval/interval_set.hpp"

#include <algorithm>

#include "cantorval/errors.hpp"

namespace cantorval {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw PreconditionError("interval with lo > hi: [" + lo.str() + ", " + hi.str() + "]");
}

OpenInterval::OpenInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi)) throw PreconditionError("open interval needs lo < hi: (" + lo.str() + ", " + hi.str() + ")");
}

bool Range::empty() const { return hi < lo || (lo == hi && !(lo_closed && hi_closed)); }

bool Range::contains(const Rational& x) const {
  const bool above = lo_closed ? lo <= x : lo < x;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

bool Range::inside(const OpenInterval& gap) const {
  if (empty()) return true;
  const bool lo_ok = lo_closed ? gap.lo < lo : gap.lo <= lo;
  const bool hi_ok = hi_closed ? hi < gap.hi : hi <= gap.hi;
  return lo_ok && hi_ok;
}

Range Range::shifted(const Rational& t) const { return {lo + t, hi + t, lo_closed, hi_closed}; }

Range Range::scaled(const Rational& factor) const {
  if (factor.sign() <= 0) throw PreconditionError("range scale factor must be positive");
  return {lo * factor, hi * factor, lo_closed, hi_closed};
}

Range Range::negated_around(const Rational& c) const { return {c - hi, c - lo, hi_closed, lo_closed}; }

std::string Range::str() const {
  if (lo == hi && lo_closed && hi_closed) return "{" + lo.str() + "}";
  return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() + (hi_closed ? "]" : ")");
}

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  std::vector<Interval> out;
  out.reserve(raw.size());
  for (auto& iv : raw) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = std::move(iv.hi);
    } else {
      out.push_back(std::move(iv));
    }
  }
  return IntervalSet(std::move(out));
}

const Rational& IntervalSet::min() const {
  if (parts_.empty()) throw PreconditionError("min of empty interval set");
  return parts_.front().lo;
}

const Rational& IntervalSet::max() const {
  if (parts_.empty()) throw PreconditionError("max of empty interval set");
  return parts_.back().hi;
}

Rational IntervalSet::measure() const {
  Rational total;
  for (const auto& p : parts_) total += p.length();
  return total;
}

Rational IntervalSet::largest_part_length() const {
  Rational best;
  for (const auto& p : parts_) best = cantorval::max(best, p.length());
  return best;
}

std::optional<std::size_t> IntervalSet::locate(const Rational& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Rational& v, const Interval& p) { return v < p.lo; });
  if (it == parts_.begin()) return std::nullopt;
  return static_cast<std::size_t>(std::distance(parts_.begin(), it) - 1);
}

Membership IntervalSet::contains(const Rational& x) const {
  const auto idx = locate(x);
  if (!idx) return Membership::outside;
  const Interval& p = parts_[*idx];
  if (x > p.hi) return Membership::outside;
  if (x == p.lo || x == p.hi) return Membership::boundary;
  return Membership::interior;
}

bool IntervalSet::intersects(const OpenInterval& gap) const {
  // First part with hi > gap.lo; it meets the gap iff it starts before gap.hi.
  auto it = std::upper_bound(parts_.begin(), parts_.end(), gap.lo,
                             [](const Rational& v, const Interval& p) { return v < p.hi; });
  return it != parts_.end() && it->lo < gap.hi;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  for (const auto& p : parts_) {
    const auto idx = other.locate(p.lo);
    if (!idx || other.parts_[*idx].hi < p.hi) return false;
  }
  return true;
}

std::vector<OpenInterval> IntervalSet::gaps_within(const Interval& hull) const {
  if (!parts_.empty() && (parts_.front().lo < hull.lo || hull.hi < parts_.back().hi)) {
    throw PreconditionError("set is not contained in hull [" + hull.lo.str() + ", " + hull.hi.str() + "]");
  }
  std::vector<OpenInterval> out;
  Rational cursor = hull.lo;
  for (const auto& p : parts_) {
    if (cursor < p.lo) out.emplace_back(cursor, p.lo);
    cursor = p.hi;
  }
  if (cursor < hull.hi) out.emplace_back(cursor, hull.hi);
  return out;
}

std::vector<OpenInterval> IntervalSet::gaps() const {
  std::vector<OpenInterval> out;
  for (std::size_t i = 1; i < parts_.size(); ++i) out.emplace_back(parts_[i - 1].hi, parts_[i].lo);
  return out;
}

std::vector<Rational> IntervalSet::endpoints() const {
  std::vector<Rational> out;
  out.reserve(parts_.size() * 2);
  for (const auto& p : parts_) {
    out.push_back(p.lo);
    if (p.hi != p.lo) out.push_back(p.hi);
  }
  return out;
}

IntervalSet IntervalSet::translate(const Rational& t) const {
  std::vector<Interval> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) out.emplace_back(p.lo + t, p.hi + t);
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::scale(const Rational& factor) const {
  if (factor.sign() <= 0) throw PreconditionError("scale factor must be positive, got " + factor.str());
  std::vector<Interval> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) out.emplace_back(p.lo * factor, p.hi * factor);
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::reflect(const Rational& center) const {
  const Rational twice = center * Rational(2);
  std::vector<Interval> out;
  out.reserve(parts_.size());
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) out.emplace_back(twice - it->hi, twice - it->lo);
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all;
  all.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(all),
             [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  out.reserve(all.size());
  for (auto& iv : all) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = std::move(iv.hi);
    } else {
      out.push_back(std::move(iv));
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = other.parts_[j];
    const Rational lo = cantorval::max(a.lo, b.lo);
    const Rational hi = cantorval::min(a.hi, b.hi);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (a.hi < b.hi) ++i; else ++j;
  }
  // Disjoint inputs can only yield disjoint, sorted pieces; merging is still
  // needed for the rare case where two pieces meet at a shared point.
  return normalize(std::move(out));
}

IntervalSet IntervalSet::intersect(const Interval& window) const {
  return intersect(IntervalSet({window}));
}

IntervalSet IntervalSet::remove_interiors(const Interval& hull, const IntervalSet& holes) {
  std::vector<Interval> out;
  Rational cursor = hull.lo;
  bool done = false;
  for (const auto& h : holes.parts_) {
    if (h.lo == h.hi) continue;  // a singleton has empty interior
    if (h.hi <= hull.lo) continue;
    if (hull.hi <= h.lo) break;
    if (cursor <= h.lo) out.emplace_back(cursor, h.lo);
    if (hull.hi <= h.hi) { done = true; break; }
    cursor = cantorval::max(cursor, h.hi);
  }
  if (!done) out.emplace_back(cursor, hull.hi);
  return normalize(std::move(out));
}

}  // namespace cantorval
