#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cantorval/rational.hpp"

namespace cantorval {

/// Closed interval [lo, hi]; lo == hi is a singleton.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational lo_, Rational hi_);

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Open interval (lo, hi) with lo < hi. Gaps are always reported in this form.
struct OpenInterval {
  Rational lo;
  Rational hi;

  OpenInterval() = default;
  OpenInterval(Rational lo_, Rational hi_);

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo < x && x < hi; }

  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// Interval with independently open or closed ends; used for excluded or
/// member regions of a center-of-distances report.
struct Range {
  Rational lo;
  Rational hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Range point(const Rational& x) { return {x, x, true, true}; }
  static Range open(const Rational& lo, const Rational& hi) { return {lo, hi, false, false}; }
  static Range closed(const Rational& lo, const Rational& hi) { return {lo, hi, true, true}; }

  bool empty() const;
  bool contains(const Rational& x) const;
  /// True when every point of this range lies strictly inside `gap`.
  bool inside(const OpenInterval& gap) const;
  Range shifted(const Rational& t) const;
  /// Image under x -> factor * x for factor > 0.
  Range scaled(const Rational& factor) const;
  /// Image under x -> c - x (ends swap).
  Range negated_around(const Rational& c) const;
  std::string str() const;

  friend bool operator==(const Range&, const Range&) = default;
};

enum class Membership { interior, boundary, outside };

/// Finite union of pairwise disjoint closed intervals, sorted, with touching
/// parts merged. Values are immutable once built.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Canonical union of arbitrary closed intervals (idempotent,
  /// order-insensitive).
  static IntervalSet normalize(std::vector<Interval> raw);
  static IntervalSet single(const Rational& lo, const Rational& hi) { return normalize({Interval(lo, hi)}); }

  std::span<const Interval> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  const Rational& min() const;
  const Rational& max() const;

  Rational measure() const;
  Rational largest_part_length() const;
  Membership contains(const Rational& x) const;
  bool intersects(const OpenInterval& gap) const;
  bool subset_of(const IntervalSet& other) const;

  /// Maximal open intervals of hull \ *this, increasing. Throws
  /// PreconditionError unless *this is contained in hull.
  std::vector<OpenInterval> gaps_within(const Interval& hull) const;
  /// Gaps between consecutive parts.
  std::vector<OpenInterval> gaps() const;
  /// Ordered list of all part endpoints (singletons contribute once).
  std::vector<Rational> endpoints() const;

  IntervalSet translate(const Rational& t) const;
  /// Throws PreconditionError unless factor > 0.
  IntervalSet scale(const Rational& factor) const;
  /// Image under x -> 2c - x.
  IntervalSet reflect(const Rational& center) const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet intersect(const Interval& window) const;
  /// hull minus the interiors of the parts of `holes` (a closed set).
  static IntervalSet remove_interiors(const Interval& hull, const IntervalSet& holes);

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  explicit IntervalSet(std::vector<Interval> canonical) : parts_(std::move(canonical)) {}
  // Index of the last part whose lo <= x, if any.
  std::optional<std::size_t> locate(const Rational& x) const;

  std::vector<Interval> parts_;
};

}  // namespace cantorval
