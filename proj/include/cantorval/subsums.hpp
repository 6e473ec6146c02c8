#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cantorval/interval_set.hpp"
#include "cantorval/rational.hpp"

namespace cantorval {

/// Default cap on the number of subsets (2^n) or digit strings (4^n) an
/// enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Descriptor of a convergent positive series, with exact tails.
///
/// Three kinds are supported: the Guthrie-Nymann sequence
/// 3/4, 1/2, 3/16, 1/8, ..., 3/4^k, 2/4^k, ...; a geometric sequence
/// a/q, a/q^2, ...; and an explicit finite list with a caller-supplied bound
/// on everything omitted after it.
class TermSequence {
 public:
  enum class Kind { cantorval, geometric, explicit_terms };

  static TermSequence cantorval();
  /// Requires a > 0 and q > 1.
  static TermSequence geometric(Rational a, Rational q);
  /// Requires positive terms and a non-negative tail.
  static TermSequence explicit_terms(std::vector<Rational> terms, Rational tail, std::string name = "explicit");

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  /// Geometric parameters (a, q); only meaningful for Kind::geometric.
  const Rational& ratio_numerator() const { return a_; }
  const Rational& ratio() const { return q_; }
  /// Number of available terms for explicit sequences, nullopt when infinite.
  std::optional<std::size_t> length() const;

  /// 0-based term access. Throws PreconditionError past an explicit list.
  Rational term(std::size_t index) const;
  std::vector<Rational> terms(std::size_t n) const;
  /// Exact sum of every term after the first n.
  Rational tail_sum(std::size_t n) const;
  Rational total() const { return tail_sum(0); }

 private:
  TermSequence(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  Rational a_;
  Rational q_;
  std::vector<Rational> explicit_;
  Rational explicit_tail_;
};

/// Level-n outer approximation: union of [s, s + tail] over all subsums s of
/// the first `level` terms. Left ends are finite subsums, right ends are
/// finite subsums plus the full tail, so every gap is a gap of the true set.
struct Approximation {
  TermSequence spec;
  std::size_t level = 0;
  IntervalSet set;
  Rational tail;
};

/// Sorted, deduplicated subset sums of the first n terms. Throws
/// BudgetExceeded when 2^n > budget.
std::vector<Rational> partial_sums(const TermSequence& spec, std::size_t n, std::uint64_t budget = kDefaultBudget);
Approximation approximation(const TermSequence& spec, std::size_t n, std::uint64_t budget = kDefaultBudget);
/// Gaps of the level-n approximation inside [0, total].
std::vector<OpenInterval> gaps(const TermSequence& spec, std::size_t n, std::uint64_t budget = kDefaultBudget);

/// K_n: points of [2/3, 1] of the form sum_{i<=n} x_i / 4^i, x_i in {0,2,3,5}.
std::vector<Rational> k_set(std::size_t n, std::uint64_t budget = kDefaultBudget);

/// One generated X-interval together with its generation: an interval of
/// scale j has length (1/3) * 4^-j.
struct XInterval {
  Interval interval;
  unsigned scale = 0;
};

/// The maximal X-intervals reachable from [2/3, 1] by compositions of the
/// copy maps x -> s_m + x / 4^(m+1) (s_m = sum_{i=1..m} 2/4^i) and their
/// mirror images under x -> 5/3 - x, keeping every image of scale <= depth.
std::vector<XInterval> x_interval_family(std::size_t depth);
IntervalSet x_intervals(std::size_t depth);

/// Outer hull of Z = [0, 5/3] minus int X: [0, 5/3] with the interiors of
/// x_intervals(n) removed.
IntervalSet z_hull(std::size_t n);
/// Outer hull of Y = Z n X: z_hull(n) intersected with the digit-level n
/// approximation (2n terms).
IntervalSet y_hull(std::size_t n);

namespace detail {
/// Reference enumeration in exact rationals, bypassing the integer kernels.
std::vector<Rational> partial_sums_rational(const TermSequence& spec, std::size_t n);
/// Integer-kernel enumeration; nullopt when the common denominator is too
/// large for 64-bit arithmetic.
std::optional<std::vector<Rational>> partial_sums_scaled(const TermSequence& spec, std::size_t n);
}  // namespace detail

/// Constants and structure specific to the Guthrie-Nymann Cantorval.
namespace gn {

inline Rational diameter() { return Rational(5, 3); }
inline Rational symmetry_center() { return Rational(5, 6); }
/// The involution x -> 5/3 - x.
inline Rational mirror(const Rational& x) { return diameter() - x; }

/// Number of gn terms realized at a digit level (two per base-4 digit).
inline std::size_t terms_for_digits(std::size_t digits) { return 2 * digits; }

/// Total gap length of the digit-level k approximation in closed form:
/// 1/6 + sum_{m=0}^{k-2} (1/8)(3/4)^m for k >= 1, and 0 for k = 0.
Rational gap_total_closed_form(std::size_t k);
/// Length added to the gap total when passing from digit level k-1 to k.
Rational gap_increment(std::size_t k);
/// Total length of X-intervals of scale exactly j: 1/3, 1/6, then
/// (1/8)(3/4)^(j-2).
Rational interval_series_term(std::size_t j);

/// One of the six affine copies of D = X n [0, 1/6]: x -> offset + sign * x.
struct AffineCopy {
  std::string label;
  Rational offset;
  bool reflected = false;
  Interval region;

  Rational apply(const Rational& x) const { return reflected ? offset - x : offset + x; }
  IntervalSet apply(const IntervalSet& s) const { return reflected ? s.reflect(offset / Rational(2)) : s.translate(offset); }
};
std::vector<AffineCopy> d_copies();

struct GapIntervalPair {
  OpenInterval gap;
  Interval interval;
};

struct Correspondence {
  std::vector<GapIntervalPair> pairs;
  std::vector<OpenInterval> unmatched;
};

/// Pairs every gap of the digit-level `depth` approximation with the
/// X-interval of equal length obtained by shifting the gap by 3x its length.
Correspondence gap_interval_correspondence(std::size_t depth);

}  // namespace gn

}  // namespace cantorval
