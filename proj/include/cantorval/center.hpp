#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cantorval/interval_set.hpp"
#include "cantorval/rational.hpp"
#include "cantorval/subsums.hpp"

namespace cantorval {

/// Proof that every t in `excluded` lies outside the center of distances of
/// any set C with witness in C and C disjoint from `gap` (and from
/// `lower_gap` when present): witness + t falls in `gap`, and witness - t is
/// either negative or falls in `lower_gap`.
struct ExclusionCertificate {
  Range excluded;
  Rational witness;
  OpenInterval gap;
  std::optional<OpenInterval> lower_gap;
  std::string note;

  /// Classical form: requires witness <= gap.lo / 2; excludes
  /// (gap.lo - witness, gap.hi - witness).
  static std::optional<ExclusionCertificate> from_gap(const OpenInterval& gap, const Rational& witness);
  /// Widest region excluded through `gap` alone using witness - t < 0:
  /// (max(witness, gap.lo - witness), gap.hi - witness). Nullopt when empty.
  static std::optional<ExclusionCertificate> through(const OpenInterval& gap, const Rational& witness);

  bool excludes(const Rational& t) const { return excluded.contains(t); }
  /// Image under x -> factor * x, factor > 0.
  ExclusionCertificate scaled(const Rational& factor) const;
  /// Structural check against a set known to contain C: the witness is not
  /// outside `outer`, the gaps miss `outer`, and both shifted ranges land in
  /// their gaps (or below 0).
  bool sound_for(const IntervalSet& outer) const;
};

enum class MemberStatus {
  /// Holds for the limit set: the witness map is exact at every level.
  level_uniform,
  /// Verified on the outer approximation of the stated level only.
  at_level,
};

struct MemberEntry {
  Rational value;
  MemberStatus status = MemberStatus::at_level;
  std::string witness;
};

struct GridStats {
  std::size_t points = 0;
  std::size_t members = 0;
  std::size_t excluded = 0;
  std::size_t unresolved = 0;
};

struct CenterReport {
  std::string description;
  IntervalSet set;
  std::size_t level = 0;
  std::vector<MemberEntry> members;
  std::vector<Range> member_regions;
  std::vector<ExclusionCertificate> certificates;
  std::vector<Range> excluded_regions;
  /// Every t > excluded_above is excluded (diameter argument).
  std::optional<Rational> excluded_above;
  std::vector<Range> unresolved;
  GridStats grid;
  std::vector<std::string> notes;

  bool is_member(const Rational& t) const;
  bool is_excluded(const Rational& t) const;
  /// No member is also excluded.
  bool consistent() const;
};

/// Center of distances of a finite set: every alpha in {0} u {|p - q|} such
/// that each point has a partner at distance alpha. Throws on empty input.
std::vector<Rational> center_finite(std::span<const Rational> points);

/// s subset of (s + alpha) u (s - alpha). Requires s nonempty and alpha >= 0.
bool in_center(const IntervalSet& s, const Rational& alpha);

/// Exact center of a finite interval union. The verdict is constant on open
/// cells between the breakpoints {0} u {|e_i - e_j|} u {|e_i - e_j| / 2};
/// each cell is decided at its midpoint and audited with three seeded random
/// samples, disagreements landing in `unresolved`.
CenterReport center_interval_set(const IntervalSet& s, std::uint64_t seed = 0);

/// One classical certificate per (gap, probe) pair with probe <= gap.lo / 2.
std::vector<ExclusionCertificate> gap_exclusions(std::span<const OpenInterval> gaps, std::span<const Rational> probes);

/// Checks that the approximation is self-similar with ratio lambda on [0, b]
/// (lambda * approx equals a finer approximation cut at lambda * b), then
/// emits lambda^n x, n = 1..steps, for each certified non-member x in [0, b).
/// Sorted and deduplicated. Throws PreconditionError when the hypothesis or a
/// non-member check fails.
std::vector<Rational> propagate_scaled_exclusions(const Approximation& approx, const Rational& lambda, const Rational& b,
                                                  std::span<const Rational> non_members, std::size_t steps);

/// Partner of the subsum with 1-based index set A (over the first n terms)
/// at distance a_k: the subsum minus a_k if k is in A, plus a_k otherwise.
Rational term_partner(const TermSequence& spec, std::size_t n, std::span<const std::size_t> index_set, std::size_t k);

/// Equally spaced grid hi * i / count, i = 1..count.
std::vector<Rational> sweep_grid(const Rational& hi, std::size_t count);

/// Center of the subsum set of a/q^n, q > 2: terms confirmed at the given
/// term level, `grid` points of (0, a/(q-1)] excluded or counted as terms.
CenterReport verify_geometric_center(const Rational& a, const Rational& q, std::size_t level, std::size_t grid);
/// Center of the Cantorval at a digit level >= 4; grid over (0, 5/6].
CenterReport verify_cantorval_center(std::size_t digit_level, std::size_t grid);
/// Triviality of the center of Z = [0, 5/3] \ int X; grid over (0, 2].
CenterReport verify_z_trivial(std::size_t level, std::size_t grid);
/// Center of Y = Z n X: 1 and 1/4^n confirmed through translation
/// identities on y_hull(level); grid over (0, 2]. Throws std::logic_error if
/// an identity fails.
CenterReport verify_y_center(std::size_t level, std::size_t grid = 500);

enum class Verdict { impossible, inconclusive };

struct ImpossibilityResult {
  Verdict verdict = Verdict::inconclusive;
  std::string explanation;
};

/// Whether a set with maximum `set_max` can be the subsum set of a sequence
/// of pairwise distinct terms, given the positive part of its center.
/// `omitted_bound` bounds the total of center members not listed.
ImpossibilityResult subsum_impossibility(std::span<const Rational> center_members, const Rational& set_max,
                                         const Rational& omitted_bound = Rational(0));

}  // namespace cantorval
