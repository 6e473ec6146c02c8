#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cantorval/rational.hpp"
#include "cantorval/subsums.hpp"

namespace cantorval {

/// Eventually periodic base-4 stream over the digits {0, 2, 3, 5}; digit i
/// (1-based) has weight 4^-i.
///
/// Normal form: the period is primitive (empty for an all-zero tail) and the
/// prefix is as short as possible, so equal digit sequences compare equal.
class DigitStream {
 public:
  DigitStream() = default;
  /// Validates digits and normalizes. Throws PreconditionError on a digit
  /// outside {0, 2, 3, 5}.
  DigitStream(std::vector<int> prefix, std::vector<int> period);

  /// "prefix|period" (either side may be empty; no bar means a zero tail).
  static DigitStream parse(std::string_view text);
  /// Inverse of parse; the zero stream prints as "0".
  std::string str() const;

  const std::vector<int>& prefix() const { return prefix_; }
  const std::vector<int>& period() const { return period_; }
  /// Digit at 1-based position i.
  int digit(std::size_t i) const;

  Rational value() const;

  friend bool operator==(const DigitStream&, const DigitStream&) = default;
  friend bool operator<(const DigitStream& a, const DigitStream& b) {
    return a.prefix_ != b.prefix_ ? a.prefix_ < b.prefix_ : a.period_ < b.period_;
  }

 private:
  std::vector<int> prefix_;
  std::vector<int> period_;
};

bool is_digit(int d);

/// One step of a chase after the start position. In the phase where A
/// trails (A = chasing) the moves write (3,0), (5,2) and (5,0); in the other
/// phase they write the mirrored pairs (0,3), (2,5) and (0,5). A switch flips
/// the phase.
enum class ChaseMove { free0, free2, change };

/// Chase description: common prefix `base` (the start position is
/// base.size() + 1), then `lead` moves, then `cycle` repeated forever.
struct ChaseSchedule {
  std::vector<int> base;
  std::vector<ChaseMove> lead;
  std::vector<ChaseMove> cycle;

  /// Indices n0 < n1 < ... with only free0 moves in between. A finite
  /// schedule keeps the last phase with a free0 cycle; a periodic one
  /// repeats the last index gap. `base` is padded with zeros up to n0 - 1.
  /// Throws PreconditionError when indices are empty, not increasing, not
  /// above base, or when periodic has fewer than two indices.
  static ChaseSchedule from_indices(std::vector<int> base, const std::vector<std::size_t>& indices, bool periodic);

  std::size_t start() const { return base.size() + 1; }
  /// Positions of the start and of every switch inside the lead.
  std::vector<std::size_t> indices() const;
  bool periodic() const;
  std::string str() const;

  friend bool operator==(const ChaseSchedule&, const ChaseSchedule&) = default;
};

/// The two representations (A, B) driven by a schedule: A has 2 and B has 3
/// at the start position. Throws PreconditionError on an invalid base digit
/// or an empty cycle.
std::pair<DigitStream, DigitStream> chase_pair(const ChaseSchedule& schedule);

/// Inverse of chase_pair in normal form; nullopt unless (a, b) is a chase
/// pair with a as the trailing side.
std::optional<ChaseSchedule> extract_schedule(const DigitStream& a, const DigitStream& b);

/// The other representation of s.value(), if any.
std::optional<DigitStream> dual(const DigitStream& s);

enum class UniquenessReason {
  /// 2 immediately followed by 3 recurs in the period.
  pattern,
  /// No position can start a chase.
  no_chase_start,
  /// A dual exists.
  has_dual,
};

struct Uniqueness {
  bool unique = false;
  UniquenessReason reason = UniquenessReason::has_dual;
};

Uniqueness is_unique(const DigitStream& s);

/// Every representation of v, at most `limit` of them, sorted.
std::vector<DigitStream> represent(const Rational& v, std::size_t limit = 16);

/// A tail menu entry: a period, empty for the zero tail.
using Tail = std::vector<int>;
/// Zero, (3), (5,0), (0,5).
std::vector<Tail> standard_tails();

struct CollisionGroup {
  Rational value;
  std::vector<DigitStream> streams;
};

struct OracleResult {
  std::size_t streams = 0;
  std::size_t distinct_values = 0;
  std::size_t largest_group = 0;
  /// Groups with at least two streams, ordered by value.
  std::vector<CollisionGroup> collisions;
  /// Every enumerated stream, in enumeration order.
  std::vector<DigitStream> universe;
};

/// All streams with a length-L prefix and a tail from the menu, grouped by
/// exact value. Throws BudgetExceeded when 4^L * |menu| > budget.
OracleResult collision_oracle(std::size_t length, const std::vector<Tail>& menu, std::uint64_t budget = kDefaultBudget);

/// Periodic selection of Cantorval terms by digit position: token j (cycled)
/// names which of 3/4^i, 2/4^i are kept at positions i = j (mod period).
class KeepPattern {
 public:
  /// Tokens separated by ';', each "3", "2", "32" or "-". Throws
  /// PreconditionError on syntax errors or when the selection or its
  /// complement is finite.
  static KeepPattern parse(std::string_view text);

  /// Whether the term digit/4^position is kept (digit 2 or 3, position >= 1).
  bool keeps(std::size_t position, int digit) const;
  /// Sum of the kept digits at a position.
  int weight(std::size_t position) const;
  std::size_t period() const { return tokens_.size(); }
  std::string str() const;

 private:
  std::vector<std::pair<bool, bool>> tokens_;  // (keep 3, keep 2)
};

struct SubsetProxy {
  std::size_t level = 0;
  std::size_t terms = 0;
  Rational tail;
  Rational largest_part;
  std::size_t parts = 0;
};

/// Largest part of the digit-level approximation of the subsum set of the
/// kept terms, with the exact tail of everything kept beyond that level.
/// Throws PreconditionError when the first `level` positions keep nothing
/// or keep everything.
SubsetProxy cantor_subset_gap_proxy(const KeepPattern& keep, std::size_t level, std::uint64_t budget = kDefaultBudget);

}  // namespace cantorval
