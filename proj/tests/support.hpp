#pragma once

// Hand-rolled generators for property tests. Seeds are fixed so every run
// visits the same cases.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cantorval/interval_set.hpp"
#include "cantorval/rational.hpp"
#include "oracles/frac.hpp"

namespace gen {

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Rational with denominator in [1, max_den] and value in [lo, hi] * den.
  cantorval::Rational rational(long lo, long hi, long max_den) {
    const long den = integer(1, max_den);
    return cantorval::Rational(integer(lo * den, hi * den), den);
  }

  /// Raw intervals (possibly overlapping or touching) on a coarse grid so
  /// that merges actually happen.
  std::vector<cantorval::Interval> intervals(std::size_t max_count, long span, long den) {
    std::vector<cantorval::Interval> out;
    const std::size_t count = static_cast<std::size_t>(integer(0, static_cast<long>(max_count)));
    for (std::size_t i = 0; i < count; ++i) {
      const long a = integer(0, span * den);
      const long b = a + integer(0, span * den / 3);
      out.emplace_back(cantorval::Rational(a, den), cantorval::Rational(b, den));
    }
    return out;
  }

  cantorval::IntervalSet interval_set(std::size_t max_count, long span, long den) {
    return cantorval::IntervalSet::normalize(intervals(max_count, span, den));
  }

  std::vector<int> digits(std::size_t max_len) {
    static const int kDigits[] = {0, 2, 3, 5};
    std::vector<int> out(static_cast<std::size_t>(integer(0, static_cast<long>(max_len))));
    for (int& d : out) d = kDigits[integer(0, 3)];
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline oracle::Frac to_frac(const cantorval::Rational& r) {
  return oracle::Frac::raw(static_cast<oracle::i128>(r.numerator().get_si()), static_cast<oracle::i128>(r.denominator().get_si()));
}

inline std::vector<std::string> strs(const std::vector<cantorval::Rational>& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

inline std::vector<std::string> part_strs(const cantorval::IntervalSet& s) {
  std::vector<std::string> out;
  for (const auto& iv : s.parts()) out.push_back(iv.lo.str() + "," + iv.hi.str());
  return out;
}

inline std::vector<std::string> gap_strs(const std::vector<cantorval::OpenInterval>& gaps) {
  std::vector<std::string> out;
  for (const auto& g : gaps) out.push_back(g.lo.str() + "," + g.hi.str());
  return out;
}

}  // namespace gen
