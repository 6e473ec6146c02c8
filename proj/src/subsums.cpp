#include "cantorval/subsums.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "cantorval/errors.hpp"
#include "cantorval/kernels.hpp"

namespace cantorval {
namespace {

void check_subset_budget(std::size_t n, std::uint64_t budget) {
  if (n >= 63 || (std::uint64_t{1} << n) > budget) {
    throw BudgetExceeded("enumeration budget exceeded: 2^" + std::to_string(n) + " subsets > budget " +
                         std::to_string(budget));
  }
}

// Merge of two sorted vectors with duplicates dropped.
template <class T>
std::vector<T> merge_unique(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    const T* next;
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      next = &a[i++];
    } else if (i == a.size() || b[j] < a[i]) {
      next = &b[j++];
    } else {
      next = &a[i++];
      ++j;
    }
    if (out.empty() || out.back() < *next) out.push_back(*next);
  }
  return out;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Common denominator of the first n terms and the level-n tail, with every
// quantity scaled to an integer; nullopt if the total would not fit in int64.
struct ScaledTerms {
  mpz_class denominator;
  std::vector<std::int64_t> terms;
  std::int64_t tail = 0;
};

std::optional<ScaledTerms> scale_terms(const TermSequence& spec, std::size_t n) {
  const auto terms = spec.terms(n);
  const Rational tail = spec.tail_sum(n);
  mpz_class den = tail.denominator();
  for (const auto& t : terms) den = lcm(den, t.denominator());
  const mpz_class total = (spec.total() * Rational(den)).numerator();
  // Leave headroom so that sum + tail never overflows.
  if (mpz_sizeinbase(total.get_mpz_t(), 2) > 61) return std::nullopt;
  ScaledTerms out;
  out.denominator = den;
  for (const auto& t : terms) out.terms.push_back((t * Rational(den)).numerator().get_si());
  out.tail = (tail * Rational(den)).numerator().get_si();
  return out;
}

std::vector<std::int64_t> enumerate_scaled(const std::vector<std::int64_t>& terms) {
  std::vector<std::int64_t> sums{0};
  std::vector<std::int64_t> shifted;
  for (const auto t : terms) {
    shifted.resize(sums.size());
    simd::add_offset(sums, t, shifted);
    sums = merge_unique(sums, shifted);
  }
  return sums;
}

IntervalSet thicken_scaled(const std::vector<std::int64_t>& sums, std::int64_t width, const mpz_class& den) {
  std::vector<std::uint8_t> flags(sums.empty() ? 0 : sums.size() - 1);
  simd::mark_breaks(sums, width, flags);
  std::vector<Interval> parts;
  const Rational scale(mpz_class(1), den);
  std::size_t start = 0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const bool last = i + 1 == sums.size();
    if (last || flags[i]) {
      parts.emplace_back(Rational(mpz_class(static_cast<long>(sums[start]))) * scale,
                         Rational(mpz_class(static_cast<long>(sums[i] + width))) * scale);
      start = i + 1;
    }
  }
  return IntervalSet::normalize(std::move(parts));
}

}  // namespace

TermSequence TermSequence::cantorval() { return TermSequence(Kind::cantorval, "gn-cantorval"); }

TermSequence TermSequence::geometric(Rational a, Rational q) {
  if (a.sign() <= 0) throw PreconditionError("geometric sequence needs a > 0, got " + a.str());
  if (q <= Rational(1)) throw PreconditionError("geometric sequence needs q > 1, got " + q.str());
  TermSequence s(Kind::geometric, "geometric(" + a.str() + "," + q.str() + ")");
  s.a_ = std::move(a);
  s.q_ = std::move(q);
  return s;
}

TermSequence TermSequence::explicit_terms(std::vector<Rational> terms, Rational tail, std::string name) {
  for (const auto& t : terms) {
    if (t.sign() <= 0) throw PreconditionError("explicit terms must be positive, got " + t.str());
  }
  if (tail.sign() < 0) throw PreconditionError("explicit tail bound must be non-negative");
  TermSequence s(Kind::explicit_terms, std::move(name));
  s.explicit_ = std::move(terms);
  s.explicit_tail_ = std::move(tail);
  return s;
}

std::optional<std::size_t> TermSequence::length() const {
  if (kind_ == Kind::explicit_terms) return explicit_.size();
  return std::nullopt;
}

Rational TermSequence::term(std::size_t index) const {
  switch (kind_) {
    case Kind::cantorval: {
      const auto k = static_cast<unsigned>(index / 2 + 1);
      return Rational(index % 2 == 0 ? 3 : 2) * quarter_pow(k);
    }
    case Kind::geometric:
      return a_ / pow(q_, static_cast<long>(index + 1));
    case Kind::explicit_terms:
      if (index >= explicit_.size()) {
        throw PreconditionError("term " + std::to_string(index + 1) + " requested from explicit sequence of length " +
                                std::to_string(explicit_.size()));
      }
      return explicit_[index];
  }
  return {};
}

std::vector<Rational> TermSequence::terms(std::size_t n) const {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(term(i));
  return out;
}

Rational TermSequence::tail_sum(std::size_t n) const {
  switch (kind_) {
    case Kind::cantorval: {
      // Xe(m) = (5/3) 4^-m after m full digits; an odd n has consumed the
      // 3/4^(m+1) term but not yet 2/4^(m+1).
      const auto m = static_cast<unsigned>(n / 2);
      if (n % 2 == 0) return Rational(5, 3) * quarter_pow(m);
      return Rational(2) * quarter_pow(m + 1) + Rational(5, 3) * quarter_pow(m + 1);
    }
    case Kind::geometric:
      return a_ / (pow(q_, static_cast<long>(n)) * (q_ - Rational(1)));
    case Kind::explicit_terms: {
      if (n > explicit_.size()) {
        throw PreconditionError("level " + std::to_string(n) + " exceeds explicit sequence length " +
                                std::to_string(explicit_.size()));
      }
      Rational sum = explicit_tail_;
      for (std::size_t i = n; i < explicit_.size(); ++i) sum += explicit_[i];
      return sum;
    }
  }
  return {};
}

namespace detail {

std::vector<Rational> partial_sums_rational(const TermSequence& spec, std::size_t n) {
  std::vector<Rational> sums{Rational(0)};
  for (const auto& t : spec.terms(n)) {
    std::vector<Rational> shifted;
    shifted.reserve(sums.size());
    for (const auto& s : sums) shifted.push_back(s + t);
    sums = merge_unique(sums, shifted);
  }
  return sums;
}

std::optional<std::vector<Rational>> partial_sums_scaled(const TermSequence& spec, std::size_t n) {
  const auto scaled = scale_terms(spec, n);
  if (!scaled) return std::nullopt;
  const auto sums = enumerate_scaled(scaled->terms);
  std::vector<Rational> out;
  out.reserve(sums.size());
  for (const auto s : sums) out.emplace_back(mpz_class(static_cast<long>(s)), scaled->denominator);
  return out;
}

}  // namespace detail

std::vector<Rational> partial_sums(const TermSequence& spec, std::size_t n, std::uint64_t budget) {
  check_subset_budget(n, budget);
  if (auto fast = detail::partial_sums_scaled(spec, n)) return std::move(*fast);
  return detail::partial_sums_rational(spec, n);
}

Approximation approximation(const TermSequence& spec, std::size_t n, std::uint64_t budget) {
  check_subset_budget(n, budget);
  Approximation out{spec, n, {}, spec.tail_sum(n)};
  if (const auto scaled = scale_terms(spec, n)) {
    out.set = thicken_scaled(enumerate_scaled(scaled->terms), scaled->tail, scaled->denominator);
    return out;
  }
  std::vector<Interval> parts;
  for (const auto& s : detail::partial_sums_rational(spec, n)) parts.emplace_back(s, s + out.tail);
  out.set = IntervalSet::normalize(std::move(parts));
  return out;
}

std::vector<OpenInterval> gaps(const TermSequence& spec, std::size_t n, std::uint64_t budget) {
  const auto approx = approximation(spec, n, budget);
  return approx.set.gaps_within(Interval(Rational(0), spec.total()));
}

std::vector<Rational> k_set(std::size_t n, std::uint64_t budget) {
  if (n == 0) throw PreconditionError("k_set needs n >= 1");
  if (n >= 31 || (std::uint64_t{1} << (2 * n)) > budget) {
    throw BudgetExceeded("enumeration budget exceeded: 4^" + std::to_string(n) + " digit strings > budget " +
                         std::to_string(budget));
  }
  // Values scaled by 4^n: v = sum x_i 4^(n-i).
  std::vector<std::int64_t> values{0};
  std::vector<std::int64_t> next;
  for (std::size_t i = 0; i < n; ++i) {
    next.resize(values.size() * 4);
    std::size_t offset = 0;
    for (const std::int64_t digit : {0, 2, 3, 5}) {
      simd::shift_add(values, 2, digit, std::span<std::int64_t>(next).subspan(offset, values.size()));
      offset += values.size();
    }
    values.swap(next);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const std::int64_t scale = std::int64_t{1} << (2 * n);
  std::vector<Rational> out;
  for (const auto v : values) {
    if (3 * v >= 2 * scale && v <= scale) out.emplace_back(mpz_class(static_cast<long>(v)), mpz_class(static_cast<long>(scale)));
  }
  return out;
}

std::vector<XInterval> x_interval_family(std::size_t depth) {
  const Rational top = gn::diameter();
  // family[d]: everything generated with total scale <= d.
  std::vector<std::vector<XInterval>> family(depth + 1);
  for (std::size_t d = 0; d <= depth; ++d) {
    auto& cur = family[d];
    cur.push_back({Interval(Rational(2, 3), Rational(1)), 0});
    Rational shift;  // s_{e-1} = sum_{i=1}^{e-1} 2/4^i
    for (std::size_t e = 1; e <= d; ++e) {
      const Rational factor = quarter_pow(static_cast<unsigned>(e));
      for (const auto& x : family[d - e]) {
        const Rational lo = shift + x.interval.lo * factor;
        const Rational hi = shift + x.interval.hi * factor;
        const auto scale = static_cast<unsigned>(x.scale + e);
        cur.push_back({Interval(lo, hi), scale});
        cur.push_back({Interval(top - hi, top - lo), scale});
      }
      shift += Rational(2) * factor;
    }
  }
  auto out = std::move(family[depth]);
  std::sort(out.begin(), out.end(), [](const XInterval& a, const XInterval& b) { return a.interval.lo < b.interval.lo; });
  return out;
}

IntervalSet x_intervals(std::size_t depth) {
  std::vector<Interval> parts;
  for (auto& x : x_interval_family(depth)) parts.push_back(std::move(x.interval));
  return IntervalSet::normalize(std::move(parts));
}

IntervalSet z_hull(std::size_t n) {
  return IntervalSet::remove_interiors(Interval(Rational(0), gn::diameter()), x_intervals(n));
}

IntervalSet y_hull(std::size_t n) {
  return z_hull(n).intersect(approximation(TermSequence::cantorval(), gn::terms_for_digits(n)).set);
}

namespace gn {

Rational gap_increment(std::size_t k) {
  if (k == 0) return Rational(0);
  if (k == 1) return Rational(1, 6);
  return Rational(1, 8) * pow(Rational(3, 4), static_cast<long>(k - 2));
}

Rational gap_total_closed_form(std::size_t k) {
  Rational total;
  for (std::size_t i = 1; i <= k; ++i) total += gap_increment(i);
  return total;
}

Rational interval_series_term(std::size_t j) {
  if (j == 0) return Rational(1, 3);
  return gap_increment(j);
}

std::vector<AffineCopy> d_copies() {
  const Rational sixth(1, 6);
  auto copy = [&](std::string label, Rational offset, bool reflected) {
    const Rational a = reflected ? offset - sixth : offset;
    const Rational b = reflected ? offset : offset + sixth;
    return AffineCopy{std::move(label), std::move(offset), reflected, Interval(a, b)};
  };
  return {
      copy("D", Rational(0), false),
      copy("h[5/4+D]", Rational(5, 12), true),
      copy("1/2+D", Rational(1, 2), false),
      copy("h[1/2+D]", Rational(7, 6), true),
      copy("5/4+D", Rational(5, 4), false),
      copy("h[D]", Rational(5, 3), true),
  };
}

Correspondence gap_interval_correspondence(std::size_t depth) {
  const auto approx = approximation(TermSequence::cantorval(), terms_for_digits(depth));
  std::map<Rational, Interval> by_lo;
  for (auto& x : x_interval_family(depth)) by_lo.emplace(x.interval.lo, x.interval);
  Correspondence out;
  for (const auto& g : approx.set.gaps()) {
    const Rational shift = g.length() * Rational(3);
    std::optional<Interval> match;
    int hits = 0;
    for (const Rational& lo : {g.lo - shift, g.lo + shift}) {
      auto it = by_lo.find(lo);
      if (it != by_lo.end() && it->second.hi == lo + g.length()) {
        match = it->second;
        ++hits;
      }
    }
    if (hits == 1) {
      out.pairs.push_back({g, *match});
    } else {
      out.unmatched.push_back(g);
    }
  }
  return out;
}

}  // namespace gn

}  // namespace cantorval
