#pragma once

// Brute-force reference computations on 128-bit fractions. Nothing here
// touches the library; results are compared through their "p/q" renderings.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using i128 = __int128;

inline i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Frac {
  i128 n = 0;
  i128 d = 1;

  Frac() = default;
  Frac(long long num, long long den = 1) : n(num), d(den) { fix(); }  // NOLINT
  static Frac raw(i128 num, i128 den) {
    Frac f;
    f.n = num;
    f.d = den;
    f.fix();
    return f;
  }

  void fix() {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }

  friend Frac operator+(const Frac& a, const Frac& b) { return raw(a.n * b.d + b.n * a.d, a.d * b.d); }
  friend Frac operator-(const Frac& a, const Frac& b) { return raw(a.n * b.d - b.n * a.d, a.d * b.d); }
  friend Frac operator*(const Frac& a, const Frac& b) { return raw(a.n * b.n, a.d * b.d); }
  friend Frac operator/(const Frac& a, const Frac& b) { return raw(a.n * b.d, a.d * b.n); }
  friend bool operator==(const Frac& a, const Frac& b) { return a.n == b.n && a.d == b.d; }
  friend bool operator<(const Frac& a, const Frac& b) { return a.n * b.d < b.n * a.d; }
  friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
  friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
  friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }

  std::string str() const {
    auto digits = [](i128 v) {
      if (v == 0) return std::string("0");
      const bool neg = v < 0;
      if (neg) v = -v;
      std::string s;
      while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
      }
      if (neg) s.push_back('-');
      std::reverse(s.begin(), s.end());
      return s;
    };
    return d == 1 ? digits(n) : digits(n) + "/" + digits(d);
  }
};

inline Frac abs(const Frac& x) { return x.n < 0 ? Frac::raw(-x.n, x.d) : x; }

inline Frac pow4_inv(unsigned k) {
  i128 d = 1;
  for (unsigned i = 0; i < k; ++i) d *= 4;
  return Frac::raw(1, d);
}

inline std::vector<std::string> strs(const std::vector<Frac>& v) {
  std::vector<std::string> out;
  for (const Frac& f : v) out.push_back(f.str());
  return out;
}

/// 3/4, 1/2, 3/16, 1/8, ... built from scratch.
inline std::vector<Frac> gn_terms(std::size_t n) {
  std::vector<Frac> out;
  for (unsigned k = 1; out.size() < n; ++k) {
    out.push_back(Frac(3) * pow4_inv(k));
    if (out.size() < n) out.push_back(Frac(2) * pow4_inv(k));
  }
  return out;
}

/// Sum of every gn term after the first n, by summing digit blocks until the
/// remainder is a whole block tail (5/3)/4^k.
inline Frac gn_tail(std::size_t n) {
  const unsigned k = static_cast<unsigned>((n + 1) / 2);
  Frac t = Frac(5, 3) * pow4_inv(k);
  if (n % 2 == 1) t = t + Frac(2) * pow4_inv(k);
  return t;
}

inline std::vector<Frac> subset_sums(const std::vector<Frac>& terms) {
  std::vector<Frac> sums{Frac(0)};
  for (const Frac& t : terms) {
    const std::size_t m = sums.size();
    for (std::size_t i = 0; i < m; ++i) sums.push_back(sums[i] + t);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

using Seg = std::pair<Frac, Frac>;

inline std::vector<Seg> merge(std::vector<Seg> segs) {
  std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) { return a.first < b.first; });
  std::vector<Seg> out;
  for (const Seg& s : segs) {
    if (!out.empty() && s.first <= out.back().second) {
      if (s.second > out.back().second) out.back().second = s.second;
    } else {
      out.push_back(s);
    }
  }
  return out;
}

inline std::vector<Seg> thicken(const std::vector<Frac>& sums, const Frac& tail) {
  std::vector<Seg> segs;
  for (const Frac& s : sums) segs.push_back({s, s + tail});
  return merge(std::move(segs));
}

inline std::vector<Seg> holes(const std::vector<Seg>& parts) {
  std::vector<Seg> out;
  for (std::size_t i = 1; i < parts.size(); ++i) out.push_back({parts[i - 1].second, parts[i].first});
  return out;
}

inline Frac total_length(const std::vector<Seg>& segs) {
  Frac t(0);
  for (const Seg& s : segs) t = t + (s.second - s.first);
  return t;
}

inline std::vector<std::string> seg_strs(const std::vector<Seg>& segs) {
  std::vector<std::string> out;
  for (const Seg& s : segs) out.push_back(s.first.str() + "," + s.second.str());
  return out;
}

/// Every alpha in {0} u differences such that each point has a partner.
inline std::vector<Frac> center_brute(const std::vector<Frac>& pts) {
  std::vector<Frac> cands{Frac(0)};
  for (const Frac& p : pts)
    for (const Frac& q : pts) cands.push_back(abs(p - q));
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<Frac> out;
  for (const Frac& a : cands) {
    bool ok = true;
    for (const Frac& p : pts) {
      bool found = false;
      for (const Frac& q : pts) found = found || abs(p - q) == a;
      ok = ok && found;
    }
    if (ok) out.push_back(a);
  }
  return out;
}

/// Points of [2/3, 1] of the form sum x_i / 4^i with n digits in {0,2,3,5}.
inline std::vector<Frac> k_brute(unsigned n) {
  std::vector<Frac> vals{Frac(0)};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Frac> next;
    for (const Frac& v : vals)
      for (int d : {0, 2, 3, 5}) next.push_back(v + Frac(d) * pow4_inv(i));
    vals = std::move(next);
  }
  std::vector<Frac> out;
  for (const Frac& v : vals)
    if (Frac(2, 3) <= v && v <= Frac(1)) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Value of prefix then period repeated forever, base 4.
inline Frac stream_value(const std::vector<int>& prefix, const std::vector<int>& period) {
  Frac v(0);
  unsigned pos = 0;
  for (int d : prefix) v = v + Frac(d) * pow4_inv(++pos);
  if (!period.empty()) {
    Frac block(0);
    for (std::size_t i = 0; i < period.size(); ++i) block = block + Frac(period[i]) * pow4_inv(static_cast<unsigned>(i + 1));
    const Frac ratio = pow4_inv(static_cast<unsigned>(period.size()));
    v = v + pow4_inv(pos) * block / (Frac(1) - ratio);
  }
  return v;
}

}  // namespace oracle
