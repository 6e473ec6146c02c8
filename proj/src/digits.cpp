#include "cantorval/digits.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cantorval/errors.hpp"

namespace cantorval {

namespace {

bool high(int d) { return d == 3 || d == 5; }

// Partner digit when the phase does not change: 0 <-> 3, 2 <-> 5.
int swap3(int d) { return d == 0 ? 3 : d == 3 ? 0 : d == 2 ? 5 : 2; }

void check_digits(const std::vector<int>& digits) {
  for (int d : digits) {
    if (!is_digit(d)) throw PreconditionError("digit " + std::to_string(d) + " is not in {0, 2, 3, 5}");
  }
}

template <class T>
void minimize_period(std::vector<T>& period) {
  const std::size_t n = period.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = period[i] == period[i - p];
    if (ok) {
      period.resize(p);
      return;
    }
  }
}

// Folds trailing prefix entries into the period while they repeat it.
template <class T>
void fold_prefix(std::vector<T>& prefix, std::vector<T>& period) {
  while (!prefix.empty() && !period.empty() && prefix.back() == period.back()) {
    prefix.pop_back();
    std::rotate(period.begin(), period.end() - 1, period.end());
  }
}

mpz_class pow4(std::size_t n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 4, n);
  return r;
}

struct PairPhase {
  int a;
  int b;
};

// Digit pair written by a move; `trailing` is true while A chases B.
PairPhase emit(ChaseMove m, bool trailing) {
  switch (m) {
    case ChaseMove::free0: return trailing ? PairPhase{3, 0} : PairPhase{0, 3};
    case ChaseMove::free2: return trailing ? PairPhase{5, 2} : PairPhase{2, 5};
    case ChaseMove::change: return trailing ? PairPhase{5, 0} : PairPhase{0, 5};
  }
  return {0, 0};
}

std::optional<ChaseMove> read(int a, int b, bool trailing) {
  for (ChaseMove m : {ChaseMove::free0, ChaseMove::free2, ChaseMove::change}) {
    const PairPhase p = emit(m, trailing);
    if (p.a == a && p.b == b) return m;
  }
  return std::nullopt;
}

void normalize(ChaseSchedule& s) {
  minimize_period(s.cycle);
  fold_prefix(s.lead, s.cycle);
}

char move_char(ChaseMove m) { return m == ChaseMove::free0 ? '0' : m == ChaseMove::free2 ? '2' : 's'; }

}  // namespace

bool is_digit(int d) { return d == 0 || d == 2 || d == 3 || d == 5; }

DigitStream::DigitStream(std::vector<int> prefix, std::vector<int> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  check_digits(prefix_);
  check_digits(period_);
  if (std::all_of(period_.begin(), period_.end(), [](int d) { return d == 0; })) period_.clear();
  minimize_period(period_);
  if (period_.empty()) {
    while (!prefix_.empty() && prefix_.back() == 0) prefix_.pop_back();
  } else {
    fold_prefix(prefix_, period_);
  }
}

DigitStream DigitStream::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar != std::string_view::npos && text.find('|', bar + 1) != std::string_view::npos)
    throw PreconditionError("digit stream has more than one '|'");
  auto digits = [](std::string_view part) {
    std::vector<int> out;
    for (char c : part) {
      if (c < '0' || c > '9' || !is_digit(c - '0')) throw PreconditionError(std::string("invalid digit '") + c + "'");
      out.push_back(c - '0');
    }
    return out;
  };
  if (bar == std::string_view::npos) return DigitStream(digits(text), {});
  return DigitStream(digits(text.substr(0, bar)), digits(text.substr(bar + 1)));
}

std::string DigitStream::str() const {
  if (prefix_.empty() && period_.empty()) return "0";
  std::string out;
  for (int d : prefix_) out.push_back(static_cast<char>('0' + d));
  if (!period_.empty()) {
    out.push_back('|');
    for (int d : period_) out.push_back(static_cast<char>('0' + d));
  }
  return out;
}

int DigitStream::digit(std::size_t i) const {
  if (i == 0) throw PreconditionError("digit positions start at 1");
  if (i <= prefix_.size()) return prefix_[i - 1];
  if (period_.empty()) return 0;
  return period_[(i - prefix_.size() - 1) % period_.size()];
}

Rational DigitStream::value() const {
  mpz_class head = 0;
  for (int d : prefix_) head = head * 4 + d;
  Rational v(head, pow4(prefix_.size()));
  if (!period_.empty()) {
    mpz_class cycle = 0;
    for (int d : period_) cycle = cycle * 4 + d;
    v += Rational(cycle, (pow4(period_.size()) - 1) * pow4(prefix_.size()));
  }
  return v;
}

ChaseSchedule ChaseSchedule::from_indices(std::vector<int> base, const std::vector<std::size_t>& indices, bool periodic) {
  if (indices.empty()) throw PreconditionError("chase schedule needs at least one index");
  if (indices.front() < base.size() + 1) throw PreconditionError("first index must exceed the base length");
  for (std::size_t k = 1; k < indices.size(); ++k) {
    if (indices[k] <= indices[k - 1]) throw PreconditionError("chase indices must be strictly increasing");
  }
  if (periodic && indices.size() < 2) throw PreconditionError("a periodic schedule needs at least two indices");
  check_digits(base);
  base.resize(indices.front() - 1, 0);
  ChaseSchedule s;
  s.base = std::move(base);
  for (std::size_t k = 1; k < indices.size(); ++k) {
    s.lead.insert(s.lead.end(), indices[k] - indices[k - 1] - 1, ChaseMove::free0);
    s.lead.push_back(ChaseMove::change);
  }
  if (periodic) {
    const std::size_t gap = indices.back() - indices[indices.size() - 2];
    s.cycle.assign(gap - 1, ChaseMove::free0);
    s.cycle.push_back(ChaseMove::change);
  } else {
    s.cycle = {ChaseMove::free0};
  }
  normalize(s);
  return s;
}

std::vector<std::size_t> ChaseSchedule::indices() const {
  std::vector<std::size_t> out{start()};
  for (std::size_t j = 0; j < lead.size(); ++j) {
    if (lead[j] == ChaseMove::change) out.push_back(start() + 1 + j);
  }
  return out;
}

bool ChaseSchedule::periodic() const { return std::find(cycle.begin(), cycle.end(), ChaseMove::change) != cycle.end(); }

std::string ChaseSchedule::str() const {
  std::string out = "base:";
  for (int d : base) out.push_back(static_cast<char>('0' + d));
  out += " lead:";
  for (ChaseMove m : lead) out.push_back(move_char(m));
  out += " cycle:";
  for (ChaseMove m : cycle) out.push_back(move_char(m));
  return out;
}

std::pair<DigitStream, DigitStream> chase_pair(const ChaseSchedule& schedule) {
  check_digits(schedule.base);
  if (schedule.cycle.empty()) throw PreconditionError("chase schedule cycle is empty");
  std::vector<int> a = schedule.base;
  std::vector<int> b = schedule.base;
  a.push_back(2);
  b.push_back(3);
  bool trailing = true;
  auto run = [&](const std::vector<ChaseMove>& moves, std::vector<int>& da, std::vector<int>& db) {
    for (ChaseMove m : moves) {
      const PairPhase p = emit(m, trailing);
      da.push_back(p.a);
      db.push_back(p.b);
      if (m == ChaseMove::change) trailing = !trailing;
    }
  };
  run(schedule.lead, a, b);
  std::vector<int> pa;
  std::vector<int> pb;
  // A cycle with an odd number of switches returns in the other phase.
  const auto flips = std::count(schedule.cycle.begin(), schedule.cycle.end(), ChaseMove::change);
  run(schedule.cycle, pa, pb);
  if (flips % 2 == 1) run(schedule.cycle, pa, pb);
  return {DigitStream(std::move(a), std::move(pa)), DigitStream(std::move(b), std::move(pb))};
}

std::optional<ChaseSchedule> extract_schedule(const DigitStream& a, const DigitStream& b) {
  const std::size_t pa = std::max<std::size_t>(1, a.period().size());
  const std::size_t pb = std::max<std::size_t>(1, b.period().size());
  const std::size_t block = std::lcm(pa, pb);
  const std::size_t settled = std::max(a.prefix().size(), b.prefix().size());
  std::size_t start = 0;
  for (std::size_t i = 1; i <= settled + block; ++i) {
    if (a.digit(i) != b.digit(i)) {
      start = i;
      break;
    }
  }
  if (start == 0 || a.digit(start) != 2 || b.digit(start) != 3) return std::nullopt;
  ChaseSchedule s;
  for (std::size_t i = 1; i < start; ++i) s.base.push_back(a.digit(i));
  const std::size_t lead_end = std::max(settled, start);
  bool trailing = true;
  for (std::size_t i = start + 1; i <= lead_end + 2 * block; ++i) {
    const auto m = read(a.digit(i), b.digit(i), trailing);
    if (!m) return std::nullopt;
    (i <= lead_end ? s.lead : s.cycle).push_back(*m);
    if (*m == ChaseMove::change) trailing = !trailing;
  }
  s.cycle.resize(block);
  normalize(s);
  if (chase_pair(s) != std::make_pair(a, b)) return std::nullopt;
  return s;
}

std::optional<DigitStream> dual(const DigitStream& s) {
  const std::size_t len = s.prefix().size();
  const std::size_t p = std::max<std::size_t>(1, s.period().size());
  for (std::size_t start = 1; start <= len + p; ++start) {
    const int first = s.digit(start);
    if (first != 2 && first != 3) continue;
    // The trailing side (digit 2) continues high, the leading side low.
    if (high(s.digit(start + 1)) != (first == 2)) continue;
    const std::size_t settled = std::max(len, start);
    std::vector<int> other;
    for (std::size_t i = 1; i < start; ++i) other.push_back(s.digit(i));
    other.push_back(5 - first);
    bool ok = true;
    for (std::size_t i = start + 1; i <= settled + p && ok; ++i) {
      const int d = s.digit(i);
      if (high(d) == high(s.digit(i + 1))) {
        other.push_back(swap3(d));
      } else if (d == 5 || d == 0) {
        other.push_back(5 - d);
      } else {
        ok = false;
      }
    }
    if (!ok) continue;
    std::vector<int> period(other.begin() + static_cast<std::ptrdiff_t>(settled), other.end());
    other.resize(settled);
    return DigitStream(std::move(other), std::move(period));
  }
  return std::nullopt;
}

Uniqueness is_unique(const DigitStream& s) {
  if (dual(s)) return {false, UniquenessReason::has_dual};
  const auto& per = s.period();
  for (std::size_t j = 0; j < per.size(); ++j) {
    if (per[j] == 2 && per[(j + 1) % per.size()] == 3) return {true, UniquenessReason::pattern};
  }
  return {true, UniquenessReason::no_chase_start};
}

std::vector<DigitStream> represent(const Rational& v, std::size_t limit) {
  const Rational top = gn::diameter();
  if (v.sign() < 0 || v > top) return {};
  // Remainder graph r -> 4r - d restricted to [0, 5/3].
  constexpr std::size_t kMaxStates = std::size_t{1} << 20;
  std::vector<Rational> states{v};
  std::map<Rational, std::size_t> index{{v, 0}};
  std::vector<std::vector<std::pair<int, std::size_t>>> next;
  for (std::size_t i = 0; i < states.size(); ++i) {
    next.emplace_back();
    for (int d : {0, 2, 3, 5}) {
      const Rational r = Rational(4) * states[i] - Rational(d);
      if (r.sign() < 0 || r > top) continue;
      auto [it, fresh] = index.emplace(r, states.size());
      if (fresh) {
        if (states.size() >= kMaxStates) throw BudgetExceeded("representation search exceeds its state budget");
        states.push_back(r);
      }
      next[i].emplace_back(d, it->second);
    }
  }
  std::vector<bool> alive(states.size(), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (!alive[i]) continue;
      const bool any = std::any_of(next[i].begin(), next[i].end(), [&](const auto& e) { return alive[e.second]; });
      if (!any) {
        alive[i] = false;
        changed = true;
      }
    }
  }
  std::vector<DigitStream> out;
  if (!alive[0]) return out;
  std::vector<std::size_t> path{0};
  std::vector<int> digits;
  std::vector<long> on_path(states.size(), -1);
  on_path[0] = 0;
  auto dfs = [&](auto&& self, std::size_t node) -> void {
    for (const auto& [d, to] : next[node]) {
      if (out.size() >= limit) return;
      if (!alive[to]) continue;
      digits.push_back(d);
      if (on_path[to] >= 0) {
        const auto cut = static_cast<std::ptrdiff_t>(on_path[to]);
        DigitStream found({digits.begin(), digits.begin() + cut}, {digits.begin() + cut, digits.end()});
        if (std::find(out.begin(), out.end(), found) == out.end()) out.push_back(std::move(found));
      } else {
        on_path[to] = static_cast<long>(digits.size());
        self(self, to);
        on_path[to] = -1;
      }
      digits.pop_back();
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tail> standard_tails() { return {{}, {3}, {5, 0}, {0, 5}}; }

OracleResult collision_oracle(std::size_t length, const std::vector<Tail>& menu, std::uint64_t budget) {
  if (menu.empty()) throw PreconditionError("tail menu is empty");
  for (const Tail& t : menu) check_digits(t);
  if (length > 30) throw BudgetExceeded("prefix length " + std::to_string(length) + " exceeds the oracle budget");
  const std::uint64_t prefixes = std::uint64_t{1} << (2 * length);
  if (prefixes > budget / menu.size()) throw BudgetExceeded("4^" + std::to_string(length) + " * " + std::to_string(menu.size()) + " streams exceed the budget");
  constexpr int kDigits[4] = {0, 2, 3, 5};
  OracleResult r;
  std::vector<Rational> values;
  r.universe.reserve(prefixes * menu.size());
  values.reserve(prefixes * menu.size());
  std::vector<int> prefix(length);
  for (std::uint64_t code = 0; code < prefixes; ++code) {
    for (std::size_t i = 0; i < length; ++i) prefix[i] = kDigits[(code >> (2 * (length - 1 - i))) & 3];
    for (const Tail& t : menu) {
      r.universe.emplace_back(prefix, t);
      values.push_back(r.universe.back().value());
    }
  }
  r.streams = r.universe.size();
  std::vector<std::size_t> order(r.streams);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    ++r.distinct_values;
    r.largest_group = std::max(r.largest_group, j - i);
    if (j - i >= 2) {
      CollisionGroup g{values[order[i]], {}};
      for (std::size_t k = i; k < j; ++k) g.streams.push_back(r.universe[order[k]]);
      std::sort(g.streams.begin(), g.streams.end());
      r.collisions.push_back(std::move(g));
    }
    i = j;
  }
  return r;
}

KeepPattern KeepPattern::parse(std::string_view text) {
  KeepPattern k;
  std::size_t from = 0;
  while (true) {
    const std::size_t semi = text.find(';', from);
    const std::string_view token = text.substr(from, semi == std::string_view::npos ? std::string_view::npos : semi - from);
    bool three = false;
    bool two = false;
    if (token != "-") {
      if (token.empty()) throw PreconditionError("empty keep token");
      for (char c : token) {
        if (c == '3' && !three) three = true;
        else if (c == '2' && !two) two = true;
        else throw PreconditionError("keep token '" + std::string(token) + "' is not one of 3, 2, 32, -");
      }
    }
    k.tokens_.emplace_back(three, two);
    if (semi == std::string_view::npos) break;
    from = semi + 1;
  }
  const bool some = std::any_of(k.tokens_.begin(), k.tokens_.end(), [](const auto& t) { return t.first || t.second; });
  const bool missing = std::any_of(k.tokens_.begin(), k.tokens_.end(), [](const auto& t) { return !t.first || !t.second; });
  if (!some) throw PreconditionError("degenerate keep: the selection is empty");
  if (!missing) throw PreconditionError("degenerate keep: the selection has a finite complement");
  return k;
}

bool KeepPattern::keeps(std::size_t position, int digit) const {
  if (position == 0) throw PreconditionError("positions start at 1");
  const auto& t = tokens_[(position - 1) % tokens_.size()];
  if (digit == 3) return t.first;
  if (digit == 2) return t.second;
  throw PreconditionError("kept digits are 2 or 3");
}

int KeepPattern::weight(std::size_t position) const { return (keeps(position, 3) ? 3 : 0) + (keeps(position, 2) ? 2 : 0); }

std::string KeepPattern::str() const {
  std::string out;
  for (std::size_t j = 0; j < tokens_.size(); ++j) {
    if (j > 0) out.push_back(';');
    const auto& [three, two] = tokens_[j];
    if (!three && !two) out.push_back('-');
    if (three) out.push_back('3');
    if (two) out.push_back('2');
  }
  return out;
}

SubsetProxy cantor_subset_gap_proxy(const KeepPattern& keep, std::size_t level, std::uint64_t budget) {
  std::vector<Rational> terms;
  for (std::size_t i = 1; i <= level; ++i) {
    for (int d : {3, 2}) {
      if (keep.keeps(i, d)) terms.push_back(Rational(d) * quarter_pow(static_cast<unsigned>(i)));
    }
  }
  if (terms.empty()) throw PreconditionError("degenerate keep: nothing kept among the first " + std::to_string(level) + " positions");
  if (terms.size() == 2 * level) throw PreconditionError("degenerate keep: everything kept among the first " + std::to_string(level) + " positions");
  const std::size_t per = keep.period();
  Rational cycle;
  for (std::size_t j = 1; j <= per; ++j) cycle += Rational(keep.weight(level + j)) * quarter_pow(static_cast<unsigned>(level + j));
  const Rational scale(pow4(per), pow4(per) - 1);
  SubsetProxy r;
  r.level = level;
  r.terms = terms.size();
  r.tail = cycle * scale;
  const Approximation approx = approximation(TermSequence::explicit_terms(terms, r.tail, "kept terms"), terms.size(), budget);
  r.largest_part = approx.set.largest_part_length();
  r.parts = approx.set.size();
  return r;
}

}  // namespace cantorval
