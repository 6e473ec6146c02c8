#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cantorval/center.hpp"
#include "cantorval/digits.hpp"
#include "cantorval/errors.hpp"
#include "cantorval/matching.hpp"
#include "cantorval/render.hpp"
#include "cantorval/serialize.hpp"
#include "cantorval/subsums.hpp"

namespace fs = std::filesystem;
using namespace cantorval;

namespace {

struct Options {
  std::size_t level = 4;
  std::size_t depth = 3;
  std::size_t n = 2;
  std::size_t grid = 500;
  std::string format;
  std::uint64_t budget = kDefaultBudget;
  std::string out;
  std::uint64_t seed = 0;
};

// Writes an artifact to <out>/<name> or, without --out, to stdout.
void emit(const Options& opt, const std::string& name, const std::string& content) {
  if (opt.out.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  fs::create_directories(opt.out);
  const fs::path path = fs::path(opt.out) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot write " + path.string());
  f << content;
  std::cout << "wrote " << path.string() << '\n';
}

std::string format_or(const Options& opt, const std::string& fallback) { return opt.format.empty() ? fallback : opt.format; }

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (fmt == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw CLI::ValidationError("--format", "must be one of " + list);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string report_table(const CenterReport& r) {
  std::ostringstream os;
  os << r.description << " (level " << r.level << ")\n";
  os << "members:\n";
  for (const MemberEntry& m : r.members) {
    os << "  " << m.value << "  [" << (m.status == MemberStatus::level_uniform ? "level-uniform" : "at level") << "] " << m.witness << '\n';
  }
  for (const Range& x : r.member_regions) os << "  region " << x.str() << '\n';
  os << "certificates: " << r.certificates.size() << '\n';
  for (const ExclusionCertificate& c : r.certificates) {
    os << "  exclude " << c.excluded.str() << " via witness " << c.witness << " and gap (" << c.gap.lo << ", " << c.gap.hi << ")";
    if (c.lower_gap) os << " / (" << c.lower_gap->lo << ", " << c.lower_gap->hi << ")";
    if (!c.note.empty()) os << "  " << c.note;
    os << '\n';
  }
  for (const Range& x : r.excluded_regions) os << "  excluded " << x.str() << '\n';
  if (r.excluded_above) os << "  excluded (" << *r.excluded_above << ", inf)\n";
  os << "grid: " << r.grid.points << " points, " << r.grid.members << " members, " << r.grid.excluded << " excluded, "
     << r.grid.unresolved << " unresolved\n";
  for (const Range& x : r.unresolved) os << "  unresolved " << x.str() << '\n';
  for (const std::string& n : r.notes) os << "note: " << n << '\n';
  return os.str();
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw PreconditionError("schedule entries must be positive integers");
    out.push_back(std::stoul(item));
  }
  return out;
}

std::vector<int> parse_digits(const std::string& text) {
  std::vector<int> out;
  for (char c : text) {
    if (c < '0' || c > '9') throw PreconditionError(std::string("invalid digit '") + c + "'");
    out.push_back(c - '0');
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on sets of subsums and the Guthrie-Nymann Cantorval"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format (csv, json, svg, text)");
  app.add_option("--budget", opt.budget, "Maximum enumeration size");
  app.add_option("--out", opt.out, "Directory for output files (default: stdout)");
  app.add_option("--seed", opt.seed, "Seed for sweep sampling");

  auto* gaps_cmd = app.add_subcommand("gaps", "Gaps of the level-N approximation (N terms)");
  gaps_cmd->add_option("--level", opt.level, "Number of terms")->required();

  auto* kset_cmd = app.add_subcommand("kset", "Points of K_n");
  kset_cmd->add_option("--n", opt.n, "Digit count")->required();

  auto* measure_cmd = app.add_subcommand("measure", "Measure and gap totals for every level up to N terms");
  measure_cmd->add_option("--level", opt.level, "Number of terms")->required();

  auto* intervals_cmd = app.add_subcommand("intervals", "Generated X-intervals");
  intervals_cmd->add_option("--depth", opt.depth, "Largest scale")->required();

  auto* center_cmd = app.add_subcommand("center", "Center of distances reports");
  std::string which;
  std::string a_text = "2";
  std::string q_text = "3";
  std::string set_text;
  center_cmd->add_option("target", which, "cantorval, geometric, z, y or intervals")->required();
  center_cmd->add_option("--level", opt.level, "Digit level (cantorval, z, y) or term count (geometric)");
  center_cmd->add_option("--grid", opt.grid, "Number of grid points");
  center_cmd->add_option("--a", a_text, "Geometric numerator");
  center_cmd->add_option("--q", q_text, "Geometric ratio");
  center_cmd->add_option("--set", set_text, "Interval union for 'intervals', e.g. 0:1/3,2/3:1");

  auto* represent_cmd = app.add_subcommand("represent", "All digit representations of a value");
  std::string value_text;
  represent_cmd->add_option("--value", value_text, "Rational value p/q")->required();

  auto* dual_cmd = app.add_subcommand("dual", "The other representation of a digit stream");
  std::string stream_text;
  dual_cmd->add_option("--stream", stream_text, "Stream as prefix|period")->required();

  auto* chase_cmd = app.add_subcommand("chase", "Run a chase schedule");
  std::string schedule_text;
  std::string base_text;
  bool periodic = false;
  chase_cmd->add_option("--schedule", schedule_text, "Indices n0,n1,...")->required();
  chase_cmd->add_option("--base", base_text, "Common digits before n0");
  chase_cmd->add_flag("--periodic", periodic, "Repeat the last index gap forever");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force collision oracle");
  std::size_t length = 4;
  oracle_cmd->add_option("--len", length, "Prefix length")->required();

  auto* subset_cmd = app.add_subcommand("cantor-subset", "Largest part for a subset of the Cantorval terms");
  std::string keep_text;
  subset_cmd->add_option("--keep", keep_text, "Tokens 3, 2, 32 or - separated by ';'")->required();
  subset_cmd->add_option("--level", opt.level, "Digit level")->required();

  auto* match_cmd = app.add_subcommand("match", "Back-and-forth permutation from a JSON config");
  std::string config_path;
  match_cmd->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);

  auto* figure_cmd = app.add_subcommand("figure", "Render figure 1, 2 or 3");
  int figure_number = 1;
  figure_cmd->add_option("number", figure_number, "Figure number")->required()->check(CLI::Range(1, 3));
  figure_cmd->add_option("--depth", opt.depth, "Depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gaps_cmd->parsed()) {
      const std::string fmt = format_or(opt, "csv");
      require_format(fmt, {"csv", "json"});
      const std::vector<OpenInterval> g = gaps(TermSequence::cantorval(), opt.level, opt.budget);
      std::string body;
      if (fmt == "csv") {
        body = gaps_csv(g);
      } else {
        Json arr = Json::array();
        for (const OpenInterval& x : g) arr.push_back(to_json(x));
        body = dump(arr);
      }
      emit(opt, "gaps_level" + std::to_string(opt.level) + "." + fmt, body);
      Rational total;
      for (const OpenInterval& x : g) total += x.length();
      std::cerr << g.size() << " gaps, total length " << total << '\n';
    } else if (kset_cmd->parsed()) {
      const std::string fmt = format_or(opt, "csv");
      require_format(fmt, {"csv", "json"});
      const std::vector<Rational> k = k_set(opt.n, opt.budget);
      std::string body;
      if (fmt == "csv") {
        body = values_csv(k, "value");
      } else {
        Json arr = Json::array();
        for (const Rational& x : k) arr.push_back(x.str());
        body = dump(arr);
      }
      emit(opt, "kset_n" + std::to_string(opt.n) + "." + fmt, body);
      std::cerr << k.size() << " points\n";
    } else if (measure_cmd->parsed()) {
      const std::string fmt = format_or(opt, "csv");
      require_format(fmt, {"csv", "json"});
      std::ostringstream csv;
      csv << "level,measure,gap_total\n";
      Json arr = Json::array();
      for (std::size_t lv = 0; lv <= opt.level; ++lv) {
        const Approximation a = approximation(TermSequence::cantorval(), lv, opt.budget);
        Rational gap_total;
        for (const OpenInterval& g : a.set.gaps_within(Interval(Rational(0), gn::diameter()))) gap_total += g.length();
        csv << lv << ',' << a.set.measure() << ',' << gap_total << '\n';
        arr.push_back(Json{{"level", lv}, {"measure", a.set.measure().str()}, {"gap_total", gap_total.str()}});
      }
      emit(opt, "measure_level" + std::to_string(opt.level) + "." + fmt, fmt == "csv" ? csv.str() : dump(arr));
    } else if (intervals_cmd->parsed()) {
      const std::string fmt = format_or(opt, "csv");
      require_format(fmt, {"csv", "json"});
      const std::vector<XInterval> family = x_interval_family(opt.depth);
      std::ostringstream csv;
      csv << "lo,hi,length,scale\n";
      Json arr = Json::array();
      for (const XInterval& x : family) {
        csv << x.interval.lo << ',' << x.interval.hi << ',' << x.interval.length() << ',' << x.scale << '\n';
        arr.push_back(Json{{"interval", to_json(x.interval)}, {"scale", x.scale}});
      }
      emit(opt, "intervals_depth" + std::to_string(opt.depth) + "." + fmt, fmt == "csv" ? csv.str() : dump(arr));
      std::cerr << family.size() << " intervals, measure " << x_intervals(opt.depth).measure() << '\n';
    } else if (center_cmd->parsed()) {
      const std::string fmt = format_or(opt, "text");
      require_format(fmt, {"text", "json"});
      CenterReport r;
      if (which == "cantorval") {
        r = verify_cantorval_center(opt.level, opt.grid);
      } else if (which == "geometric") {
        r = verify_geometric_center(Rational::parse(a_text), Rational::parse(q_text), opt.level, opt.grid);
      } else if (which == "z") {
        r = verify_z_trivial(opt.level, opt.grid);
      } else if (which == "y") {
        r = verify_y_center(opt.level, opt.grid);
      } else if (which == "intervals") {
        std::vector<Interval> parts;
        std::stringstream ss(set_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const auto colon = item.find(':');
          if (colon == std::string::npos) throw PreconditionError("intervals are written lo:hi");
          parts.emplace_back(Rational::parse(item.substr(0, colon)), Rational::parse(item.substr(colon + 1)));
        }
        r = center_interval_set(IntervalSet::normalize(parts), opt.seed);
      } else {
        throw CLI::ValidationError("target", "must be cantorval, geometric, z, y or intervals");
      }
      emit(opt, "center_" + which + "." + (fmt == "json" ? "json" : "txt"), fmt == "json" ? dump(to_json(r)) : report_table(r));
    } else if (represent_cmd->parsed()) {
      const Rational v = Rational::parse(value_text);
      const std::vector<DigitStream> reps = represent(v);
      std::ostringstream os;
      for (const DigitStream& s : reps) os << s.str() << '\n';
      if (reps.empty()) os << "none\n";
      emit(opt, "represent.txt", os.str());
    } else if (dual_cmd->parsed()) {
      const DigitStream s = DigitStream::parse(stream_text);
      const auto d = dual(s);
      const Uniqueness u = is_unique(s);
      std::ostringstream os;
      os << "stream " << s.str() << " value " << s.value() << '\n';
      if (d) {
        os << "dual " << d->str() << '\n';
      } else {
        os << "unique (" << (u.reason == UniquenessReason::pattern ? "pattern 2,3 recurs" : "no chase start") << ")\n";
      }
      emit(opt, "dual.txt", os.str());
    } else if (chase_cmd->parsed()) {
      const ChaseSchedule s = ChaseSchedule::from_indices(parse_digits(base_text), parse_indices(schedule_text), periodic);
      const auto [a, b] = chase_pair(s);
      std::ostringstream os;
      os << "schedule " << s.str() << '\n' << "A " << a.str() << '\n' << "B " << b.str() << '\n' << "value " << a.value() << '\n';
      emit(opt, "chase.txt", os.str());
    } else if (oracle_cmd->parsed()) {
      const OracleResult r = collision_oracle(length, standard_tails(), opt.budget);
      std::size_t round_trips = 0;
      for (const CollisionGroup& g : r.collisions) {
        if (g.streams.size() != 2) continue;
        for (int side = 0; side < 2; ++side) {
          const DigitStream& x = g.streams[side];
          const DigitStream& y = g.streams[1 - side];
          if (auto s = extract_schedule(x, y); s && chase_pair(*s) == std::make_pair(x, y)) ++round_trips;
        }
      }
      const std::string fmt = format_or(opt, "json");
      require_format(fmt, {"json"});
      emit(opt, "oracle_len" + std::to_string(length) + ".json", dump(to_json(r)));
      std::cerr << r.streams << " streams, " << r.distinct_values << " values, largest group " << r.largest_group << ", "
                << round_trips << " of " << r.collisions.size() << " pairs round-trip\n";
    } else if (subset_cmd->parsed()) {
      const SubsetProxy p = cantor_subset_gap_proxy(KeepPattern::parse(keep_text), opt.level, opt.budget);
      emit(opt, "cantor_subset.json", dump(to_json(p)));
    } else if (match_cmd->parsed()) {
      std::ifstream f(config_path);
      const Json config = Json::parse(f);
      const MatchTrace t = run_match_config(config);
      const std::string fmt = format_or(opt, "csv");
      require_format(fmt, {"csv", "json"});
      emit(opt, "match_trace." + fmt, fmt == "csv" ? t.csv() : dump(to_json(t)));
    } else if (figure_cmd->parsed()) {
      const std::string fmt = format_or(opt, "svg");
      require_format(fmt, {"svg", "csv"});
      const RenderSpec spec = figure(figure_number, opt.depth);
      emit(opt, "figure" + std::to_string(figure_number) + "." + fmt, fmt == "svg" ? render_svg(spec) : render_csv(spec));
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid JSON: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
