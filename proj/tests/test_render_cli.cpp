#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include "cantorval/errors.hpp"
#include "cantorval/render.hpp"
#include "cantorval/subsums.hpp"

using cantorval::Interval;
using cantorval::Rational;
using cantorval::RenderSpec;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(CANTORVAL_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

RenderSpec unit_spec() {
  RenderSpec s;
  s.title = "unit";
  s.hull = Interval(R("0"), R("1"));
  s.strips.push_back({"strip", cantorval::IntervalSet::normalize(std::vector<Interval>{Interval(R("0"), R("1/3")), Interval(R("2/3"), R("1"))})});
  s.marks.push_back({"half", R("1/2")});
  s.links.push_back({cantorval::OpenInterval(R("1/3"), R("2/3")), Interval(R("0"), R("1/3"))});
  s.brackets.push_back({"left", Interval(R("0"), R("1/3"))});
  return s;
}

}  // namespace

TEST_CASE("svg carries exact endpoints and is deterministic") {
  const RenderSpec s = unit_spec();
  const std::string svg = cantorval::render_svg(s);
  CHECK(svg == cantorval::render_svg(s));
  CHECK(svg.find("data-lo=\"2/3\"") != std::string::npos);
  CHECK(svg.find("data-hi=\"1/3\"") != std::string::npos);
  CHECK(svg.find("data-value=\"1/2\"") != std::string::npos);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  const auto csv = lines(cantorval::render_csv(s));
  REQUIRE(!csv.empty());
  CHECK(csv.front() == "kind,label,lo,hi");
  CHECK(std::find(csv.begin(), csv.end(), "part,strip,2/3,1") != csv.end());
}

TEST_CASE("render rejects elements outside the hull") {
  RenderSpec s = unit_spec();
  s.marks.push_back({"far", R("2")});
  CHECK_THROWS_AS(cantorval::render_svg(s), cantorval::PreconditionError);
  s = unit_spec();
  s.hull = Interval(R("1"), R("1"));
  CHECK_THROWS_AS(cantorval::render_svg(s), cantorval::PreconditionError);
  s = unit_spec();
  s.brackets.push_back({"wide", Interval(R("-1"), R("1/2"))});
  CHECK_THROWS_AS(cantorval::render_svg(s), cantorval::PreconditionError);
  s = unit_spec();
  s.strips.push_back({"over", cantorval::IntervalSet::normalize(std::vector<Interval>{Interval(R("1/2"), R("3/2"))})});
  CHECK_THROWS_AS(cantorval::render_csv(s), cantorval::PreconditionError);
  CHECK_THROWS_AS(cantorval::figure(4, 2), cantorval::PreconditionError);
  CHECK_THROWS_AS(cantorval::figure(1, 0), cantorval::PreconditionError);
}

TEST_CASE("figure 3 links every gap to an interval of equal length") {
  const RenderSpec f = cantorval::figure(3, 3);
  CHECK(!f.links.empty());
  for (const auto& l : f.links) CHECK(l.gap.length() == l.interval.length());
  const std::string svg = cantorval::render_svg(f);
  std::regex attr("data-gap-lo=\"([^\"]+)\" data-gap-hi=\"([^\"]+)\" data-interval-lo=\"([^\"]+)\" data-interval-hi=\"([^\"]+)\"");
  std::size_t seen = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), attr); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    CHECK(R(m[2].str().c_str()) - R(m[1].str().c_str()) == R(m[4].str().c_str()) - R(m[3].str().c_str()));
    ++seen;
  }
  CHECK(seen == f.links.size());
}

TEST_CASE("cli gaps at level 4") {
  const Run r = cli("gaps --level 4");
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 9);
  CHECK(l[0] == "lo,hi,length");
  CHECK(l[1] == "5/48,1/8,1/48");
  CHECK(l[2] == "7/24,5/16,1/48");
  CHECK(l[3] == "5/12,1/2,1/12");
  CHECK(cli("gaps --level 4").out == r.out);
  const Run j = cli("gaps --level 4 --format json");
  CHECK(j.code == 0);
  CHECK(j.out.find("\"5/48\"") != std::string::npos);
}

TEST_CASE("cli digit commands") {
  CHECK(cli("represent --value 5/6").out == "2|50\n3|05\n");
  CHECK(cli("represent --value 11/24").out == "none\n");
  CHECK(cli("dual --stream 3").out == "stream 3 value 3/4\ndual 2|3\n");
  const Run chase = cli("chase --schedule 1,2 --periodic");
  CHECK(chase.code == 0);
  CHECK(chase.out.find("A 2|50\nB 3|05\nvalue 5/6\n") != std::string::npos);
  const Run oracle = cli("oracle --len 2");
  CHECK(oracle.code == 0);
  CHECK(oracle.out == cli("oracle --len 2").out);
  CHECK(cli("cantor-subset --keep 3 --level 4").out.find("\"largest_part\": \"1/256\"") != std::string::npos);
}

TEST_CASE("cli outputs are byte-identical across runs") {
  for (const char* args : {"kset --n 3", "measure --level 8", "intervals --depth 3", "center z --level 3 --grid 50",
                           "center y --level 3 --grid 50 --format json", "center geometric --a 2 --q 3 --level 4 --grid 40",
                           "center intervals --set 0:1/3,2/3:1", "figure 1 --depth 2", "figure 2 --depth 2",
                           "figure 3 --depth 3 --format csv"}) {
    const Run a = cli(args);
    const Run b = cli(args);
    CHECK_MESSAGE(a.code == 0, args);
    CHECK_MESSAGE(a.out == b.out, args);
    CHECK_MESSAGE(!a.out.empty(), args);
  }
  const std::string cfg = std::string(CANTORVAL_SOURCE_DIR) + "/tools/configs/two_points.json";
  const Run m = cli("match --config " + cfg);
  CHECK(m.code == 0);
  CHECK(m.out == cli("match --config " + cfg).out);
  CHECK(lines(m.out).front() == "step,direction,m,pi_m,distance");
}

TEST_CASE("cli figure 3 svg has exact attributes") {
  const Run r = cli("figure 3 --depth 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("data-hull-lo=\"0\" data-hull-hi=\"5/3\"") != std::string::npos);
  CHECK(r.out.find("data-lo=\"5/32\" data-hi=\"25/96\"") != std::string::npos);
  CHECK(r.out.find("data-gap-lo=") != std::string::npos);
}

TEST_CASE("cli writes files under --out") {
  const auto dir = std::filesystem::temp_directory_path() / "cantorval_cli_test";
  std::filesystem::remove_all(dir);
  const Run r = cli("kset --n 2 --out " + dir.string());
  CHECK(r.code == 0);
  std::ifstream f(dir / "kset_n2.csv");
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == cli("kset --n 2").out);
  CHECK(lines(ss.str()).size() == 6);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli exit codes") {
  CHECK(cli("").code == 2);
  CHECK(cli("gaps").code == 2);
  CHECK(cli("nonsense").code == 2);
  CHECK(cli("gaps --level x").code == 2);
  CHECK(cli("gaps --level 4 --format svg").code == 2);
  CHECK(cli("figure 7").code == 2);
  CHECK(cli("center moon").code == 2);
  CHECK(cli("match --config /nonexistent.json").code == 2);
  CHECK(cli("gaps --level 40 --budget 100").code == 1);
  CHECK(cli("represent --value 1/0").code == 1);
  CHECK(cli("dual --stream 7").code == 1);
  CHECK(cli("chase --schedule 2,1").code == 1);
  CHECK(cli("cantor-subset --keep 32 --level 3").code == 1);
  CHECK(cli("oracle --len 12 --budget 1000").code == 1);
  CHECK(cli("center geometric --a 1 --q 1 --level 3").code == 1);
  CHECK(cli("--help").code == 0);
}
