#include "cantorval/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace cantorval {

namespace {

const char* status_name(MemberStatus s) { return s == MemberStatus::level_uniform ? "level-uniform" : "at-level"; }

const char* kind_name(TermSequence::Kind k) {
  switch (k) {
    case TermSequence::Kind::cantorval: return "gn-cantorval";
    case TermSequence::Kind::geometric: return "geometric";
    case TermSequence::Kind::explicit_terms: return "explicit";
  }
  return "unknown";
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("config is missing \"") + key + "\"");
  return j.at(key);
}

std::vector<Rational> rational_sequence(const Json& j) {
  std::vector<Rational> out;
  if (j.is_array()) {
    for (const Json& v : j) out.push_back(rational_from_json(v));
    return out;
  }
  const Json& around = field(j, "around");
  if (!around.is_array() || around.empty()) throw PreconditionError("\"around\" must be a nonempty list");
  const Rational offset = rational_from_json(field(j, "offset"));
  const Json& len = field(j, "length");
  if (!len.is_number_unsigned()) throw PreconditionError("\"length\" must be a nonnegative integer");
  const auto n = len.get<std::size_t>();
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(rational_from_json(around[i % around.size()]) + offset / Rational(static_cast<long>(i + 2)));
  }
  return out;
}

std::vector<std::size_t> label_sequence(const Json& j, const FiniteMetric& m) {
  if (!j.is_array()) throw PreconditionError("metric sequences must be lists of labels");
  std::vector<std::size_t> out;
  for (const Json& v : j) {
    if (!v.is_string()) throw PreconditionError("metric labels must be strings");
    out.push_back(m.index_of(v.get<std::string>()));
  }
  return out;
}

}  // namespace

Json to_json(const Rational& x) { return x.str(); }

Json to_json(const Interval& iv) { return Json::array({iv.lo.str(), iv.hi.str()}); }

Json to_json(const OpenInterval& gap) { return Json{{"lo", gap.lo.str()}, {"hi", gap.hi.str()}, {"length", gap.length().str()}}; }

Json to_json(const Range& r) {
  return Json{{"lo", r.lo.str()}, {"hi", r.hi.str()}, {"lo_closed", r.lo_closed}, {"hi_closed", r.hi_closed}, {"text", r.str()}};
}

Json to_json(const IntervalSet& s) {
  Json parts = Json::array();
  for (const Interval& iv : s.parts()) parts.push_back(to_json(iv));
  return parts;
}

Json to_json(const TermSequence& spec) {
  Json j{{"kind", kind_name(spec.kind())}, {"name", spec.name()}};
  if (spec.kind() == TermSequence::Kind::geometric) {
    j["a"] = spec.ratio_numerator().str();
    j["q"] = spec.ratio().str();
  }
  return j;
}

Json to_json(const Approximation& a) {
  return Json{{"spec", to_json(a.spec)},
              {"level", a.level},
              {"tail", a.tail.str()},
              {"measure", a.set.measure().str()},
              {"parts", to_json(a.set)}};
}

Json to_json(const ExclusionCertificate& c) {
  Json j{{"excluded", to_json(c.excluded)}, {"witness", c.witness.str()}, {"gap", to_json(c.gap)}};
  if (c.lower_gap) j["lower_gap"] = to_json(*c.lower_gap);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const CenterReport& r) {
  Json members = Json::array();
  for (const MemberEntry& m : r.members) {
    members.push_back(Json{{"value", m.value.str()}, {"status", status_name(m.status)}, {"witness", m.witness}});
  }
  Json regions = Json::array();
  for (const Range& x : r.member_regions) regions.push_back(to_json(x));
  Json certs = Json::array();
  for (const ExclusionCertificate& c : r.certificates) certs.push_back(to_json(c));
  Json excluded = Json::array();
  for (const Range& x : r.excluded_regions) excluded.push_back(to_json(x));
  Json unresolved = Json::array();
  for (const Range& x : r.unresolved) unresolved.push_back(to_json(x));
  Json j{{"description", r.description},
         {"level", r.level},
         {"members", members},
         {"member_regions", regions},
         {"certificates", certs},
         {"excluded_regions", excluded},
         {"unresolved", unresolved},
         {"grid", Json{{"points", r.grid.points}, {"members", r.grid.members}, {"excluded", r.grid.excluded}, {"unresolved", r.grid.unresolved}}},
         {"notes", r.notes}};
  if (r.excluded_above) j["excluded_above"] = r.excluded_above->str();
  return j;
}

Json to_json(const DigitStream& s) { return Json{{"stream", s.str()}, {"value", s.value().str()}}; }

Json to_json(const ChaseSchedule& s) {
  Json idx = Json::array();
  for (std::size_t i : s.indices()) idx.push_back(i);
  return Json{{"schedule", s.str()}, {"indices", idx}, {"periodic", s.periodic()}};
}

Json to_json(const OracleResult& r) {
  Json groups = Json::array();
  for (const CollisionGroup& g : r.collisions) {
    Json streams = Json::array();
    for (const DigitStream& s : g.streams) streams.push_back(s.str());
    groups.push_back(Json{{"value", g.value.str()}, {"streams", streams}});
  }
  return Json{{"streams", r.streams}, {"distinct_values", r.distinct_values}, {"largest_group", r.largest_group}, {"collisions", groups}};
}

Json to_json(const SubsetProxy& p) {
  return Json{{"level", p.level}, {"terms", p.terms}, {"tail", p.tail.str()}, {"largest_part", p.largest_part.str()}, {"parts", p.parts}};
}

Json to_json(const MatchTrace& t) {
  Json steps = Json::array();
  for (const MatchStep& s : t.steps) {
    steps.push_back(Json{{"step", s.step},
                         {"direction", s.direction == Direction::forward ? "forward" : "backward"},
                         {"stage", s.stage},
                         {"m", s.domain},
                         {"pi_m", s.image},
                         {"distance", s.distance.str()},
                         {"nearest", s.nearest},
                         {"target", s.target},
                         {"target_gap", s.target_gap.str()},
                         {"bound", s.bound.str()},
                         {"within_bound", s.within_bound}});
  }
  return Json{{"alpha", t.alpha.str()}, {"stages", t.stages}, {"notes", t.notes}, {"steps", steps}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw PreconditionError("expected a rational as \"p/q\" or an integer");
}

std::string gaps_csv(std::span<const OpenInterval> gaps) {
  std::ostringstream os;
  os << "lo,hi,length\n";
  for (const OpenInterval& g : gaps) os << g.lo << ',' << g.hi << ',' << g.length() << '\n';
  return os.str();
}

std::string intervals_csv(std::span<const Interval> parts) {
  std::ostringstream os;
  os << "lo,hi,length\n";
  for (const Interval& iv : parts) os << iv.lo << ',' << iv.hi << ',' << iv.length() << '\n';
  return os.str();
}

std::string values_csv(std::span<const Rational> values, const std::string& header) {
  std::ostringstream os;
  os << header << '\n';
  for (const Rational& v : values) os << v << '\n';
  return os.str();
}

MatchTrace run_match_config(const Json& config) {
  const std::string space = field(config, "space").get<std::string>();
  const Rational alpha = rational_from_json(field(config, "alpha"));
  const Json& stages = field(config, "stages");
  if (!stages.is_number_unsigned()) throw PreconditionError("\"stages\" must be a positive integer");
  const auto n = stages.get<std::size_t>();
  if (space == "real") {
    std::vector<Rational> cluster = rational_sequence(field(config, "cluster"));
    std::sort(cluster.begin(), cluster.end());
    const std::vector<Rational> a = rational_sequence(field(config, "a"));
    const std::vector<Rational> b = rational_sequence(field(config, "b"));
    return build_permutation(RealLine{}, std::span<const Rational>(a), std::span<const Rational>(b),
                             std::span<const Rational>(cluster), alpha, n);
  }
  if (space == "metric") {
    std::vector<std::string> labels;
    for (const Json& l : field(config, "labels")) labels.push_back(l.get<std::string>());
    std::vector<std::vector<Rational>> dist;
    for (const Json& row : field(config, "dist")) {
      dist.emplace_back();
      for (const Json& v : row) dist.back().push_back(rational_from_json(v));
    }
    const FiniteMetric metric(std::move(labels), std::move(dist));
    std::vector<std::size_t> cluster = label_sequence(field(config, "cluster"), metric);
    std::sort(cluster.begin(), cluster.end());
    const std::vector<std::size_t> a = label_sequence(field(config, "a"), metric);
    const std::vector<std::size_t> b = label_sequence(field(config, "b"), metric);
    return build_permutation(MetricPoints{&metric}, std::span<const std::size_t>(a), std::span<const std::size_t>(b),
                             std::span<const std::size_t>(cluster), alpha, n);
  }
  throw PreconditionError("\"space\" must be \"real\" or \"metric\"");
}

}  // namespace cantorval
