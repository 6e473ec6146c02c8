#pragma once

#include <span>
#include <string>

#include "json.hpp"

#include "cantorval/center.hpp"
#include "cantorval/digits.hpp"
#include "cantorval/interval_set.hpp"
#include "cantorval/matching.hpp"
#include "cantorval/subsums.hpp"

namespace cantorval {

using Json = nlohmann::ordered_json;

// Rationals serialize as "p/q" strings so that no precision is lost.
Json to_json(const Rational& x);
Json to_json(const Interval& iv);
Json to_json(const OpenInterval& gap);
Json to_json(const Range& r);
Json to_json(const IntervalSet& s);
Json to_json(const TermSequence& spec);
Json to_json(const Approximation& a);
Json to_json(const ExclusionCertificate& c);
Json to_json(const CenterReport& r);
Json to_json(const DigitStream& s);
Json to_json(const ChaseSchedule& s);
Json to_json(const OracleResult& r);
Json to_json(const SubsetProxy& p);
Json to_json(const MatchTrace& t);

Rational rational_from_json(const Json& j);

/// lo,hi,length rows.
std::string gaps_csv(std::span<const OpenInterval> gaps);
std::string intervals_csv(std::span<const Interval> parts);
/// Single column with the given header.
std::string values_csv(std::span<const Rational> values, const std::string& header);

/// Runs the back-and-forth construction described by a JSON document.
///
/// Real line: {"space": "real", "cluster": [...], "alpha": "1", "stages": N,
/// "a": seq, "b": seq} where seq is a list of rationals or a generator
/// {"around": [...], "offset": "q", "length": L} giving
/// around[n mod k] + q / (n + 2).
/// Finite metric: {"space": "metric", "labels": [...], "dist": [[...]],
/// "cluster": [labels], "a": [labels], "b": [labels], "alpha", "stages"}.
/// Throws PreconditionError on a malformed document.
MatchTrace run_match_config(const Json& config);

}  // namespace cantorval
