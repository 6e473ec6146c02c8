#pragma once

#include <string>
#include <vector>

#include "cantorval/interval_set.hpp"
#include "cantorval/rational.hpp"

namespace cantorval {

struct Strip {
  std::string label;
  IntervalSet set;
};

struct Mark {
  std::string label;
  Rational at;
};

/// Arrow from a gap to an interval of equal length.
struct Link {
  OpenInterval gap;
  Interval interval;
};

/// Bracket over a region, e.g. an affine copy.
struct Bracket {
  std::string label;
  Interval region;
};

struct RenderSpec {
  std::string title;
  Interval hull;
  std::vector<Strip> strips;
  std::vector<Mark> marks;
  std::vector<Link> links;
  std::vector<Bracket> brackets;
};

/// Virtual drawing width; coordinates are rounded to two decimals of it.
inline constexpr long kSvgWidth = 10000;

/// Deterministic SVG. Every drawn element carries its exact endpoints in
/// data-* attributes. Throws PreconditionError when a mark, strip, link or
/// bracket leaves the hull or the hull is degenerate.
std::string render_svg(const RenderSpec& spec);
/// kind,label,lo,hi rows for every element.
std::string render_csv(const RenderSpec& spec);

/// Figure 1: the digit-level 2 approximation with its gap endpoints and the
/// X-intervals up to `depth`. Figure 2: the six affine copies of
/// D = X n [0, 1/6] over the digit-level `depth` approximation. Figure 3:
/// the gap to interval correspondence at digit level `depth`.
/// Throws PreconditionError for other figure numbers or depth < 1.
RenderSpec figure(int number, std::size_t depth);

}  // namespace cantorval
