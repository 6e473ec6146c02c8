#include "cantorval/render.hpp"

#include <sstream>

#include "cantorval/errors.hpp"
#include "cantorval/subsums.hpp"

namespace cantorval {

namespace {

constexpr long kRowHeight = 600;
constexpr long kBarHeight = 120;
constexpr long kMargin = 400;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

void check_inside(const Interval& hull, const Rational& x, const std::string& what) {
  if (!hull.contains(x)) throw PreconditionError(what + " " + x.str() + " lies outside the hull");
}

void validate(const RenderSpec& spec) {
  if (!(spec.hull.lo < spec.hull.hi)) throw PreconditionError("render hull must have positive length");
  for (const Mark& m : spec.marks) check_inside(spec.hull, m.at, "mark");
  for (const Strip& s : spec.strips) {
    if (!s.set.empty()) {
      check_inside(spec.hull, s.set.min(), "strip point");
      check_inside(spec.hull, s.set.max(), "strip point");
    }
  }
  for (const Link& l : spec.links) {
    check_inside(spec.hull, l.gap.lo, "link gap end");
    check_inside(spec.hull, l.gap.hi, "link gap end");
    check_inside(spec.hull, l.interval.lo, "link interval end");
    check_inside(spec.hull, l.interval.hi, "link interval end");
  }
  for (const Bracket& b : spec.brackets) {
    check_inside(spec.hull, b.region.lo, "bracket end");
    check_inside(spec.hull, b.region.hi, "bracket end");
  }
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
  validate(spec);
  const Rational span = spec.hull.hi - spec.hull.lo;
  auto x = [&](const Rational& r) { return to_fixed((r - spec.hull.lo) / span * Rational(kSvgWidth) + Rational(kMargin), 2); };
  const long rows = static_cast<long>(spec.strips.size()) + 2;
  const long height = rows * kRowHeight + kMargin;
  const long axis = kMargin + static_cast<long>(spec.strips.size()) * kRowHeight + kRowHeight / 2;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kSvgWidth + 2 * kMargin << ' ' << height
     << "\" data-hull-lo=\"" << spec.hull.lo << "\" data-hull-hi=\"" << spec.hull.hi << "\">\n";
  os << "<title>" << escape(spec.title) << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << kSvgWidth + 2 * kMargin << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < spec.strips.size(); ++i) {
    const Strip& s = spec.strips[i];
    const long y = kMargin + static_cast<long>(i) * kRowHeight;
    os << "<g class=\"strip\" data-label=\"" << escape(s.label) << "\">\n";
    os << "<text x=\"" << kMargin << "\" y=\"" << y - 40 << "\" font-size=\"140\">" << escape(s.label) << "</text>\n";
    for (const Interval& iv : s.set.parts()) {
      const Rational w = iv.length() / span * Rational(kSvgWidth);
      os << "<rect x=\"" << x(iv.lo) << "\" y=\"" << y << "\" width=\"" << to_fixed(w, 2) << "\" height=\"" << kBarHeight
         << "\" fill=\"gray\" data-lo=\"" << iv.lo << "\" data-hi=\"" << iv.hi << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "<line x1=\"" << x(spec.hull.lo) << "\" y1=\"" << axis << "\" x2=\"" << x(spec.hull.hi) << "\" y2=\"" << axis
     << "\" stroke=\"black\" stroke-width=\"8\"/>\n";
  for (std::size_t i = 0; i < spec.marks.size(); ++i) {
    const Mark& m = spec.marks[i];
    const long label_y = i % 2 == 0 ? axis + 220 : axis - 120;
    os << "<g class=\"mark\" data-value=\"" << m.at << "\">"
       << "<circle cx=\"" << x(m.at) << "\" cy=\"" << axis << "\" r=\"24\"/>"
       << "<text x=\"" << x(m.at) << "\" y=\"" << label_y << "\" font-size=\"110\" text-anchor=\"middle\">" << escape(m.label)
       << "</text></g>\n";
  }
  for (const Link& l : spec.links) {
    const Rational from = midpoint(l.gap.lo, l.gap.hi);
    const Rational to = midpoint(l.interval.lo, l.interval.hi);
    const long top = axis - 300;
    os << "<path d=\"M " << x(from) << ' ' << axis - 40 << " L " << x(from) << ' ' << top << " L " << x(to) << ' ' << top << " L "
       << x(to) << ' ' << axis - 40 << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"20 20\" data-gap-lo=\"" << l.gap.lo
       << "\" data-gap-hi=\"" << l.gap.hi << "\" data-interval-lo=\"" << l.interval.lo << "\" data-interval-hi=\"" << l.interval.hi
       << "\"/>\n";
  }
  for (const Bracket& b : spec.brackets) {
    const long low = axis + 300;
    os << "<g class=\"bracket\" data-lo=\"" << b.region.lo << "\" data-hi=\"" << b.region.hi << "\">"
       << "<path d=\"M " << x(b.region.lo) << ' ' << axis + 150 << " L " << x(b.region.lo) << ' ' << low << " L "
       << x(b.region.hi) << ' ' << low << " L " << x(b.region.hi) << ' ' << axis + 150
       << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"40 20\"/>"
       << "<text x=\"" << x(midpoint(b.region.lo, b.region.hi)) << "\" y=\"" << low + 140
       << "\" font-size=\"100\" text-anchor=\"middle\">" << escape(b.label) << "</text></g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_csv(const RenderSpec& spec) {
  validate(spec);
  std::ostringstream os;
  os << "kind,label,lo,hi\n";
  for (const Strip& s : spec.strips) {
    for (const Interval& iv : s.set.parts()) os << "part," << s.label << ',' << iv.lo << ',' << iv.hi << '\n';
  }
  for (const Mark& m : spec.marks) os << "mark," << m.label << ',' << m.at << ',' << m.at << '\n';
  for (const Link& l : spec.links) {
    os << "link-gap,," << l.gap.lo << ',' << l.gap.hi << '\n';
    os << "link-interval,," << l.interval.lo << ',' << l.interval.hi << '\n';
  }
  for (const Bracket& b : spec.brackets) os << "bracket," << b.label << ',' << b.region.lo << ',' << b.region.hi << '\n';
  return os.str();
}

RenderSpec figure(int number, std::size_t depth) {
  if (depth < 1) throw PreconditionError("figure depth must be at least 1");
  const TermSequence gn_spec = TermSequence::cantorval();
  RenderSpec spec;
  spec.hull = Interval(Rational(0), gn::diameter());
  switch (number) {
    case 1: {
      spec.title = "An approximation of the Cantorval";
      const Approximation a = approximation(gn_spec, gn::terms_for_digits(2));
      spec.strips.push_back({"digit level 2", a.set});
      spec.strips.push_back({"X-intervals to depth " + std::to_string(depth), x_intervals(depth)});
      for (const Rational& e : a.set.endpoints()) spec.marks.push_back({e.str(), e});
      for (const Rational& e : {Rational(2, 3), gn::symmetry_center(), Rational(1)}) spec.marks.push_back({e.str(), e});
      break;
    }
    case 2: {
      spec.title = "The arrangement of affine copies of D";
      const Approximation a = approximation(gn_spec, gn::terms_for_digits(depth));
      spec.strips.push_back({"digit level " + std::to_string(depth), a.set});
      const IntervalSet d = a.set.intersect(Interval(Rational(0), Rational(1, 6)));
      for (const gn::AffineCopy& c : gn::d_copies()) {
        spec.strips.push_back({c.label, c.apply(d)});
        spec.brackets.push_back({c.label, c.region});
      }
      break;
    }
    case 3: {
      spec.title = "The correspondence between gaps and intervals";
      const Approximation a = approximation(gn_spec, gn::terms_for_digits(depth));
      spec.strips.push_back({"digit level " + std::to_string(depth), a.set});
      const gn::Correspondence c = gn::gap_interval_correspondence(depth);
      for (const gn::GapIntervalPair& p : c.pairs) spec.links.push_back({p.gap, p.interval});
      break;
    }
    default:
      throw PreconditionError("figure number must be 1, 2 or 3");
  }
  return spec;
}

}  // namespace cantorval
