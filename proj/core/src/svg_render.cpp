#include "zonelab/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "zonelab/solve.hpp"

namespace zonelab {

namespace {

struct Box {
  Rat min_x, max_x, min_y, max_y;

  std::vector<LinearConstraint> constraints() const {
    return {
        ge({Rat(1), Rat(0)}, min_x),
        ge({Rat(-1), Rat(0)}, -max_x),
        ge({Rat(0), Rat(1)}, min_y),
        ge({Rat(0), Rat(-1)}, -max_y),
    };
  }
};

// Closed form of a face or body description: >= in place of >.
std::vector<LinearConstraint> closed(std::vector<LinearConstraint> cs) {
  for (auto& c : cs)
    if (c.rel == Rel::GT) c.rel = Rel::GE;
  return cs;
}

std::optional<RatVec> line_intersection(const LinearConstraint& a,
                                        const LinearConstraint& b) {
  std::vector<LinearConstraint> eqs = {eq(a.coeffs, a.rhs),
                                       eq(b.coeffs, b.rhs)};
  auto sol = solve_affine_system(eqs, 2);
  if (!sol || sol->dim != 0) return std::nullopt;
  return sol->point;
}

bool satisfies_all(const std::vector<LinearConstraint>& cs, const RatVec& p) {
  for (const auto& c : cs)
    if (!c.satisfied_by(p)) return false;
  return true;
}

// All vertices of the (closed) region cut out by cs, found as pairwise
// boundary intersections that satisfy every constraint.
std::vector<RatVec> region_vertices(const std::vector<LinearConstraint>& cs) {
  std::vector<RatVec> out;
  for (size_t i = 0; i < cs.size(); ++i) {
    for (size_t j = i + 1; j < cs.size(); ++j) {
      auto p = line_intersection(cs[i], cs[j]);
      if (!p || !satisfies_all(cs, *p)) continue;
      if (std::find(out.begin(), out.end(), *p) == out.end())
        out.push_back(std::move(*p));
    }
  }
  return out;
}

double to_d(const Rat& x) { return x.get_d(); }

// Counterclockwise order around the centroid; doubles are fine here, the
// points themselves stay exact.
void sort_ccw(std::vector<RatVec>& pts) {
  double cx = 0, cy = 0;
  for (const auto& p : pts) {
    cx += to_d(p[0]);
    cy += to_d(p[1]);
  }
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const RatVec& a, const RatVec& b) {
    return std::atan2(to_d(a[1]) - cy, to_d(a[0]) - cx) <
           std::atan2(to_d(b[1]) - cy, to_d(b[0]) - cx);
  });
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(6);
  ss << v;
  return ss.str();
}

std::string points_attr(const std::vector<RatVec>& pts) {
  std::string s;
  for (const auto& p : pts) {
    if (!s.empty()) s.push_back(' ');
    s += fmt(to_d(p[0])) + "," + fmt(-to_d(p[1]));
  }
  return s;
}

// Extreme points of a 1-dimensional region (a clipped line or edge).
std::optional<std::pair<RatVec, RatVec>> segment_of(
    const std::vector<LinearConstraint>& cs, const LinearConstraint& axis) {
  RatVec direction = {axis.coeffs[1], -axis.coeffs[0]};
  std::vector<RatVec> pts;
  for (const auto& c : cs) {
    if (c.coeffs == axis.coeffs && c.rhs == axis.rhs) continue;
    auto p = line_intersection(axis, c);
    if (p && satisfies_all(cs, *p)) pts.push_back(std::move(*p));
  }
  if (pts.size() < 2) return std::nullopt;
  auto param = [&](const RatVec& p) { return dot(direction, p); };
  RatVec lo = pts[0], hi = pts[0];
  for (const auto& p : pts) {
    if (param(p) < param(lo)) lo = p;
    if (param(p) > param(hi)) hi = p;
  }
  if (lo == hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

}  // namespace

std::string render_svg(const Arrangement& arr, const ConvexBody& body) {
  if (arr.dim() != 2)
    throw RenderError("SVG rendering is implemented for d = 2 only");

  // Anchor points decide the viewport.
  std::vector<RatVec> anchors;
  for (int idx : arr.faces_of_dim(0))
    anchors.push_back(arr.faces()[static_cast<size_t>(idx)].witness);
  std::vector<LinearConstraint> body_cs(body.halfspaces().begin(),
                                        body.halfspaces().end());
  for (auto& p : region_vertices(body_cs)) anchors.push_back(std::move(p));
  if (!body.is_empty() && !body.is_whole_space()) {
    Feasibility w = feasible(body_cs, 2);
    if (w.ok) anchors.push_back(std::move(w.witness));
  }
  for (const auto& h : arr.hyperplanes()) {
    // A reference point on each line keeps lines visible when n is small.
    auto chart = chart_of(h);
    anchors.push_back(chart.origin);
  }
  if (anchors.empty()) anchors.push_back(zero_vec(2));

  Box box;
  box.min_x = box.max_x = anchors[0][0];
  box.min_y = box.max_y = anchors[0][1];
  for (const auto& p : anchors) {
    box.min_x = std::min(box.min_x, p[0]);
    box.max_x = std::max(box.max_x, p[0]);
    box.min_y = std::min(box.min_y, p[1]);
    box.max_y = std::max(box.max_y, p[1]);
  }
  Rat pad_x = (box.max_x - box.min_x) / 5 + 1;
  Rat pad_y = (box.max_y - box.min_y) / 5 + 1;
  box.min_x -= pad_x;
  box.max_x += pad_x;
  box.min_y -= pad_y;
  box.max_y += pad_y;
  const std::vector<LinearConstraint> clip = box.constraints();

  ZoneAnalysis analysis = analyze_zone(arr, body);

  const double x0 = to_d(box.min_x), x1 = to_d(box.max_x);
  const double y0 = to_d(box.min_y), y1 = to_d(box.max_y);
  const double diag = std::hypot(x1 - x0, y1 - y0);
  const double thin = diag / 400, thick = diag / 130, dot_r = diag / 80;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(x0)
      << " " << fmt(-y1) << " " << fmt(x1 - x0) << " " << fmt(y1 - y0)
      << "\">\n";
  svg << "  <rect class=\"viewport\" x=\"" << fmt(x0) << "\" y=\"" << fmt(-y1)
      << "\" width=\"" << fmt(x1 - x0) << "\" height=\"" << fmt(y1 - y0)
      << "\" fill=\"white\" stroke=\"none\"/>\n";

  for (int idx : analysis.zone_cells) {
    const Face& cell = arr.faces()[static_cast<size_t>(idx)];
    std::vector<LinearConstraint> cs = closed(arr.face_constraints(cell));
    cs.insert(cs.end(), clip.begin(), clip.end());
    std::vector<RatVec> pts = region_vertices(cs);
    if (pts.size() < 3) continue;
    sort_ccw(pts);
    svg << "  <polygon class=\"zone-cell\" points=\"" << points_attr(pts)
        << "\" fill=\"#ffd9a0\" stroke=\"none\"/>\n";
  }

  if (!body.is_empty() && !body.is_whole_space()) {
    std::vector<LinearConstraint> cs = body_cs;
    cs.insert(cs.end(), clip.begin(), clip.end());
    std::vector<RatVec> pts = region_vertices(cs);
    if (pts.size() >= 3) {
      sort_ccw(pts);
      svg << "  <polygon class=\"body\" points=\"" << points_attr(pts)
          << "\" fill=\"#bcd9f5\" fill-opacity=\"0.8\" stroke=\"#2b6cb0\""
          << " stroke-width=\"" << fmt(thin * 2) << "\"/>\n";
    }
  }

  for (const auto& h : arr.hyperplanes()) {
    std::vector<LinearConstraint> cs = clip;
    LinearConstraint axis = h.as_equation();
    cs.push_back(axis);
    auto seg = segment_of(cs, axis);
    if (!seg) continue;
    svg << "  <line class=\"hyperplane\" x1=\"" << fmt(to_d(seg->first[0]))
        << "\" y1=\"" << fmt(-to_d(seg->first[1])) << "\" x2=\""
        << fmt(to_d(seg->second[0])) << "\" y2=\"" << fmt(-to_d(seg->second[1]))
        << "\" stroke=\"#444\" stroke-width=\"" << fmt(thin) << "\"/>\n";
  }

  // Outer borders: edges first, then vertices as dots.
  for (const Border& b : analysis.borders[1]) {
    const Face& edge = arr.faces()[static_cast<size_t>(b.face_index)];
    std::vector<LinearConstraint> cs = closed(arr.face_constraints(edge));
    cs.insert(cs.end(), clip.begin(), clip.end());
    LinearConstraint axis = arr.flat_equations(edge).at(0);
    auto seg = segment_of(cs, axis);
    if (!seg) continue;
    svg << "  <line class=\"outer-border\" x1=\"" << fmt(to_d(seg->first[0]))
        << "\" y1=\"" << fmt(-to_d(seg->first[1])) << "\" x2=\""
        << fmt(to_d(seg->second[0])) << "\" y2=\"" << fmt(-to_d(seg->second[1]))
        << "\" stroke=\"#c0392b\" stroke-width=\"" << fmt(thick)
        << "\" stroke-linecap=\"round\"/>\n";
  }
  for (const Border& b : analysis.borders[0]) {
    const Face& v = arr.faces()[static_cast<size_t>(b.face_index)];
    svg << "  <circle class=\"outer-vertex\" cx=\"" << fmt(to_d(v.witness[0]))
        << "\" cy=\"" << fmt(-to_d(v.witness[1])) << "\" r=\"" << fmt(dot_r)
        << "\" fill=\"#c0392b\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace zonelab
