#include "zonelab/convex_body.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "zonelab/solve.hpp"

namespace zonelab {

ConvexBody::ConvexBody(std::vector<LinearConstraint> halfspaces,
                       int ambient_dim)
    : dim_(ambient_dim) {
  for (auto& h : halfspaces) {
    if (h.rel != Rel::GE)
      throw MalformedInputError("body halfspaces must be of the form c.x >= d");
    if (h.dim() != ambient_dim)
      throw MalformedInputError("halfspace dimension mismatch");
    if (h.trivial()) {
      if (!h.trivially_true()) forced_empty_ = true;
      continue;  // 0 >= d carries no geometry either way
    }
    halfspaces_.push_back(std::move(h));
  }
  empty_ = forced_empty_ || !feasible(halfspaces_, dim_);
}

ConvexBody ConvexBody::whole_space(int ambient_dim) {
  return ConvexBody({}, ambient_dim);
}

ConvexBody ConvexBody::axis_box(const RatVec& lo, const RatVec& hi) {
  if (lo.size() != hi.size())
    throw MalformedInputError("box corners of different dimension");
  const int d = static_cast<int>(lo.size());
  std::vector<LinearConstraint> hs;
  for (int i = 0; i < d; ++i) {
    RatVec up = zero_vec(d);
    up[static_cast<size_t>(i)] = 1;
    hs.push_back(ge(up, lo[static_cast<size_t>(i)]));
    RatVec down = zero_vec(d);
    down[static_cast<size_t>(i)] = -1;
    hs.push_back(ge(std::move(down), -hi[static_cast<size_t>(i)]));
  }
  return ConvexBody(std::move(hs), d);
}

std::vector<LinearConstraint> ConvexBody::interior_constraints() const {
  std::vector<LinearConstraint> out = halfspaces_;
  for (auto& c : out) c.rel = Rel::GT;
  if (forced_empty_) out.push_back(gt(zero_vec(dim_), Rat(1)));  // 0 > 1
  return out;
}

bool ConvexBody::contains(std::span<const Rat> point) const {
  if (forced_empty_) return false;
  return all_satisfied(halfspaces_, point);
}

bool ConvexBody::strictly_contains(std::span<const Rat> point) const {
  if (forced_empty_) return false;
  for (const auto& h : halfspaces_)
    if (dot(h.coeffs, point) <= h.rhs) return false;
  return true;
}

const char* face_class_name(FaceClass c) {
  switch (c) {
    case FaceClass::Outer: return "OUTER";
    case FaceClass::Crossing: return "CROSSING";
    case FaceClass::Inner: return "INNER";
  }
  return "?";
}

FaceClass classify_face(const Arrangement& arr, const Face& f,
                        const ConvexBody& body) {
  if (arr.dim() != body.ambient_dim())
    throw MalformedInputError("face and body dimensions differ");
  if (body.is_empty()) return FaceClass::Outer;

  const bool inside = body.contains(f.witness);
  const bool strictly = inside && body.strictly_contains(f.witness);
  if (inside && !strictly) return FaceClass::Crossing;  // witness on the boundary

  if (f.dim == 0)  // a vertex is its own witness
    return strictly ? FaceClass::Inner : FaceClass::Outer;

  std::vector<LinearConstraint> face_cs = arr.face_constraints(f);
  if (strictly) {
    // Witness interior: Inner unless some halfspace complement is reachable.
    for (const auto& h : body.halfspaces()) {
      std::vector<LinearConstraint> cs = face_cs;
      cs.push_back(le(h.coeffs, h.rhs));
      if (feasible(cs, arr.dim())) return FaceClass::Crossing;
    }
    return FaceClass::Inner;
  }

  // Witness outside: Outer unless the face reaches K.
  std::vector<LinearConstraint> cs = face_cs;
  cs.insert(cs.end(), body.halfspaces().begin(), body.halfspaces().end());
  return feasible(cs, arr.dim()) ? FaceClass::Crossing : FaceClass::Outer;
}

ConvexBody intersect_body_with_flat(const ConvexBody& body,
                                    const Chart& chart) {
  if (chart.ambient_dim() != body.ambient_dim())
    throw MalformedInputError("chart and body dimensions differ");
  std::vector<LinearConstraint> pulled;
  pulled.reserve(body.halfspaces().size());
  for (const auto& h : body.halfspaces())
    pulled.push_back(substitute_affine(h, chart.origin, chart.basis));
  if (body.is_empty())
    pulled.push_back(ge(zero_vec(chart.local_dim()), Rat(1)));  // stay empty
  return ConvexBody(std::move(pulled), chart.local_dim());
}

namespace {

void for_each_subset(int n, int j, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(static_cast<size_t>(j));
  for (int i = 0; i < j; ++i) idx[static_cast<size_t>(i)] = i;
  if (j > n) return;
  while (true) {
    fn(idx);
    int pos = j - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - j + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < j; ++i)
      idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
  }
}

std::string subset_string(const std::vector<int>& subset) {
  std::string s = "{";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i]);
  }
  return s + "}";
}

}  // namespace

GpReport general_position_check(std::span<const Hyperplane> hyperplanes,
                                const ConvexBody& body) {
  const int n = static_cast<int>(hyperplanes.size());
  const int d = body.ambient_dim();
  GpReport report;

  auto equations_of = [&](const std::vector<int>& subset) {
    std::vector<LinearConstraint> eqs;
    eqs.reserve(subset.size());
    for (int i : subset)
      eqs.push_back(hyperplanes[static_cast<size_t>(i)].as_equation());
    return eqs;
  };

  const bool test_body = !body.is_whole_space() && !body.is_empty();
  const auto inner = body.interior_constraints();

  // One pass per subset covers (a) flat dimensions, (c) vertices off the
  // boundary, and (d) transversality against the body.
  for (int j = 1; j <= std::min(n, d); ++j) {
    for_each_subset(n, j, [&](const std::vector<int>& subset) {
      auto eqs = equations_of(subset);
      auto sol = solve_affine_system(eqs, d);
      if (j >= 2 && (!sol || sol->dim != d - j)) {
        report.findings.push_back(
            {GpViolation::DegenerateSubset, subset,
             subset_string(subset) + (sol ? " meets in a flat of dimension " +
                                               std::to_string(sol->dim)
                                          : " has empty intersection")});
      }
      if (!sol) return;
      if (j == d && sol->dim == 0 && body.contains(sol->point) &&
          !body.strictly_contains(sol->point)) {
        report.findings.push_back(
            {GpViolation::VertexOnBoundary, subset,
             "vertex " + vec_to_string(sol->point) + " lies on the boundary"});
      }
      if (test_body) {
        std::vector<LinearConstraint> touch = eqs;
        touch.insert(touch.end(), body.halfspaces().begin(),
                     body.halfspaces().end());
        if (!feasible(touch, d)) return;
        std::vector<LinearConstraint> pierce = std::move(eqs);
        pierce.insert(pierce.end(), inner.begin(), inner.end());
        if (!feasible(pierce, d))
          report.findings.push_back(
              {GpViolation::FlatTangentToBody, subset,
               "flat " + subset_string(subset) +
                   " touches the body without entering its interior"});
      }
    });
  }

  // (b) no d+1 hyperplanes through a common point.
  if (n >= d + 1) {
    for_each_subset(n, d + 1, [&](const std::vector<int>& subset) {
      if (solve_affine_system(equations_of(subset), d))
        report.findings.push_back({GpViolation::ExcessCommonPoint, subset,
                                   subset_string(subset) +
                                       " share a common point"});
    });
  }

  return report;
}

std::string describe(const GpReport& report) {
  if (report.ok()) return "general position: OK";
  std::string out;
  for (const auto& f : report.findings) {
    switch (f.kind) {
      case GpViolation::DegenerateSubset: out += "degenerate subset "; break;
      case GpViolation::ExcessCommonPoint: out += "excess common point "; break;
      case GpViolation::VertexOnBoundary: out += "vertex on boundary "; break;
      case GpViolation::FlatTangentToBody: out += "tangent flat "; break;
    }
    out += f.detail;
    out.push_back('\n');
  }
  return out;
}

}  // namespace zonelab
