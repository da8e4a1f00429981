#pragma once

#include <span>
#include <string>
#include <vector>

#include "zonelab/arrangement.hpp"
#include "zonelab/chart.hpp"
#include "zonelab/linear.hpp"

namespace zonelab {

// A closed convex H-polyhedron: the intersection of finitely many closed
// halfspaces c.x >= d (inward normals). May be unbounded or empty; an
// empty halfspace list means all of R^d.
class ConvexBody {
 public:
  ConvexBody(std::vector<LinearConstraint> halfspaces, int ambient_dim);

  static ConvexBody whole_space(int ambient_dim);
  static ConvexBody axis_box(const RatVec& lo, const RatVec& hi);

  int ambient_dim() const { return dim_; }
  std::span<const LinearConstraint> halfspaces() const { return halfspaces_; }
  bool is_empty() const { return empty_; }
  bool is_whole_space() const { return halfspaces_.empty() && !empty_; }

  // Strict versions of the halfspaces; their intersection is interior(K).
  std::vector<LinearConstraint> interior_constraints() const;

  bool contains(std::span<const Rat> point) const;
  bool strictly_contains(std::span<const Rat> point) const;

 private:
  std::vector<LinearConstraint> halfspaces_;  // all with relation GE
  int dim_;
  bool forced_empty_ = false;  // a trivially false halfspace was given
  bool empty_ = false;
};

enum class FaceClass { Outer, Crossing, Inner };

const char* face_class_name(FaceClass c);

// Trichotomy for a relatively open face f:
//   Outer    : f disjoint from K
//   Crossing : f meets the boundary of K
//   Inner    : f contained in the interior of K
// For empty K every face is Outer (the boundary of nothing is nothing).
FaceClass classify_face(const Arrangement& arr, const Face& f,
                        const ConvexBody& body);

// Pulls K back through the chart of a hyperplane, yielding K ∩ h in the
// chart's intrinsic coordinates. The result may be empty.
ConvexBody intersect_body_with_flat(const ConvexBody& body,
                                    const Chart& chart);

enum class GpViolation {
  DegenerateSubset,    // j <= d hyperplanes whose intersection is not a (d-j)-flat
  ExcessCommonPoint,   // d+1 hyperplanes through one point
  VertexOnBoundary,    // an arrangement vertex on the boundary of K
  FlatTangentToBody,   // a flat meets K but not its interior
};

struct GpFinding {
  GpViolation kind;
  std::vector<int> subset;  // indices into the hyperplane list
  std::string detail;
};

struct GpReport {
  std::vector<GpFinding> findings;
  bool ok() const { return findings.empty(); }
};

// Exact check of the general-position assumptions: (a) every j-subset
// (j <= d) meets in a flat of dimension exactly d-j, (b) no d+1
// hyperplanes share a point, (c) no arrangement vertex lies on the
// boundary of K, (d) every flat that meets K also meets its interior.
GpReport general_position_check(std::span<const Hyperplane> hyperplanes,
                                const ConvexBody& body);

std::string describe(const GpReport& report);

}  // namespace zonelab
