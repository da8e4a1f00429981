#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonelab/arrangement.hpp"
#include "zonelab/convex_body.hpp"

namespace zonelab {

struct GeneralPositionError : std::runtime_error {
  explicit GeneralPositionError(GpReport r)
      : std::runtime_error("instance violates general position:\n" +
                           describe(r)),
        report(std::move(r)) {}
  GpReport report;
};

// An i-border: a pair (face, cell) where the cell belongs to the zone and
// the i-dimensional face lies on its boundary, entirely outside K.
struct Border {
  int face_index = -1;
  int cell_index = -1;
};

struct ZoneReport {
  int n = 0;
  int d = 0;
  bool body_empty = false;
  long zone_cell_count = 0;
  std::vector<long> tau;               // tau_i for 0 <= i < d
  long outer_complexity = 0;           // C(Z) = sum of tau_i
  std::vector<long> crossing_faces;    // faces meeting the boundary, by dim
  std::vector<long> crossing_borders;  // same, paired with incident zone cells
  std::vector<long> inner_faces;       // informational, dims 0..d
  bool ratio_valid = false;            // n >= 1
  Rat ratio_cz;                        // C(Z) / (d * n^{d-1})
  std::vector<Int> tau_cap;            // 4(d-i)! C(n,d-i) n^{i-1}, 2 <= i < d
};

// Full per-face classification of an arrangement against a body.
struct ZoneAnalysis {
  ZoneReport report;
  std::vector<FaceClass> classes;            // per face index
  std::vector<int> zone_cells;               // face indices, sorted
  std::vector<std::vector<Border>> borders;  // per dimension 0..d-1
};

// Cells whose (open) interior meets both K and its complement — exactly
// the cells meeting the boundary of K. Empty for K = R^d and for empty K.
std::vector<int> zone_cells(const Arrangement& arr, const ConvexBody& body);

// tau_i plus the witnessing border list.
long count_borders(const Arrangement& arr, const ConvexBody& body, int i,
                   std::vector<Border>* out_borders = nullptr);

struct CrossingCounts {
  std::vector<long> raw;      // faces of each dimension 0..d-1 meeting ∂K
  std::vector<long> borders;  // the same faces paired with their zone cells
};
CrossingCounts count_crossing_faces(const Arrangement& arr,
                                    const ConvexBody& body);

// Classifies every face once and aggregates all zone quantities. Does not
// require general position.
ZoneAnalysis analyze_zone(const Arrangement& arr, const ConvexBody& body);

// The reporting entry point: refuses instances that violate general
// position (throws GeneralPositionError). A precomputed check can be
// passed to avoid re-running it.
ZoneReport zone_report(const Arrangement& arr, const ConvexBody& body,
                       const GpReport* precomputed = nullptr);

// The factorial bound 4 (d-i)! C(n, d-i) n^{i-1} on tau_i.
Int tau_upper_bound(int n, int d, int i);

}  // namespace zonelab
