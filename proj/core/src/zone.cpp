#include "zonelab/zone.hpp"

#include <algorithm>
#include <cassert>

namespace zonelab {

std::vector<int> zone_cells(const Arrangement& arr, const ConvexBody& body) {
  std::vector<int> out;
  for (int idx : arr.faces_of_dim(arr.dim())) {
    const Face& cell = arr.faces()[static_cast<size_t>(idx)];
    if (classify_face(arr, cell, body) == FaceClass::Crossing)
      out.push_back(idx);
  }
  return out;
}

namespace {

std::vector<Border> borders_of_dim(const Arrangement& arr,
                                   std::span<const FaceClass> classes,
                                   const std::vector<bool>& in_zone, int i) {
  std::vector<Border> out;
  for (int idx : arr.faces_of_dim(i)) {
    if (classes[static_cast<size_t>(idx)] != FaceClass::Outer) continue;
    const Face& f = arr.faces()[static_cast<size_t>(idx)];
    for (int cell : arr.incident_cells(f))
      if (in_zone[static_cast<size_t>(cell)]) out.push_back({idx, cell});
  }
  return out;
}

}  // namespace

ZoneAnalysis analyze_zone(const Arrangement& arr, const ConvexBody& body) {
  const int d = arr.dim();
  const int n = arr.hyperplane_count();

  ZoneAnalysis out;
  out.classes.reserve(arr.faces().size());
  for (const Face& f : arr.faces())
    out.classes.push_back(classify_face(arr, f, body));

  std::vector<bool> in_zone(arr.faces().size(), false);
  for (int idx : arr.faces_of_dim(d)) {
    if (out.classes[static_cast<size_t>(idx)] == FaceClass::Crossing) {
      in_zone[static_cast<size_t>(idx)] = true;
      out.zone_cells.push_back(idx);
    }
  }

  ZoneReport& rep = out.report;
  rep.n = n;
  rep.d = d;
  rep.body_empty = body.is_empty();
  rep.zone_cell_count = static_cast<long>(out.zone_cells.size());
  rep.tau.assign(static_cast<size_t>(d), 0);
  rep.crossing_faces.assign(static_cast<size_t>(d), 0);
  rep.crossing_borders.assign(static_cast<size_t>(d), 0);
  rep.inner_faces.assign(static_cast<size_t>(d) + 1, 0);

  out.borders.resize(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    out.borders[static_cast<size_t>(i)] =
        borders_of_dim(arr, out.classes, in_zone, i);
    rep.tau[static_cast<size_t>(i)] =
        static_cast<long>(out.borders[static_cast<size_t>(i)].size());
    rep.outer_complexity += rep.tau[static_cast<size_t>(i)];
  }

  for (size_t idx = 0; idx < arr.faces().size(); ++idx) {
    const Face& f = arr.faces()[idx];
    if (out.classes[idx] == FaceClass::Inner)
      ++rep.inner_faces[static_cast<size_t>(f.dim)];
    if (f.dim < d && out.classes[idx] == FaceClass::Crossing) {
      ++rep.crossing_faces[static_cast<size_t>(f.dim)];
      for (int cell : arr.incident_cells(f))
        if (in_zone[static_cast<size_t>(cell)])
          ++rep.crossing_borders[static_cast<size_t>(f.dim)];
    }
  }

  if (n >= 1) {
    rep.ratio_valid = true;
    Int denom_pow;
    mpz_ui_pow_ui(denom_pow.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(d - 1));
    rep.ratio_cz = Rat(Int(rep.outer_complexity), Int(d) * denom_pow);
    rep.ratio_cz.canonicalize();
  }
  rep.tau_cap.assign(static_cast<size_t>(d), Int(0));
  for (int i = 2; i < d; ++i)
    rep.tau_cap[static_cast<size_t>(i)] = tau_upper_bound(n, d, i);

  return out;
}

long count_borders(const Arrangement& arr, const ConvexBody& body, int i,
                   std::vector<Border>* out_borders) {
  if (i < 0 || i >= arr.dim())
    throw MalformedInputError("border dimension out of range");
  std::vector<FaceClass> classes;
  classes.reserve(arr.faces().size());
  std::vector<bool> in_zone(arr.faces().size(), false);
  for (size_t idx = 0; idx < arr.faces().size(); ++idx) {
    const Face& f = arr.faces()[idx];
    // Only i-faces and cells matter here; skip the rest.
    if (f.dim != i && f.dim != arr.dim()) {
      classes.push_back(FaceClass::Crossing);
      continue;
    }
    FaceClass c = classify_face(arr, f, body);
    classes.push_back(c);
    if (f.dim == arr.dim() && c == FaceClass::Crossing) in_zone[idx] = true;
  }
  std::vector<Border> borders = borders_of_dim(arr, classes, in_zone, i);
  long tau = static_cast<long>(borders.size());
  if (out_borders) *out_borders = std::move(borders);
  return tau;
}

CrossingCounts count_crossing_faces(const Arrangement& arr,
                                    const ConvexBody& body) {
  ZoneAnalysis analysis = analyze_zone(arr, body);
  return {analysis.report.crossing_faces, analysis.report.crossing_borders};
}

ZoneReport zone_report(const Arrangement& arr, const ConvexBody& body,
                       const GpReport* precomputed) {
  GpReport local;
  const GpReport* gp = precomputed;
  if (!gp) {
    local = general_position_check(arr.hyperplanes(), body);
    gp = &local;
  }
  if (!gp->ok()) throw GeneralPositionError(*gp);

  ZoneAnalysis analysis = analyze_zone(arr, body);

  // Under general position an i-face has exactly d-i zeros, so it can
  // border at most 2^{d-i} cells; re-check that on the border lists.
  for (int i = 0; i < arr.dim(); ++i) {
    std::vector<long> per_face(arr.faces().size(), 0);
    for (const Border& b : analysis.borders[static_cast<size_t>(i)])
      ++per_face[static_cast<size_t>(b.face_index)];
    long cap = 1L << (arr.dim() - i);
    for (long c : per_face)
      if (c > cap)
        throw std::logic_error("border multiplicity exceeds 2^{d-i}");
  }
  return analysis.report;
}

Int tau_upper_bound(int n, int d, int i) {
  if (i < 2 || i >= d)
    throw MalformedInputError("factorial bound needs 2 <= i < d");
  Int fact, binom, pow;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d - i));
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(d - i));
  mpz_ui_pow_ui(pow.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(i - 1));
  return Int(4) * fact * binom * pow;
}

}  // namespace zonelab
