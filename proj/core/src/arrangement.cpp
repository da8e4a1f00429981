#include "zonelab/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "zonelab/solve.hpp"

namespace zonelab {

namespace {

int face_dim_of(std::span<const Hyperplane> hs, const SignVector& sv,
                int dim) {
  std::vector<RatVec> normals;
  for (int i : sv.zero_positions()) normals.push_back(hs[i].normal());
  return dim - rank(normals, dim);
}

struct LaxRestriction {
  std::vector<Hyperplane> induced;
  Chart chart;
};

// Builder-internal restriction: drops hyperplanes parallel to the pivot
// and merges coincident induced hyperplanes. Signs are re-evaluated
// against the original instance after lifting, so neither loses faces.
LaxRestriction lax_restrict(std::span<const Hyperplane> hs, size_t pivot) {
  LaxRestriction out;
  out.chart = chart_of(hs[pivot]);
  for (size_t i = 0; i < hs.size(); ++i) {
    if (i == pivot) continue;
    LinearConstraint sub = substitute_affine(
        hs[i].as_equation(), out.chart.origin, out.chart.basis);
    if (is_zero_vec(sub.coeffs)) continue;  // parallel to the pivot
    Hyperplane cand(std::move(sub.coeffs), std::move(sub.rhs));
    if (std::find(out.induced.begin(), out.induced.end(), cand) ==
        out.induced.end())
      out.induced.push_back(std::move(cand));
  }
  return out;
}

// Moves off a facet witness to the requested side of hyperplane j,
// staying strictly on the witness's side of every other hyperplane.
RatVec step_off(std::span<const Hyperplane> hs, const RatVec& w, int j,
                Sign side) {
  const RatVec& direction = hs[static_cast<size_t>(j)].normal();
  Rat magnitude;
  bool bounded = false;
  for (size_t i = 0; i < hs.size(); ++i) {
    if (static_cast<int>(i) == j) continue;
    Rat speed = dot(hs[i].normal(), direction);
    if (speed == 0) continue;
    Rat distance = abs(hs[i].evaluate(w) / speed);
    if (!bounded || distance < magnitude) {
      magnitude = distance;
      bounded = true;
    }
  }
  Rat delta = bounded ? Rat(magnitude / 2) : Rat(1);
  if (side == Sign::Minus) delta = -delta;
  RatVec out = w;
  for (size_t i = 0; i < out.size(); ++i) out[i] += delta * direction[i];
  return out;
}

// Recursive core: returns one relative-interior witness per face of
// A(hs), every dimension included.
std::vector<RatVec> build_witnesses(const std::vector<Hyperplane>& hs,
                                    int dim) {
  if (hs.empty()) return {zero_vec(dim)};

  std::map<std::string, RatVec> by_sign;
  for (size_t j = 0; j < hs.size(); ++j) {
    LaxRestriction lax = lax_restrict(hs, j);
    for (const RatVec& local : build_witnesses(lax.induced, dim - 1)) {
      RatVec w = lax.chart.to_ambient(local);
      by_sign.try_emplace(SignVector::of_point(hs, w).str(), std::move(w));
    }
  }

  // Every cell is reached by stepping off a facet; facets are exactly the
  // faces whose sign vector has a single zero (duplicates are excluded).
  std::vector<std::pair<std::string, RatVec>> facets;
  for (const auto& [sv, w] : by_sign)
    if (std::count(sv.begin(), sv.end(), '0') == 1) facets.emplace_back(sv, w);
  for (const auto& [sv, w] : facets) {
    int j = static_cast<int>(sv.find('0'));
    for (Sign side : {Sign::Minus, Sign::Plus}) {
      std::string cell_sv = sv;
      cell_sv[static_cast<size_t>(j)] = sign_char(side);
      if (by_sign.contains(cell_sv)) continue;
      RatVec cw = step_off(hs, w, j, side);
      assert(SignVector::of_point(hs, cw).str() == cell_sv);
      by_sign.emplace(std::move(cell_sv), std::move(cw));
    }
  }

  std::vector<RatVec> out;
  out.reserve(by_sign.size());
  for (auto& [sv, w] : by_sign) out.push_back(std::move(w));
  return out;
}

}  // namespace

Arrangement::Arrangement(std::vector<Hyperplane> hyperplanes, int dim,
                         std::vector<Face> faces)
    : hyperplanes_(std::move(hyperplanes)), dim_(dim), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.signs.str() < b.signs.str();
  });
  for (size_t i = 0; i < faces_.size(); ++i)
    index_.emplace(faces_[i].signs.str(), static_cast<int>(i));
}

const Face* Arrangement::find(const SignVector& signs) const {
  auto it = index_.find(signs.str());
  return it == index_.end() ? nullptr : &faces_[static_cast<size_t>(it->second)];
}

std::vector<long> Arrangement::face_counts() const {
  std::vector<long> counts(static_cast<size_t>(dim_) + 1, 0);
  for (const Face& f : faces_) ++counts[static_cast<size_t>(f.dim)];
  return counts;
}

std::vector<int> Arrangement::faces_of_dim(int k) const {
  std::vector<int> out;
  for (size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == k) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<LinearConstraint> Arrangement::flat_equations(
    const Face& f) const {
  std::vector<LinearConstraint> out;
  for (int i : f.signs.zero_positions())
    out.push_back(hyperplanes_[static_cast<size_t>(i)].as_equation());
  return out;
}

std::vector<LinearConstraint> Arrangement::face_constraints(
    const Face& f) const {
  std::vector<LinearConstraint> out;
  out.reserve(static_cast<size_t>(f.signs.size()));
  for (int i = 0; i < f.signs.size(); ++i)
    out.push_back(
        hyperplanes_[static_cast<size_t>(i)].side_constraint(f.signs.at(i)));
  return out;
}

std::vector<int> Arrangement::incident_cells(const Face& f) const {
  require_member(f);
  std::vector<int> zeros = f.signs.zero_positions();
  std::vector<int> out;
  // Cells conforming with f carry f's nonzero entries and +/- at its zeros.
  for (uint64_t mask = 0; mask < (uint64_t{1} << zeros.size()); ++mask) {
    std::string sv = f.signs.str();
    for (size_t b = 0; b < zeros.size(); ++b)
      sv[static_cast<size_t>(zeros[b])] = (mask >> b & 1) ? '+' : '-';
    auto it = index_.find(sv);
    if (it != index_.end()) out.push_back(it->second);
  }
  return out;
}

bool Arrangement::is_subface(const Face& f, const Face& g) const {
  require_member(f);
  require_member(g);
  return conforms(f.signs, g.signs);
}

void Arrangement::require_member(const Face& f) const {
  if (f.signs.size() != hyperplane_count() ||
      index_.find(f.signs.str()) == index_.end())
    throw MalformedInputError("face does not belong to this arrangement");
}

std::string Arrangement::canonical_dump() const {
  std::vector<std::string> lines;
  lines.reserve(faces_.size());
  for (const Face& f : faces_)
    lines.push_back(std::to_string(f.dim) + ";" + f.signs.str() + ";" +
                    vec_to_string(f.witness));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out.push_back('\n');
  }
  return out;
}

Arrangement build_arrangement(std::vector<Hyperplane> hyperplanes, int dim) {
  if (dim < 0) throw MalformedInputError("negative dimension");
  for (const auto& h : hyperplanes)
    if (h.dim() != dim)
      throw MalformedInputError("hyperplane dimension mismatch");
  for (size_t i = 0; i < hyperplanes.size(); ++i)
    for (size_t j = i + 1; j < hyperplanes.size(); ++j)
      if (hyperplanes[i] == hyperplanes[j])
        throw MalformedInputError("duplicate hyperplane: " +
                                  hyperplanes[i].to_string());

  std::vector<Face> faces;
  for (RatVec& w : build_witnesses(hyperplanes, dim)) {
    SignVector sv = SignVector::of_point(hyperplanes, w);
    int fdim = face_dim_of(hyperplanes, sv, dim);
    faces.push_back(Face{std::move(sv), fdim, std::move(w)});
  }
  return Arrangement(std::move(hyperplanes), dim, std::move(faces));
}

}  // namespace zonelab
