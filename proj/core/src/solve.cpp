#include "zonelab/solve.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace zonelab {

namespace {

void check_dims(std::span<const LinearConstraint> cs, int dim) {
  if (dim < 0) throw MalformedInputError("negative dimension");
  for (const auto& c : cs)
    if (c.dim() != dim)
      throw MalformedInputError("constraint dimension mismatch");
}

LinearConstraint scale_row(const LinearConstraint& c, const Rat& f) {
  LinearConstraint out = c;
  for (Rat& x : out.coeffs) x *= f;
  out.rhs *= f;
  return out;
}

}  // namespace

LinearConstraint LinearConstraint::scaled(const Rat& factor) const {
  Rat f = factor;
  f.canonicalize();  // tolerate raw two-argument mpq construction
  if (f <= 0) throw MalformedInputError("scale factor must be positive");
  return scale_row(*this, f);
}

std::string LinearConstraint::to_string() const {
  const char* r = rel == Rel::EQ ? " = " : (rel == Rel::GE ? " >= " : " > ");
  return "(" + vec_to_string(coeffs) + ")" + r + rat_to_string(rhs);
}

bool all_satisfied(std::span<const LinearConstraint> cs,
                   std::span<const Rat> point) {
  for (const auto& c : cs)
    if (!c.satisfied_by(point)) return false;
  return true;
}

LinearConstraint lt(RatVec c, const Rat& b) {
  for (Rat& x : c) x = -x;
  return {std::move(c), -b, Rel::GT};
}

LinearConstraint le(RatVec c, const Rat& b) {
  for (Rat& x : c) x = -x;
  return {std::move(c), -b, Rel::GE};
}

std::optional<AffineSubspace> solve_affine_system(
    std::span<const LinearConstraint> equalities, int dim) {
  check_dims(equalities, dim);
  std::vector<RatVec> rows;  // [A | b]
  for (const auto& c : equalities) {
    if (c.rel != Rel::EQ)
      throw MalformedInputError("solve_affine_system accepts EQ only");
    if (c.trivial()) {
      if (!c.trivially_true()) return std::nullopt;
      continue;
    }
    RatVec row = c.coeffs;
    row.push_back(c.rhs);
    rows.push_back(std::move(row));
  }

  // Reduced row echelon form.
  std::vector<int> pivot_col;
  size_t lead_row = 0;
  for (int col = 0; col < dim && lead_row < rows.size(); ++col) {
    size_t sel = lead_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[lead_row], rows[sel]);
    Rat inv = 1 / rows[lead_row][col];
    for (Rat& x : rows[lead_row]) x *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == lead_row || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (int j = col; j <= dim; ++j) rows[r][j] -= f * rows[lead_row][j];
    }
    pivot_col.push_back(col);
    ++lead_row;
  }
  for (size_t r = lead_row; r < rows.size(); ++r)
    if (rows[r][dim] != 0) return std::nullopt;

  const int rk = static_cast<int>(pivot_col.size());
  AffineSubspace out;
  out.dim = dim - rk;
  out.point = zero_vec(dim);
  for (int r = 0; r < rk; ++r) out.point[pivot_col[r]] = rows[r][dim];

  std::vector<bool> is_pivot(dim, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RatVec v = zero_vec(dim);
    v[free] = 1;
    for (int r = 0; r < rk; ++r) v[pivot_col[r]] = -rows[r][free];
    out.basis.push_back(std::move(v));
  }
  assert(static_cast<int>(out.basis.size()) == out.dim);
  return out;
}

int rank(std::span<const RatVec> vectors, int dim) {
  std::vector<RatVec> rows;
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != dim)
      throw MalformedInputError("vector dimension mismatch");
    if (!is_zero_vec(v)) rows.push_back(v);
  }
  int rk = 0;
  for (int col = 0; col < dim && rk < static_cast<int>(rows.size()); ++col) {
    int sel = rk;
    while (sel < static_cast<int>(rows.size()) && rows[sel][col] == 0) ++sel;
    if (sel == static_cast<int>(rows.size())) continue;
    std::swap(rows[rk], rows[sel]);
    for (int r = rk + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[rk][col];
      for (int j = col; j < dim; ++j) rows[r][j] -= f * rows[rk][j];
    }
    ++rk;
  }
  return rk;
}

LinearConstraint substitute_affine(const LinearConstraint& c,
                                   std::span<const Rat> point,
                                   std::span<const RatVec> basis) {
  if (c.dim() != static_cast<int>(point.size()))
    throw MalformedInputError("substitution dimension mismatch");
  RatVec coeffs;
  coeffs.reserve(basis.size());
  for (const auto& column : basis) coeffs.push_back(dot(c.coeffs, column));
  return {std::move(coeffs), c.rhs - dot(c.coeffs, point), c.rel};
}

namespace {

// Dense exact simplex tableau in standard form: A z = b, z >= 0, with the
// objective carried as an extra row of reduced costs. Pivoting uses
// Dantzig's rule with a stall counter that switches to Bland's rule, which
// guarantees termination. Row updates go through raw mpq calls with one
// reused temporary; entries are mostly zero, so sign tests gate the work.
class Simplex {
 public:
  Simplex(std::vector<RatVec> a, RatVec b)
      : a_(std::move(a)), b_(std::move(b)) {
    rows_ = static_cast<int>(a_.size());
    cols_ = rows_ ? static_cast<int>(a_[0].size()) : 0;
    basis_.assign(rows_, -1);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int basic(int r) const { return basis_[r]; }

  void set_basic(int r, int col) { basis_[r] = col; }

  // Minimizes cost.z over the current feasible basis; `allowed` masks the
  // columns permitted to enter. Returns the optimal objective value.
  Rat minimize(const RatVec& cost, const std::vector<bool>& allowed) {
    z_.assign(static_cast<size_t>(cols_), Rat(0));
    zval_ = 0;
    for (int j = 0; j < cols_; ++j) z_[j] = cost[j];
    for (int r = 0; r < rows_; ++r) reduce_objective_row(r, cost[basis_[r]]);

    int stall = 0;
    const int stall_limit = 2 * (rows_ + cols_);
    bool bland = false;
    while (true) {
      int enter = -1;
      if (!bland) {
        for (int j = 0; j < cols_; ++j)
          if (allowed[j] && sgn(z_[j]) < 0 && (enter < 0 || z_[j] < z_[enter]))
            enter = j;
      } else {
        for (int j = 0; j < cols_; ++j)
          if (allowed[j] && sgn(z_[j]) < 0) { enter = j; break; }
      }
      if (enter < 0) return -zval_;  // zval_ carries the negated objective

      int leave = -1;
      Rat best;
      for (int r = 0; r < rows_; ++r) {
        if (sgn(a_[r][enter]) <= 0) continue;
        Rat ratio = b_[r] / a_[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0)
        throw std::logic_error("unbounded objective in capped program");

      Rat before = zval_;
      pivot(leave, enter);
      if (zval_ == before) {
        if (++stall > stall_limit) bland = true;
      } else {
        stall = 0;
      }
    }
  }

  void pivot(int r, int c) {
    RatVec& prow = a_[static_cast<size_t>(r)];
    if (prow[static_cast<size_t>(c)] != 1) {
      Rat inv = 1 / prow[static_cast<size_t>(c)];
      for (int j = 0; j < cols_; ++j) mul_into(prow[static_cast<size_t>(j)], inv);
      mul_into(b_[static_cast<size_t>(r)], inv);
    }
    for (int rr = 0; rr < rows_; ++rr) {
      if (rr == r) continue;
      eliminate(a_[static_cast<size_t>(rr)], b_[static_cast<size_t>(rr)],
                prow, b_[static_cast<size_t>(r)], c);
    }
    if (sgn(z_[static_cast<size_t>(c)]) != 0)
      eliminate(z_, zval_, prow, b_[static_cast<size_t>(r)], c);
    basis_[static_cast<size_t>(r)] = c;
  }

  // Removes `row` (used for redundant rows after phase 1).
  void drop_row(int row) {
    a_.erase(a_.begin() + row);
    b_.erase(b_.begin() + row);
    basis_.erase(basis_.begin() + row);
    --rows_;
  }

  const Rat& entry(int r, int c) const { return a_[r][c]; }
  const Rat& rhs(int r) const { return b_[r]; }

 private:
  // row -= f * pivot_row (f = row[c]), done with raw mpq temporaries.
  void eliminate(RatVec& row, Rat& rhs, const RatVec& prow, const Rat& prhs,
                 int c) {
    if (sgn(row[static_cast<size_t>(c)]) == 0) return;
    Rat f = row[static_cast<size_t>(c)];
    for (int j = 0; j < cols_; ++j) {
      const Rat& p = prow[static_cast<size_t>(j)];
      if (sgn(p) == 0) continue;
      mpq_mul(tmp_.get_mpq_t(), f.get_mpq_t(), p.get_mpq_t());
      mpq_sub(row[static_cast<size_t>(j)].get_mpq_t(),
              row[static_cast<size_t>(j)].get_mpq_t(), tmp_.get_mpq_t());
    }
    if (sgn(prhs) != 0) {
      mpq_mul(tmp_.get_mpq_t(), f.get_mpq_t(), prhs.get_mpq_t());
      mpq_sub(rhs.get_mpq_t(), rhs.get_mpq_t(), tmp_.get_mpq_t());
    }
  }

  void mul_into(Rat& x, const Rat& f) {
    if (sgn(x) == 0) return;
    mpq_mul(x.get_mpq_t(), x.get_mpq_t(), f.get_mpq_t());
  }

  void reduce_objective_row(int r, const Rat& f) {
    if (f == 0) return;
    for (int j = 0; j < cols_; ++j) z_[j] -= f * a_[r][j];
    zval_ -= f * b_[r];
  }

  std::vector<RatVec> a_;
  RatVec b_;
  RatVec z_;
  Rat zval_;  // negated objective value of the current basis
  Rat tmp_;
  std::vector<int> basis_;
  int rows_ = 0;
  int cols_ = 0;
};

// One-variable systems reduce to exact interval intersection; this path
// carries most of the load (edges of arrangements, restricted flats).
Feasibility interval_feasible(const std::vector<LinearConstraint>& ineqs) {
  bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
  Rat lo, hi;
  for (const auto& c : ineqs) {
    const Rat& a = c.coeffs[0];
    Rat bound = c.rhs / a;
    const bool strict = c.rel == Rel::GT;
    if (a > 0) {
      if (!has_lo || bound > lo || (bound == lo && strict)) {
        lo = bound;
        lo_strict = strict;
        has_lo = true;
      }
    } else {
      if (!has_hi || bound < hi || (bound == hi && strict)) {
        hi = bound;
        hi_strict = strict;
        has_hi = true;
      }
    }
  }
  if (has_lo && has_hi) {
    if (lo > hi || (lo == hi && (lo_strict || hi_strict))) return {};
    if (lo == hi) return {true, {lo}};
    return {true, {Rat((lo + hi) / 2)}};
  }
  if (has_lo) return {true, {Rat(lo + 1)}};
  if (has_hi) return {true, {Rat(hi - 1)}};
  return {true, {Rat(0)}};
}

// Feasibility of a pure-inequality system in R^k via max-t.
// Variables: y = u - v componentwise, t = tp - tn.
Feasibility inequality_feasible(std::vector<LinearConstraint> ineqs, int k) {
  std::vector<LinearConstraint> kept;
  bool any_strict = false;
  for (auto& c : ineqs) {
    if (c.trivial()) {
      if (!c.trivially_true()) return {};
      continue;
    }
    any_strict |= (c.rel == Rel::GT);
    kept.push_back(std::move(c));
  }
  if (kept.empty()) return {true, zero_vec(k)};
  if (k == 1) return interval_feasible(kept);

  const int m = static_cast<int>(kept.size());
  const int n_rows = m + 1;  // + cap row t <= 1
  const int col_u = 0, col_v = k, col_tp = 2 * k, col_tn = 2 * k + 1;
  const int col_slack = 2 * k + 2;
  const int col_art = col_slack + n_rows;

  // A row oriented to b >= 0 whose slack enters with +1 starts basic on
  // its slack; only the remaining rows need phase-1 artificials.
  std::vector<RatVec> a(n_rows, RatVec(static_cast<size_t>(col_art), Rat(0)));
  RatVec b(n_rows, Rat(0));
  std::vector<int> needs_artificial;
  for (int r = 0; r < m; ++r) {
    const auto& c = kept[r];
    const bool flip = c.rhs > 0;  // keep b >= 0 after orientation
    const Rat sign = flip ? Rat(1) : Rat(-1);
    for (int j = 0; j < k; ++j) {
      a[r][col_u + j] = sign * c.coeffs[j];
      a[r][col_v + j] = -Rat(sign * c.coeffs[j]);
    }
    if (c.rel == Rel::GT) {
      a[r][col_tp] = -sign;
      a[r][col_tn] = sign;
    }
    a[r][col_slack + r] = -sign;
    b[r] = sign * c.rhs;
    if (flip) needs_artificial.push_back(r);
  }
  // cap: tp - tn + slack = 1, slack basic.
  a[m][col_tp] = 1;
  a[m][col_tn] = -1;
  a[m][col_slack + m] = 1;
  b[m] = 1;

  const int n_cols = col_art + static_cast<int>(needs_artificial.size());
  for (auto& row : a) row.resize(static_cast<size_t>(n_cols), Rat(0));
  for (size_t i = 0; i < needs_artificial.size(); ++i)
    a[static_cast<size_t>(needs_artificial[i])][col_art + i] = 1;

  Simplex sx(std::move(a), std::move(b));
  for (int r = 0; r < n_rows; ++r) sx.set_basic(r, col_slack + r);
  for (size_t i = 0; i < needs_artificial.size(); ++i)
    sx.set_basic(needs_artificial[i], col_art + static_cast<int>(i));

  std::vector<bool> allowed(static_cast<size_t>(n_cols), true);
  if (!needs_artificial.empty()) {
    // Phase 1: minimize the sum of artificials.
    RatVec cost1(static_cast<size_t>(n_cols), Rat(0));
    for (int j = col_art; j < n_cols; ++j) cost1[static_cast<size_t>(j)] = 1;
    if (sx.minimize(cost1, allowed) > 0) return {};

    // Drive artificials out of the basis; drop redundant rows.
    for (int r = sx.rows() - 1; r >= 0; --r) {
      if (sx.basic(r) < col_art) continue;
      int col = -1;
      for (int j = 0; j < col_art; ++j)
        if (sx.entry(r, j) != 0) { col = j; break; }
      if (col >= 0)
        sx.pivot(r, col);
      else
        sx.drop_row(r);
    }
  }

  // Phase 2: maximize t = tp - tn.
  RatVec cost2(static_cast<size_t>(n_cols), Rat(0));
  cost2[col_tp] = -1;
  cost2[col_tn] = 1;
  for (int j = col_art; j < n_cols; ++j) allowed[static_cast<size_t>(j)] = false;
  Rat neg_t = sx.minimize(cost2, allowed);
  Rat t = -neg_t;
  if (!any_strict) {
    // t only appears in the cap row; feasibility alone settles it.
    assert(t == 1);
  }
  if (t <= 0) return {};

  RatVec value(n_cols, Rat(0));
  for (int r = 0; r < sx.rows(); ++r) value[sx.basic(r)] = sx.rhs(r);
  RatVec y(k, Rat(0));
  for (int j = 0; j < k; ++j) y[j] = value[col_u + j] - value[col_v + j];

  Feasibility out{true, std::move(y)};
  for (const auto& c : kept) assert(c.satisfied_by(out.witness));
  return out;
}

}  // namespace

Feasibility feasible(std::span<const LinearConstraint> constraints, int dim) {
  check_dims(constraints, dim);

  std::vector<LinearConstraint> eqs;
  std::vector<LinearConstraint> ineqs;
  for (const auto& c : constraints) {
    if (c.trivial()) {
      if (!c.trivially_true()) return {};
      continue;
    }
    (c.rel == Rel::EQ ? eqs : ineqs).push_back(c);
  }

  RatVec origin = zero_vec(dim);
  std::vector<RatVec> basis;
  int k = dim;
  if (!eqs.empty()) {
    auto flat = solve_affine_system(eqs, dim);
    if (!flat) return {};
    origin = std::move(flat->point);
    basis = std::move(flat->basis);
    k = flat->dim;
  } else {
    basis.reserve(dim);
    for (int j = 0; j < dim; ++j) {
      RatVec e = zero_vec(dim);
      e[j] = 1;
      basis.push_back(std::move(e));
    }
  }

  std::vector<LinearConstraint> reduced;
  reduced.reserve(ineqs.size());
  for (const auto& c : ineqs)
    reduced.push_back(substitute_affine(c, origin, basis));

  Feasibility inner = inequality_feasible(std::move(reduced), k);
  if (!inner.ok) return {};

  RatVec x = origin;
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < dim; ++i) x[i] += inner.witness[j] * basis[j][i];

  Feasibility out{true, std::move(x)};
  assert(all_satisfied(constraints, out.witness));
  return out;
}

}  // namespace zonelab
