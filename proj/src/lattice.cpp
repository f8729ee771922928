#include "logcone/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace logcone {

namespace {

// Elementary operations applied to the working matrix while keeping
// u * m * v = a and the tracked inverses exact.
struct SnfWork {
  Mat a, u, v, u_inv, v_inv;

  explicit SnfWork(const Mat& m)
      : a(m),
        u(Mat::identity(m.rows)),
        v(Mat::identity(m.cols)),
        u_inv(Mat::identity(m.rows)),
        v_inv(Mat::identity(m.cols)) {}

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    std::swap(a.data[i], a.data[j]);
    std::swap(u.data[i], u.data[j]);
    for (size_t k = 0; k < u_inv.rows; ++k) std::swap(u_inv.data[k][i], u_inv.data[k][j]);
  }

  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < a.rows; ++k) std::swap(a.data[k][i], a.data[k][j]);
    for (size_t k = 0; k < v.rows; ++k) std::swap(v.data[k][i], v.data[k][j]);
    std::swap(v_inv.data[i], v_inv.data[j]);
  }

  // row i += q * row j
  void add_row(size_t i, size_t j, const Int& q) {
    if (q == 0) return;
    for (size_t k = 0; k < a.cols; ++k) a.data[i][k] += q * a.data[j][k];
    for (size_t k = 0; k < u.cols; ++k) u.data[i][k] += q * u.data[j][k];
    for (size_t k = 0; k < u_inv.rows; ++k) u_inv.data[k][j] -= q * u_inv.data[k][i];
  }

  // col i += q * col j
  void add_col(size_t i, size_t j, const Int& q) {
    if (q == 0) return;
    for (size_t k = 0; k < a.rows; ++k) a.data[k][i] += q * a.data[k][j];
    for (size_t k = 0; k < v.rows; ++k) v.data[k][i] += q * v.data[k][j];
    for (size_t k = 0; k < v_inv.cols; ++k) v_inv.data[j][k] -= q * v_inv.data[i][k];
  }

  void negate_row(size_t i) {
    for (size_t k = 0; k < a.cols; ++k) a.data[i][k] = -a.data[i][k];
    for (size_t k = 0; k < u.cols; ++k) u.data[i][k] = -u.data[i][k];
    for (size_t k = 0; k < u_inv.rows; ++k) u_inv.data[k][i] = -u_inv.data[k][i];
  }
};

// Smallest-absolute-value nonzero entry of the trailing submatrix, ties broken
// lexicographically by (row, col). Returns false when the submatrix is zero.
bool find_pivot(const Mat& a, size_t t, size_t& pi, size_t& pj) {
  bool found = false;
  Int best = 0;
  for (size_t i = t; i < a.rows; ++i) {
    for (size_t j = t; j < a.cols; ++j) {
      if (a.data[i][j] == 0) continue;
      Int mag = int_abs(a.data[i][j]);
      if (!found || mag < best) {
        found = true;
        best = mag;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SnfDecomposition smith_normal_form(const Mat& m) {
  SnfWork w(m);
  size_t limit = std::min(m.rows, m.cols);
  size_t t = 0;
  while (t < limit) {
    size_t pi = 0, pj = 0;
    if (!find_pivot(w.a, t, pi, pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    if (w.a.data[t][t] < 0) w.negate_row(t);

    bool stable = false;
    while (!stable) {
      stable = true;
      // Reduce the pivot column.
      for (size_t i = t + 1; i < w.a.rows; ++i) {
        if (w.a.data[i][t] == 0) continue;
        Int q = floor_div(w.a.data[i][t], w.a.data[t][t]);
        w.add_row(i, t, -q);
        if (w.a.data[i][t] != 0) {
          // Remainder is a smaller positive value; promote it to pivot.
          w.swap_rows(t, i);
          stable = false;
        }
      }
      // Reduce the pivot row.
      for (size_t j = t + 1; j < w.a.cols; ++j) {
        if (w.a.data[t][j] == 0) continue;
        Int q = floor_div(w.a.data[t][j], w.a.data[t][t]);
        w.add_col(j, t, -q);
        if (w.a.data[t][j] != 0) {
          w.swap_cols(t, j);
          stable = false;
        }
      }
      if (!stable) continue;
      // The pivot must divide every remaining entry for the invariant-factor
      // chain; fold a bad row into the pivot row and redo.
      for (size_t i = t + 1; i < w.a.rows && stable; ++i) {
        for (size_t j = t + 1; j < w.a.cols && stable; ++j) {
          if (w.a.data[i][j] % w.a.data[t][t] != 0) {
            w.add_row(t, i, Int(1));
            stable = false;
          }
        }
      }
    }
    ++t;
  }

  SnfDecomposition out;
  out.u = w.u;
  out.v = w.v;
  out.d = w.a;
  out.u_inv = w.u_inv;
  out.v_inv = w.v_inv;
  out.rank = t;
  for (size_t i = 0; i < t; ++i) out.diagonal.push_back(w.a.data[i][i]);
  return out;
}

CokernelInvariants cokernel_invariants(const Mat& m) {
  SnfDecomposition snf = smith_normal_form(m);
  CokernelInvariants inv;
  inv.free_rank = m.rows - snf.rank;
  for (const Int& d : snf.diagonal) {
    if (d > 1) inv.torsion.push_back(d);
  }
  return inv;
}

std::vector<Vec> hnf_basis(const std::vector<Vec>& gens, size_t rank) {
  std::vector<Vec> rows;
  for (const Vec& g : gens) {
    assert(g.size() == rank);
    if (!is_zero(g)) rows.push_back(g);
  }
  size_t t = 0;
  for (size_t c = 0; c < rank && t < rows.size(); ++c) {
    // Reduce column c below row t to a single nonzero entry via gcd steps.
    while (true) {
      size_t best = rows.size();
      for (size_t i = t; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() ||
            int_abs(rows[i][c]) < int_abs(rows[best][c])) {
          best = i;
        }
      }
      if (best == rows.size()) break;  // column clear below t
      std::swap(rows[t], rows[best]);
      bool clean = true;
      for (size_t i = t + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q = floor_div(rows[i][c], rows[t][c]);
        rows[i] = vec_sub(rows[i], vec_scale(q, rows[t]));
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[t][c] == 0) continue;
    if (rows[t][c] < 0) rows[t] = vec_neg(rows[t]);
    for (size_t i = 0; i < t; ++i) {
      Int q = floor_div(rows[i][c], rows[t][c]);
      rows[i] = vec_sub(rows[i], vec_scale(q, rows[t]));
    }
    ++t;
  }
  rows.resize(t);
  return rows;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  SnfDecomposition snf = smith_normal_form(m);
  std::vector<Vec> gens;
  for (size_t j = snf.rank; j < m.cols; ++j) gens.push_back(snf.v.column(j));
  return hnf_basis(gens, m.cols);
}

std::vector<Vec> saturate_sublattice(const std::vector<Vec>& gens, size_t rank) {
  Mat g = Mat::from_columns(gens, rank);
  SnfDecomposition snf = smith_normal_form(g);
  std::vector<Vec> basis;
  for (size_t i = 0; i < snf.rank; ++i) basis.push_back(snf.u_inv.column(i));
  return hnf_basis(basis, rank);
}

std::vector<Vec> lattice_intersection(const std::vector<Vec>& a,
                                      const std::vector<Vec>& b, size_t rank) {
  if (a.empty() || b.empty()) return {};
  // x = A alpha = B beta; kernel of [A | -B] yields the coefficient pairs.
  Mat m(rank, a.size() + b.size());
  for (size_t j = 0; j < a.size(); ++j) {
    for (size_t i = 0; i < rank; ++i) m.data[i][j] = a[j][i];
  }
  for (size_t j = 0; j < b.size(); ++j) {
    for (size_t i = 0; i < rank; ++i) m.data[i][a.size() + j] = -b[j][i];
  }
  std::vector<Vec> ker = kernel_basis(m);
  std::vector<Vec> gens;
  for (const Vec& k : ker) {
    Vec x = zero_vec(rank);
    for (size_t j = 0; j < a.size(); ++j) x = vec_add(x, vec_scale(k[j], a[j]));
    gens.push_back(x);
  }
  return hnf_basis(gens, rank);
}

std::optional<Vec> solve_in_span(const std::vector<Vec>& basis, const Vec& v,
                                 size_t rank) {
  if (basis.empty()) {
    if (is_zero(v)) return Vec{};
    return std::nullopt;
  }
  return solve_linear(Mat::from_columns(basis, rank), v);
}

bool in_sublattice(const std::vector<Vec>& gens, const Vec& v, size_t rank) {
  return solve_in_span(gens, v, rank).has_value();
}

std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
  SnfDecomposition snf = smith_normal_form(a);
  Vec rhs = snf.u.apply(b);
  Vec y(a.cols, Int(0));
  for (size_t i = 0; i < a.rows; ++i) {
    if (i < snf.rank) {
      if (rhs[i] % snf.diagonal[i] != 0) return std::nullopt;
      y[i] = rhs[i] / snf.diagonal[i];
    } else if (rhs[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.v.apply(y);
}

bool is_unimodular(const Mat& a) {
  // Bareiss keeps intermediates bounded by minors of a; the SNF transforms
  // this is typically called on can carry entries far larger than the input.
  if (a.rows != a.cols) return false;
  size_t n = a.rows;
  if (n == 0) return true;
  Mat b = a;
  Int prev = 1;
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (b.data[k][k] == 0) {
      size_t i = k + 1;
      while (i < n && b.data[i][k] == 0) ++i;
      if (i == n) return false;
      std::swap(b.data[k], b.data[i]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        b.data[i][j] =
            (b.data[i][j] * b.data[k][k] - b.data[i][k] * b.data[k][j]) / prev;
      }
      b.data[i][k] = 0;
    }
    prev = b.data[k][k];
  }
  Int det = negate ? Int(-b.data[n - 1][n - 1]) : b.data[n - 1][n - 1];
  return int_abs(det) == 1;
}

std::optional<Mat> right_inverse(const Mat& a) {
  SnfDecomposition snf = smith_normal_form(a);
  if (snf.rank < a.rows) return std::nullopt;
  Mat r(a.cols, a.rows);
  for (size_t j = 0; j < a.rows; ++j) {
    Vec y(a.cols, Int(0));
    for (size_t i = 0; i < snf.rank; ++i) {
      if (snf.u.data[i][j] % snf.diagonal[i] != 0) return std::nullopt;
      y[i] = snf.u.data[i][j] / snf.diagonal[i];
    }
    Vec x = snf.v.apply(y);
    for (size_t i = 0; i < a.cols; ++i) r.data[i][j] = x[i];
  }
  return r;
}

QuotientMap quotient_by_saturation(const std::vector<Vec>& gens, size_t rank) {
  Mat g = Mat::from_columns(gens, rank);
  if (gens.empty()) g = Mat(rank, 0);
  SnfDecomposition snf = smith_normal_form(g);
  size_t r = snf.rank;
  QuotientMap q;
  q.proj = Mat(rank - r, rank);
  for (size_t i = r; i < rank; ++i) q.proj.data[i - r] = snf.u.data[i];
  q.section = Mat(rank, rank - r);
  for (size_t j = r; j < rank; ++j) {
    for (size_t i = 0; i < rank; ++i) q.section.data[i][j - r] = snf.u_inv.data[i][j];
  }
  return q;
}

}  // namespace logcone
