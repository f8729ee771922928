#pragma once

#include "logcone/vec.hpp"

#include <cassert>
#include <vector>

namespace logcone {

// Row-major integer matrix. A lattice vector is a column, so a hom from Z^s to
// Z^t is a t x s matrix applied on the left.
struct Mat {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Vec> data;  // data[i] is row i

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), data(r, Vec(c, Int(0))) {}

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.data[i][i] = 1;
    return m;
  }

  // Columns are the given vectors.
  static Mat from_columns(const std::vector<Vec>& cols_in, size_t dim) {
    Mat m(dim, cols_in.size());
    for (size_t j = 0; j < cols_in.size(); ++j) {
      assert(cols_in[j].size() == dim);
      for (size_t i = 0; i < dim; ++i) m.data[i][j] = cols_in[j][i];
    }
    return m;
  }

  static Mat from_rows(const std::vector<Vec>& rows_in, size_t dim) {
    Mat m(rows_in.size(), dim);
    for (size_t i = 0; i < rows_in.size(); ++i) {
      assert(rows_in[i].size() == dim);
      m.data[i] = rows_in[i];
    }
    return m;
  }

  Vec column(size_t j) const {
    Vec c(rows);
    for (size_t i = 0; i < rows; ++i) c[i] = data[i][j];
    return c;
  }

  std::vector<Vec> columns() const {
    std::vector<Vec> cs;
    cs.reserve(cols);
    for (size_t j = 0; j < cols; ++j) cs.push_back(column(j));
    return cs;
  }

  Vec apply(const Vec& v) const {
    assert(v.size() == cols);
    Vec r(rows, Int(0));
    for (size_t i = 0; i < rows; ++i) r[i] = dot(data[i], v);
    return r;
  }

  Mat mul(const Mat& other) const {
    assert(cols == other.rows);
    Mat r(rows, other.cols);
    for (size_t i = 0; i < rows; ++i) {
      for (size_t k = 0; k < cols; ++k) {
        if (data[i][k] == 0) continue;
        for (size_t j = 0; j < other.cols; ++j) {
          r.data[i][j] += data[i][k] * other.data[k][j];
        }
      }
    }
    return r;
  }

  Mat transpose() const {
    Mat r(cols, rows);
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < cols; ++j) r.data[j][i] = data[i][j];
    }
    return r;
  }

  bool operator==(const Mat& other) const {
    return rows == other.rows && cols == other.cols && data == other.data;
  }
};

}  // namespace logcone
