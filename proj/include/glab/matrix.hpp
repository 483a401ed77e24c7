#pragma once

#include "glab/arith.hpp"

#include <vector>

namespace glab {

using ZMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using ZVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using index_t = Eigen::Index;

inline bool is_zero(const ZMat& m) {
  for (index_t j = 0; j < m.cols(); ++j)
    for (index_t i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

inline bool eq(const ZMat& a, const ZMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero(a - b);
}

/// Entrywise canonical reduction; no-op over Z.
inline ZMat reduced(ZMat m, const Ring& ring) {
  if (ring.is_z()) return m;
  for (index_t j = 0; j < m.cols(); ++j)
    for (index_t i = 0; i < m.rows(); ++i) m(i, j) = reduce(m(i, j), ring.modulus);
  return m;
}

inline bool eq_mod(const ZMat& a, const ZMat& b, const Ring& ring) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero(reduced(a - b, ring));
}

inline ZMat hstack(const ZMat& a, const ZMat& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  ZMat r(a.rows(), a.cols() + b.cols());
  r.leftCols(a.cols()) = a;
  r.rightCols(b.cols()) = b;
  return r;
}

inline ZMat vstack(const ZMat& a, const ZMat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  ZMat r(a.rows() + b.rows(), a.cols());
  r.topRows(a.rows()) = a;
  r.bottomRows(b.rows()) = b;
  return r;
}

inline ZMat kron(const ZMat& a, const ZMat& b) {
  ZMat r = ZMat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (index_t i = 0; i < a.rows(); ++i)
    for (index_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (index_t k = 0; k < b.rows(); ++k)
        for (index_t l = 0; l < b.cols(); ++l) {
          if (b(k, l) == 0) continue;
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    }
  return r;
}

inline ZMat block_diag(const ZMat& a, const ZMat& b) {
  ZMat r = ZMat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  r.block(0, 0, a.rows(), a.cols()) = a;
  r.block(a.rows(), a.cols(), b.rows(), b.cols()) = b;
  return r;
}

/// Columns of m selected by idx, in order.
inline ZMat select_cols(const ZMat& m, const std::vector<index_t>& idx) {
  ZMat r(m.rows(), static_cast<index_t>(idx.size()));
  for (index_t j = 0; j < r.cols(); ++j) r.col(j) = m.col(idx[j]);
  return r;
}

inline ZMat select_rows(const ZMat& m, const std::vector<index_t>& idx) {
  ZMat r(static_cast<index_t>(idx.size()), m.cols());
  for (index_t i = 0; i < r.rows(); ++i) r.row(i) = m.row(idx[i]);
  return r;
}

inline ZMat from_rows(index_t rows, index_t cols, const std::vector<std::vector<long>>& data) {
  ZMat r(rows, cols);
  for (index_t i = 0; i < rows; ++i)
    for (index_t j = 0; j < cols; ++j) r(i, j) = data[i][j];
  return r;
}

inline ZVec vec_of(const std::vector<long>& data) {
  ZVec v(static_cast<index_t>(data.size()));
  for (index_t i = 0; i < v.size(); ++i) v(i) = data[i];
  return v;
}

}  // namespace glab
