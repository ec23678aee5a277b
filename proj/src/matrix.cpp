#include "modcenter/matrix.hpp"

namespace modcenter {

Mat Mat::mul(const Mat& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      int64_t aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        int64_t p = checked_mul(aik, o.at(k, j));
        r.at(i, j) = checked_add(r.at(i, j), p);
      }
    }
  return r;
}

std::vector<int64_t> Mat::mul_vec(const std::vector<int64_t>& v) const {
  if (int(v.size()) != cols_) throw ShapeMismatch("matrix-vector shape mismatch");
  std::vector<int64_t> r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] = checked_add(r[i], checked_mul(at(i, j), v[j]));
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::col_slice(int from, int to) const {
  Mat r(rows_, to - from);
  for (int i = 0; i < rows_; ++i)
    for (int j = from; j < to; ++j) r.at(i, j - from) = at(i, j);
  return r;
}

std::vector<int64_t> Mat::col(int j) const {
  std::vector<int64_t> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<int64_t> Mat::row(int i) const {
  std::vector<int64_t> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("hstack row mismatch");
  Mat r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw ShapeMismatch("vstack column mismatch");
  Mat r(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

void Mat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Mat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void Mat::add_row_multiple(int dst, int src, int64_t q) {
  if (q == 0) return;
  for (int c = 0; c < cols_; ++c)
    if (at(src, c) != 0) at(dst, c) = checked_add(at(dst, c), checked_mul(q, at(src, c)));
}

void Mat::add_col_multiple(int dst, int src, int64_t q) {
  if (q == 0) return;
  for (int r = 0; r < rows_; ++r)
    if (at(r, src) != 0) at(r, dst) = checked_add(at(r, dst), checked_mul(q, at(r, src)));
}

void Mat::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = checked_neg(at(i, c));
}

void Mat::negate_col(int j) {
  for (int r = 0; r < rows_; ++r) at(r, j) = checked_neg(at(r, j));
}

}  // namespace modcenter
