#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "modcenter/arith.hpp"
#include "modcenter/errors.hpp"

namespace modcenter {

// Dense integer matrix with checked arithmetic.  Row/column counts are kept
// as ints; a 0xN or Nx0 matrix is a legitimate value (the trivial group has
// rank 0, and everything downstream must cope).
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols), 0) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Mat diag(const std::vector<int64_t>& d) {
    Mat m(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
  }

  static Mat from_rows(const std::vector<std::vector<int64_t>>& rows) {
    int r = int(rows.size());
    int c = rows.empty() ? 0 : int(rows[0].size());
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
      if (int(rows[i].size()) != c) throw ShapeMismatch("ragged row list");
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int64_t at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  int64_t& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const Mat&) const = default;

  Mat mul(const Mat& o) const;
  std::vector<int64_t> mul_vec(const std::vector<int64_t>& v) const;
  Mat transpose() const;
  Mat col_slice(int from, int to) const;  // columns [from, to)
  std::vector<int64_t> col(int j) const;
  std::vector<int64_t> row(int i) const;

  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);

  // Elementary operations used by the normal-form algorithms.
  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void add_row_multiple(int dst, int src, int64_t q);  // row dst += q * row src
  void add_col_multiple(int dst, int src, int64_t q);
  void negate_row(int i);
  void negate_col(int j);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int64_t> a_;
};

}  // namespace modcenter
