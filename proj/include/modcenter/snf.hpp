#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modcenter/matrix.hpp"

namespace modcenter {

// Smith decomposition u * a * v = d with d diagonal, d(0,0) | d(1,1) | ...,
// all diagonal entries >= 0, and u, v unimodular.  The inverses are tracked
// alongside so callers never have to invert an integer matrix.
struct SmithForm {
  Mat u, d, v;
  Mat uinv, vinv;
  int rank = 0;  // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const Mat& a);

// Basis (as columns) of { x in Z^n : a x = 0 }.
Mat integer_kernel(const Mat& a);
Mat integer_kernel(const SmithForm& f, int cols);

// One solution of a x = b over Z, if any.
std::optional<std::vector<int64_t>> solve_integer(const Mat& a, const std::vector<int64_t>& b);
std::optional<std::vector<int64_t>> solve_integer(const SmithForm& f, const std::vector<int64_t>& b);

// Incremental row-space reduction: maintains a row basis (echelon form) of
// the lattice spanned by the inserted rows together with mod * Z^n.  Used to
// compress large redundant congruence systems before a single small SNF.
class RowReducer {
 public:
  RowReducer(int cols, int64_t mod);

  // Insert a row; returns true if the lattice grew.
  bool insert(std::vector<int64_t> row);
  // True iff the lattice is all of Z^n (every pivot is 1).
  bool is_full() const;

  Mat rows() const;  // current basis rows, pivot order
  int64_t mod() const { return mod_; }

 private:
  void normalize();

  int cols_;
  int64_t mod_;
  // pivot_rows_[p] has leading nonzero entry at column p; always a full
  // triangular basis (seeded with mod * e_p).
  std::vector<std::vector<int64_t>> pivot_rows_;
};

// Solutions of a x == 0 (mod mods[r]) row-wise; every mods[r] >= 1.
// Returns a matrix whose columns span the solution lattice in Z^n.
Mat congruence_kernel(const Mat& a, const std::vector<int64_t>& mods);

// One solution of a x == b (mod mods[r]) row-wise, if any.
std::optional<std::vector<int64_t>> solve_congruence(const Mat& a, const std::vector<int64_t>& b,
                                                     const std::vector<int64_t>& mods);

// Pre-factored solver for repeated right-hand sides against a fixed system
// a x = b; the x returned is truncated to the first n_keep coordinates.
class LinearSolver {
 public:
  LinearSolver(Mat a, int n_keep);
  std::optional<std::vector<int64_t>> solve(const std::vector<int64_t>& b) const;
  bool solvable(const std::vector<int64_t>& b) const;

 private:
  SmithForm f_;
  int n_keep_;
  int rows_;
  int cols_;
};

}  // namespace modcenter
