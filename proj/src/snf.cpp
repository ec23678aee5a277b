#include "modcenter/snf.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "modcenter/arith.hpp"

namespace modcenter {

namespace {

// The reduction runs in wide arithmetic: transform entries can outgrow
// 64 bits mid-computation even when inputs and results are small.  The
// checked 128-bit instantiation covers all the structured systems the
// library generates; adversarial dense inputs fall back to GMP.
using i128 = __int128;

inline i128 w_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in *");
  return r;
}
inline i128 w_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit overflow in +");
  return r;
}
inline mpz_class w_mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class w_add(const mpz_class& a, const mpz_class& b) { return a + b; }

inline double w_to_double(i128 v) { return double(v); }
inline double w_to_double(const mpz_class& v) { return v.get_d(); }

inline int64_t w_narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("Smith form result exceeds 64-bit range");
  return int64_t(v);
}
inline int64_t w_narrow(const mpz_class& v) {
  if (!v.fits_slong_p()) throw OverflowError("Smith form result exceeds 64-bit range");
  return int64_t(v.get_si());
}

template <typename Z>
inline Z w_from_double(double q) {
  return Z(std::round(q));
}

template <typename Z>
struct WEgcd {
  Z g, x, y;  // g = a*x + b*y, g >= 0
};

template <typename Z>
WEgcd<Z> w_egcd(Z a, Z b) {
  Z old_r = a, r = b;
  Z old_s = Z(1), s = Z(0);
  Z old_t = Z(0), t = Z(1);
  while (r != 0) {
    Z q = old_r / r;
    Z tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

template <typename Z>
struct WideMat {
  int rows = 0, cols = 0;
  std::vector<Z> a;

  WideMat() = default;
  explicit WideMat(const Mat& m) : rows(m.rows()), cols(m.cols()), a(size_t(rows) * cols, Z(0)) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) at(i, j) = Z(int64_t(m.at(i, j)));
  }
  static WideMat identity(int n) {
    WideMat m;
    m.rows = m.cols = n;
    m.a.assign(size_t(n) * n, Z(0));
    for (int i = 0; i < n; ++i) m.at(i, i) = Z(1);
    return m;
  }
  Z& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Z& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
  }
  void add_row_multiple(int dst, int src, const Z& q) {
    if (q == 0) return;
    for (int c = 0; c < cols; ++c)
      if (at(src, c) != 0) at(dst, c) = w_add(at(dst, c), w_mul(q, at(src, c)));
  }
  void add_col_multiple(int dst, int src, const Z& q) {
    if (q == 0) return;
    for (int r = 0; r < rows; ++r)
      if (at(r, src) != 0) at(r, dst) = w_add(at(r, dst), w_mul(q, at(r, src)));
  }
  void negate_row(int i) {
    for (int c = 0; c < cols; ++c) at(i, c) = -at(i, c);
  }
  void negate_col(int j) {
    for (int r = 0; r < rows; ++r) at(r, j) = -at(r, j);
  }

  Mat narrow() const {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = w_narrow(at(i, j));
    return m;
  }
};

// Kannan-Bachem style reduction: alternate full Hermite passes with
// off-pivot reduction, then fix the divisibility chain.  Keeping every
// entry reduced against the pivots is what keeps both the working matrix
// and the transforms manageable.
template <typename Z>
SmithForm smith_impl(const Mat& input) {
  const int m = input.rows(), n = input.cols();
  WideMat<Z> d(input);
  WideMat<Z> u = WideMat<Z>::identity(m);
  WideMat<Z> uinv = WideMat<Z>::identity(m);
  WideMat<Z> v = WideMat<Z>::identity(n);
  WideMat<Z> vinv = WideMat<Z>::identity(n);

  auto row_swap = [&](int i, int j) {
    d.swap_rows(i, j);
    u.swap_rows(i, j);
    uinv.swap_cols(i, j);
  };
  auto col_swap = [&](int i, int j) {
    d.swap_cols(i, j);
    v.swap_cols(i, j);
    vinv.swap_rows(i, j);
  };
  auto row_add = [&](int dst, int src, const Z& q) {
    d.add_row_multiple(dst, src, q);
    u.add_row_multiple(dst, src, q);
    uinv.add_col_multiple(src, dst, -q);
  };
  auto col_add = [&](int dst, int src, const Z& q) {
    d.add_col_multiple(dst, src, q);
    v.add_col_multiple(dst, src, q);
    vinv.add_row_multiple(src, dst, -q);
  };
  auto row_negate = [&](int i) {
    d.negate_row(i);
    u.negate_row(i);
    uinv.negate_col(i);
  };
  auto col_negate = [&](int j) {
    d.negate_col(j);
    v.negate_col(j);
    vinv.negate_row(j);
  };

  auto row_eliminate_at = [&](int t, int i, int c0) {
    Z a0 = d.at(t, c0), b0 = d.at(i, c0);
    if (b0 % a0 == 0) {
      row_add(i, t, -(b0 / a0));
      return;
    }
    WEgcd<Z> e = w_egcd(a0, b0);
    Z aq = a0 / e.g, bq = b0 / e.g;
    for (int c = 0; c < n; ++c) {
      Z dt = d.at(t, c), di = d.at(i, c);
      d.at(t, c) = w_add(w_mul(e.x, dt), w_mul(e.y, di));
      d.at(i, c) = w_add(w_mul(-bq, dt), w_mul(aq, di));
    }
    for (int c = 0; c < m; ++c) {
      Z ut = u.at(t, c), ui = u.at(i, c);
      u.at(t, c) = w_add(w_mul(e.x, ut), w_mul(e.y, ui));
      u.at(i, c) = w_add(w_mul(-bq, ut), w_mul(aq, ui));
      // uinv picks up the inverse transform on columns: [aq, -y; bq, x].
      Z wt = uinv.at(c, t), wi = uinv.at(c, i);
      uinv.at(c, t) = w_add(w_mul(wt, aq), w_mul(wi, bq));
      uinv.at(c, i) = w_add(w_mul(wt, -e.y), w_mul(wi, e.x));
    }
  };
  auto col_eliminate_at = [&](int t, int j, int r0) {
    Z a0 = d.at(r0, t), b0 = d.at(r0, j);
    if (b0 % a0 == 0) {
      col_add(j, t, -(b0 / a0));
      return;
    }
    WEgcd<Z> e = w_egcd(a0, b0);
    Z aq = a0 / e.g, bq = b0 / e.g;
    for (int r = 0; r < m; ++r) {
      Z dt = d.at(r, t), dj = d.at(r, j);
      d.at(r, t) = w_add(w_mul(dt, e.x), w_mul(dj, e.y));
      d.at(r, j) = w_add(w_mul(dt, -bq), w_mul(dj, aq));
    }
    for (int r = 0; r < n; ++r) {
      Z vt = v.at(r, t), vj = v.at(r, j);
      v.at(r, t) = w_add(w_mul(vt, e.x), w_mul(vj, e.y));
      v.at(r, j) = w_add(w_mul(vt, -bq), w_mul(vj, aq));
      Z wt = vinv.at(t, r), wj = vinv.at(j, r);
      vinv.at(t, r) = w_add(w_mul(aq, wt), w_mul(bq, wj));
      vinv.at(j, r) = w_add(w_mul(-e.y, wt), w_mul(e.x, wj));
    }
  };

  auto floordiv = [](const Z& a, const Z& b) {
    Z q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
    return q;
  };

  auto row_hermite_pass = [&]() {
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
      int pick = -1;
      Z best = Z(0);
      for (int i = r; i < m; ++i) {
        Z w = d.at(i, c) < 0 ? Z(-d.at(i, c)) : d.at(i, c);
        if (w != 0 && (pick < 0 || w < best)) {
          pick = i;
          best = w;
        }
      }
      if (pick < 0) continue;
      row_swap(r, pick);
      for (int i = r + 1; i < m; ++i)
        if (d.at(i, c) != 0) row_eliminate_at(r, i, c);
      if (d.at(r, c) < 0) row_negate(r);
      for (int i = 0; i < r; ++i) {
        Z q = floordiv(d.at(i, c), d.at(r, c));
        if (q != 0) row_add(i, r, -q);
      }
      ++r;
    }
  };
  auto col_hermite_pass = [&]() {
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
      int pick = -1;
      Z best = Z(0);
      for (int j = r; j < n; ++j) {
        Z w = d.at(c, j) < 0 ? Z(-d.at(c, j)) : d.at(c, j);
        if (w != 0 && (pick < 0 || w < best)) {
          pick = j;
          best = w;
        }
      }
      if (pick < 0) continue;
      col_swap(r, pick);
      for (int j = r + 1; j < n; ++j)
        if (d.at(c, j) != 0) col_eliminate_at(r, j, c);
      if (d.at(c, r) < 0) col_negate(r);
      for (int j = 0; j < r; ++j) {
        Z q = floordiv(d.at(c, j), d.at(c, r));
        if (q != 0) col_add(j, r, -q);
      }
      ++r;
    }
  };

  auto is_diagonal = [&]() {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && d.at(i, j) != 0) return false;
    return true;
  };

  const int nmin = std::min(m, n);
  int guard = 0;
  while (true) {
    while (!is_diagonal()) {
      if (++guard > 1000) throw InternalInconsistency("Smith reduction failed to converge");
      row_hermite_pass();
      if (is_diagonal()) break;
      col_hermite_pass();
    }
    for (int t = 0; t < nmin; ++t)
      if (d.at(t, t) < 0) row_negate(t);
    // Compact nonzero diagonal entries to the leading positions.
    for (int t = 0; t < nmin; ++t) {
      if (d.at(t, t) != 0) continue;
      for (int s = t + 1; s < nmin; ++s)
        if (d.at(s, s) != 0) {
          row_swap(t, s);
          col_swap(t, s);
          break;
        }
    }
    // Divisibility chain fixups; each one merges a bad pair and reconverges.
    // The column pass must run first or its reduce step would undo the added
    // row before any gcd happens.
    int bt = -1;
    for (int t = 0; t + 1 < nmin && bt < 0; ++t)
      if (d.at(t, t) != 0 && d.at(t + 1, t + 1) % d.at(t, t) != 0) bt = t;
    if (bt < 0) break;
    row_add(bt, bt + 1, Z(1));
    col_hermite_pass();
  }

  int rank = 0;
  for (int t = 0; t < nmin; ++t)
    if (d.at(t, t) != 0) rank = t + 1;

  // The transforms are not unique and the reduction can leave them with
  // needlessly large entries.  Shrink them with D-preserving moves:
  //   - rows of u whose D-row is zero see u <- E u with no compensation, so
  //     they can be Hermite-reduced and used to reduce every other row;
  //   - adding (d_i/d_k) * row_k to row_i (k < i < rank) is compensated on v
  //     by a same-magnitude column move, so joint size reduction is free.
  auto u_row_op = [&](int dst, int src, const Z& q) {  // row dst += q * row src
    u.add_row_multiple(dst, src, q);
    uinv.add_col_multiple(src, dst, -q);
  };
  auto v_col_op = [&](int dst, int src, const Z& q) {  // col dst += q * col src
    v.add_col_multiple(dst, src, q);
    vinv.add_row_multiple(src, dst, -q);
  };

  {
    int frontier = rank;
    for (int c = 0; c < m && frontier < m; ++c) {
      int pick = -1;
      Z best = Z(0);
      for (int i = frontier; i < m; ++i) {
        Z w = u.at(i, c) < 0 ? Z(-u.at(i, c)) : u.at(i, c);
        if (w != 0 && (pick < 0 || w < best)) {
          pick = i;
          best = w;
        }
      }
      if (pick < 0) continue;
      if (pick != frontier) {
        u.swap_rows(frontier, pick);
        uinv.swap_cols(frontier, pick);
      }
      for (int i = frontier + 1; i < m; ++i)
        while (u.at(i, c) != 0) {
          Z q = u.at(i, c) / u.at(frontier, c);
          if (q == 0) {
            u.swap_rows(frontier, i);
            uinv.swap_cols(frontier, i);
            continue;
          }
          u_row_op(i, frontier, -q);
        }
      for (int i = 0; i < frontier; ++i) {
        Z q = u.at(i, c) / u.at(frontier, c);
        if (q != 0) u_row_op(i, frontier, -q);
      }
      ++frontier;
    }
  }
  {
    int frontier = rank;
    for (int c = 0; c < n && frontier < n; ++c) {
      int pick = -1;
      Z best = Z(0);
      for (int j = frontier; j < n; ++j) {
        Z w = v.at(c, j) < 0 ? Z(-v.at(c, j)) : v.at(c, j);
        if (w != 0 && (pick < 0 || w < best)) {
          pick = j;
          best = w;
        }
      }
      if (pick < 0) continue;
      if (pick != frontier) {
        v.swap_cols(frontier, pick);
        vinv.swap_rows(frontier, pick);
      }
      for (int j = frontier + 1; j < n; ++j)
        while (v.at(c, j) != 0) {
          Z q = v.at(c, j) / v.at(c, frontier);
          if (q == 0) {
            v.swap_cols(frontier, j);
            vinv.swap_rows(frontier, j);
            continue;
          }
          v_col_op(j, frontier, -q);
        }
      for (int j = 0; j < frontier; ++j) {
        Z q = v.at(c, j) / v.at(c, frontier);
        if (q != 0) v_col_op(j, frontier, -q);
      }
      ++frontier;
    }
  }

  // Balanced size reduction inside the rank block.  Quotients are estimated
  // in floating point; the updates themselves stay exact, and each move is
  // committed only when it shrinks the joint norm, so the sweeps are
  // monotone and cannot blow up.
  auto row_dot = [&](const WideMat<Z>& w, int i, int k) {
    double acc = 0;
    for (int c = 0; c < w.cols; ++c) acc += w_to_double(w.at(i, c)) * w_to_double(w.at(k, c));
    return acc;
  };
  auto col_dot = [&](const WideMat<Z>& w, int j, int k) {
    double acc = 0;
    for (int r = 0; r < w.rows; ++r) acc += w_to_double(w.at(r, j)) * w_to_double(w.at(r, k));
    return acc;
  };
  auto round_quotient = [](double num, double den) -> Z {
    double q = num / den;
    if (q > 1.0e18) q = 1.0e18;
    if (q < -1.0e18) q = -1.0e18;
    return w_from_double<Z>(q);
  };
  auto try_u_move = [&](int i, int k, const Z& c) {
    Z s = d.at(i, i) / d.at(k, k);
    double before = row_dot(u, i, i) + col_dot(v, k, k);
    u_row_op(i, k, -c * s);
    v_col_op(k, i, c);
    double after = row_dot(u, i, i) + col_dot(v, k, k);
    if (after < before) return true;
    u_row_op(i, k, c * s);
    v_col_op(k, i, -c);
    return false;
  };
  auto try_v_move = [&](int j, int k, const Z& c) {
    Z s = d.at(j, j) / d.at(k, k);
    double before = col_dot(v, j, j) + row_dot(u, k, k);
    v_col_op(j, k, -c * s);
    u_row_op(k, j, c);
    double after = col_dot(v, j, j) + row_dot(u, k, k);
    if (after < before) return true;
    v_col_op(j, k, c * s);
    u_row_op(k, j, -c);
    return false;
  };
  for (int sweep = 0; sweep < 8; ++sweep) {
    bool changed = false;
    for (int i = rank - 1; i >= 1; --i)
      for (int k = i - 1; k >= 0; --k) {
        Z s = d.at(i, i) / d.at(k, k);
        double denom = row_dot(u, k, k) * w_to_double(s);
        if (denom == 0) continue;
        Z c = round_quotient(row_dot(u, i, k), denom);
        if (c != 0 && try_u_move(i, k, c)) changed = true;
      }
    for (int j = rank - 1; j >= 1; --j)
      for (int k = j - 1; k >= 0; --k) {
        Z s = d.at(j, j) / d.at(k, k);
        double denom = col_dot(v, k, k) * w_to_double(s);
        if (denom == 0) continue;
        Z c = round_quotient(col_dot(v, j, k), denom);
        if (c != 0 && try_v_move(j, k, c)) changed = true;
      }
    if (!changed) break;
  }

  SmithForm f;
  f.d = d.narrow();
  f.u = u.narrow();
  f.uinv = uinv.narrow();
  f.v = v.narrow();
  f.vinv = vinv.narrow();
  f.rank = rank;
  return f;
}

}  // namespace

SmithForm smith_normal_form(const Mat& a) {
  try {
    return smith_impl<i128>(a);
  } catch (const OverflowError&) {
    // Rare dense inputs outgrow 128-bit intermediates; redo exactly.
    return smith_impl<mpz_class>(a);
  }
}

Mat integer_kernel(const SmithForm& f, int cols) {
  const int nmin = std::min(f.d.rows(), f.d.cols());
  std::vector<int> free_cols;
  for (int j = 0; j < cols; ++j)
    if (j >= nmin || f.d.at(j, j) == 0) free_cols.push_back(j);
  Mat k(cols, int(free_cols.size()));
  for (size_t c = 0; c < free_cols.size(); ++c)
    for (int i = 0; i < cols; ++i) k.at(i, int(c)) = f.v.at(i, free_cols[c]);
  return k;
}

Mat integer_kernel(const Mat& a) { return integer_kernel(smith_normal_form(a), a.cols()); }

std::optional<std::vector<int64_t>> solve_integer(const SmithForm& f, const std::vector<int64_t>& b) {
  const int m = f.d.rows(), n = f.d.cols();
  const int nmin = std::min(m, n);
  std::vector<int64_t> z = f.u.mul_vec(b);
  std::vector<int64_t> y(n, 0);
  for (int i = 0; i < m; ++i) {
    int64_t di = i < nmin ? f.d.at(i, i) : 0;
    if (di == 0) {
      if (z[i] != 0) return std::nullopt;
    } else {
      if (z[i] % di != 0) return std::nullopt;
      y[i] = z[i] / di;
    }
  }
  return f.v.mul_vec(y);
}

std::optional<std::vector<int64_t>> solve_integer(const Mat& a, const std::vector<int64_t>& b) {
  return solve_integer(smith_normal_form(a), b);
}

// The reducer keeps a full upper-triangular basis of the lattice spanned by
// mod * Z^n and all inserted rows.  Seeding the diagonal with mod makes the
// in-flight row reducible modulo mod at every step (mod * e_c is always in
// the span), which keeps every intermediate value below mod^2.
RowReducer::RowReducer(int cols, int64_t mod) : cols_(cols), mod_(mod), pivot_rows_(cols) {
  for (int p = 0; p < cols; ++p) {
    std::vector<int64_t> r(cols, 0);
    r[p] = mod;
    pivot_rows_[p] = std::move(r);
  }
}

bool RowReducer::insert(std::vector<int64_t> row) {
  bool grew = false;
  for (auto& x : row) x = mod_reduce(x, mod_);
  for (int p = 0; p < cols_; ++p) {
    if (row[p] == 0) continue;
    std::vector<int64_t>& h = pivot_rows_[p];
    if (row[p] % h[p] == 0) {
      int64_t q = row[p] / h[p];
      for (int c = p; c < cols_; ++c)
        row[c] = mod_reduce(checked_sub(row[c], checked_mul(q, h[c])), mod_);
      continue;
    }
    // Unimodular 2-row combine: pivot becomes gcd(h[p], row[p]), incoming
    // row is cleared at p.  The stored row is updated exactly; normalize()
    // re-bounds its entries afterwards.
    grew = true;
    Egcd e = egcd(h[p], row[p]);
    int64_t hq = h[p] / e.g, rq = row[p] / e.g;
    for (int c = p; c < cols_; ++c) {
      int64_t hc = h[c], rc = row[c];
      h[c] = checked_add(checked_mul(e.x, hc), checked_mul(e.y, rc));
      row[c] = mod_reduce(checked_sub(checked_mul(hq, rc), checked_mul(rq, hc)), mod_);
    }
  }
  if (grew) normalize();
  return grew;
}

void RowReducer::normalize() {
  // Reduce entries above each pivot; keeps every stored entry in [0, mod).
  for (int c = 0; c < cols_; ++c) {
    const std::vector<int64_t>& pc = pivot_rows_[c];
    for (int q = 0; q < c; ++q) {
      std::vector<int64_t>& rq = pivot_rows_[q];
      int64_t k = rq[c] / pc[c];
      if (rq[c] % pc[c] < 0) --k;  // floor
      if (k == 0) continue;
      for (int j = c; j < cols_; ++j) rq[j] = checked_sub(rq[j], checked_mul(k, pc[j]));
    }
  }
}

bool RowReducer::is_full() const {
  for (int p = 0; p < cols_; ++p)
    if (pivot_rows_[p][p] != 1) return false;
  return true;
}

Mat RowReducer::rows() const {
  Mat r(cols_, cols_);
  for (int p = 0; p < cols_; ++p)
    for (int c = 0; c < cols_; ++c) r.at(p, c) = pivot_rows_[p][c];
  return r;
}

namespace {

// Append one column mods[r] * e_r per congruence row, then take an integer
// kernel and keep the unknown block.
Mat with_modulus_columns(const Mat& a, const std::vector<int64_t>& mods) {
  Mat cols(a.rows(), a.rows());
  for (int r = 0; r < a.rows(); ++r) cols.at(r, r) = mods[r];
  return Mat::hstack(a, cols);
}

}  // namespace

Mat congruence_kernel(const Mat& a, const std::vector<int64_t>& mods) {
  const int n = a.cols();
  if (a.rows() == 0) return Mat::identity(n);
  // Compress redundant systems first: rows normalized to a common modulus.
  int64_t ell = 1;
  for (int64_t m : mods) ell = lcm_i64(ell, m);
  if (a.rows() > 2 * n && ell > 0) {
    RowReducer red(n, ell);
    for (int r = 0; r < a.rows(); ++r) {
      std::vector<int64_t> row = a.row(r);
      int64_t scale = ell / mods[r];
      for (auto& x : row) x = checked_mul(x, scale);
      red.insert(std::move(row));
    }
    Mat rows = red.rows();
    std::vector<int64_t> rmods(rows.rows(), ell);
    Mat k = integer_kernel(with_modulus_columns(rows, rmods));
    Mat out(n, k.cols());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k.cols(); ++j) out.at(i, j) = k.at(i, j);
    return out;
  }
  Mat k = integer_kernel(with_modulus_columns(a, mods));
  Mat out(n, k.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k.cols(); ++j) out.at(i, j) = k.at(i, j);
  return out;
}

std::optional<std::vector<int64_t>> solve_congruence(const Mat& a, const std::vector<int64_t>& b,
                                                     const std::vector<int64_t>& mods) {
  const int n = a.cols();
  if (a.rows() == 0) return std::vector<int64_t>(n, 0);
  auto z = solve_integer(with_modulus_columns(a, mods), b);
  if (!z) return std::nullopt;
  z->resize(n);
  return z;
}

LinearSolver::LinearSolver(Mat a, int n_keep)
    : f_(smith_normal_form(a)), n_keep_(n_keep), rows_(a.rows()), cols_(a.cols()) {}

std::optional<std::vector<int64_t>> LinearSolver::solve(const std::vector<int64_t>& b) const {
  auto x = solve_integer(f_, b);
  if (!x) return std::nullopt;
  x->resize(n_keep_);
  return x;
}

bool LinearSolver::solvable(const std::vector<int64_t>& b) const {
  const int nmin = std::min(rows_, cols_);
  std::vector<int64_t> z = f_.u.mul_vec(b);
  for (int i = 0; i < rows_; ++i) {
    int64_t di = i < nmin ? f_.d.at(i, i) : 0;
    if (di == 0) {
      if (z[i] != 0) return false;
    } else if (z[i] % di != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace modcenter
