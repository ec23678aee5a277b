#include <doctest.h>

#include <random>

#include "modcenter/snf.hpp"
#include "oracles.hpp"

using namespace modcenter;

namespace {

Mat rows(std::vector<std::vector<int64_t>> r) { return Mat::from_rows(std::move(r)); }

void check_roundtrip(const Mat& a) {
  SmithForm f = smith_normal_form(a);
  CHECK(oracles::product_matches(f.u, a, f.v, f.d));
  CHECK(oracles::product_matches(f.u, f.uinv, Mat::identity(a.rows()), Mat::identity(a.rows())));
  CHECK(oracles::product_matches(f.v, f.vinv, Mat::identity(a.cols()), Mat::identity(a.cols())));
  // Diagonal, nonnegative, divisibility chain.
  for (int i = 0; i < f.d.rows(); ++i)
    for (int j = 0; j < f.d.cols(); ++j)
      if (i != j) CHECK(f.d.at(i, j) == 0);
  int nmin = std::min(a.rows(), a.cols());
  for (int i = 0; i < nmin; ++i) CHECK(f.d.at(i, i) >= 0);
  for (int i = 0; i + 1 < nmin; ++i)
    if (f.d.at(i, i) != 0) CHECK(f.d.at(i + 1, i + 1) % f.d.at(i, i) == 0);
  __int128 du = oracles::determinant(f.u);
  __int128 dv = oracles::determinant(f.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
}

}  // namespace

TEST_CASE("smith normal form on the worked examples") {
  SmithForm f = smith_normal_form(rows({{2, 0}, {0, 3}}));
  CHECK(f.d.at(0, 0) == 1);
  CHECK(f.d.at(1, 1) == 6);

  f = smith_normal_form(rows({{0}}));
  CHECK(f.d.at(0, 0) == 0);
  CHECK(f.u == Mat::identity(1));
  CHECK(f.v == Mat::identity(1));

  f = smith_normal_form(rows({{2, 4}, {6, 8}}));
  CHECK(f.d.at(0, 0) == 2);
  CHECK(f.d.at(1, 1) == 4);
}

TEST_CASE("smith normal form diagonal matches the minor-gcd invariants") {
  Mat a = rows({{2, 4}, {6, 8}});
  CHECK(oracles::minor_gcd(a, 1) == 2);
  CHECK(oracles::minor_gcd(a, 2) == 8);  // d1 * d2

  std::mt19937 rng(7);
  std::uniform_int_distribution<int64_t> entry(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + int(rng() % 3);
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    SmithForm f = smith_normal_form(m);
    int64_t prod = 1;
    for (int t = 0; t < n; ++t) {
      prod = prod * f.d.at(t, t);
      CHECK(prod == oracles::minor_gcd(m, t + 1));
    }
  }
}

TEST_CASE("smith normal form round trips on random matrices") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int64_t> entry(-50, 50);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 120; ++trial) {
    Mat a(dim(rng), dim(rng));
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
    check_roundtrip(a);
  }
  check_roundtrip(Mat(0, 0));
  check_roundtrip(Mat(3, 0));
  check_roundtrip(Mat(0, 3));
}

TEST_CASE("integer kernel and solve") {
  Mat a = rows({{2, 4}, {6, 8}});
  CHECK(integer_kernel(a).cols() == 0);  // nonsingular

  Mat b = rows({{1, 2, 3}});
  Mat k = integer_kernel(b);
  CHECK(k.cols() == 2);
  for (int c = 0; c < k.cols(); ++c) {
    auto v = b.mul_vec(k.col(c));
    CHECK(v[0] == 0);
  }

  auto x = solve_integer(a, {2, 6});
  REQUIRE(x.has_value());
  CHECK(a.mul_vec(*x) == std::vector<int64_t>{2, 6});
  CHECK(!solve_integer(a, {1, 0}).has_value());
}

TEST_CASE("congruence kernels pick up the modulus lattice") {
  // x == 0 (mod 2) inside Z/4 coordinates: solutions generated by 2 and 4.
  Mat a = rows({{1}});
  Mat k = congruence_kernel(a, {2});
  bool has_two = false;
  for (int c = 0; c < k.cols(); ++c)
    if (mod_reduce(k.at(0, c), 4) == 2) has_two = true;
  CHECK(has_two);

  auto s = solve_congruence(rows({{3}}), {1}, {4});
  REQUIRE(s.has_value());
  CHECK(mod_reduce(3 * (*s)[0], 4) == 1);
}

TEST_CASE("row reducer compresses redundant congruence systems") {
  RowReducer red(3, 12);
  CHECK(!red.insert({0, 0, 0}));
  CHECK(red.insert({2, 4, 6}));
  CHECK(!red.insert({4, 8, 12}));   // multiple of the first modulo 12
  CHECK(red.insert({0, 2, 0}));
  Mat m = red.rows();
  // The reduced rows span the same lattice: every inserted row reduces to 0.
  RowReducer again(3, 12);
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<int64_t> row(3);
    for (int c = 0; c < 3; ++c) row[size_t(c)] = m.at(r, c);
    again.insert(row);
  }
  CHECK(!again.insert({2, 4, 6}));
  CHECK(!again.insert({0, 2, 0}));
}
