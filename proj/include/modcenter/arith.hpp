#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modcenter/errors.hpp"

namespace modcenter {

// Checked 64-bit arithmetic.  Every arithmetic step in the exact linear
// algebra goes through these; overflow raises instead of wrapping.

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in +");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in -");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in *");
  return r;
}

inline int64_t checked_neg(int64_t a) { return checked_sub(0, a); }

// Reduce v into [0, m) for m > 0; m == 0 means "no reduction" (plain Z).
inline int64_t mod_reduce(int64_t v, int64_t m) {
  if (m == 0) return v;
  int64_t r = v % m;
  return r < 0 ? r + m : r;
}

inline int64_t gcd_i64(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int64_t lcm_i64(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  int64_t g = gcd_i64(a, b);
  return checked_mul(a / g, b < 0 ? -b : b);
}

struct Egcd {
  int64_t g, x, y;  // g = a*x + b*y, g >= 0
};

inline Egcd egcd(int64_t a, int64_t b) {
  int64_t old_r = a, r = b;
  int64_t old_s = 1, s = 0;
  int64_t old_t = 0, t = 1;
  while (r != 0) {
    int64_t q = old_r / r;
    int64_t tmp = old_r - q * r;
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

// Prime factorization by trial division; fine for the desk-scale orders
// this library handles.
inline std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_squarefree(int64_t n) {
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

// Partitions of e as weakly decreasing exponent vectors, in a fixed
// deterministic order.
inline std::vector<std::vector<int>> partitions_of(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, e, e);
  return out;
}

}  // namespace modcenter
