#include <doctest.h>

#include "modcenter/ring.hpp"
#include "oracles.hpp"

using namespace modcenter;

namespace {

// 2x2 matrices over F_2 from the four matrix units: E_uv E_pq = [v==p] E_uq.
FinRing m2f2() {
  FinAbGroup add({2, 2, 2, 2});
  auto unit = [&](int u, int v) { return u * 2 + v; };
  std::vector<std::vector<Element>> table(4, std::vector<Element>(4, add.zero()));
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
          Element prod = add.zero();
          if (v == p) prod.coords[size_t(unit(u, q))] = 1;
          table[size_t(unit(u, v))][size_t(unit(p, q))] = prod;
        }
  Element one = add.zero();
  one.coords[size_t(unit(0, 0))] = 1;
  one.coords[size_t(unit(1, 1))] = 1;
  return FinRing(add, std::move(table), one);
}

}  // namespace

TEST_CASE("scalar rings as structure-constant rings") {
  FinRing z6 = scalar_ring_as_finring(6);
  CHECK(ring_validate(z6).ok);
  CHECK(ring_is_commutative(z6));
  CHECK(ring_center(z6).is_whole());
  CHECK(ring_center(scalar_ring_as_finring(4)).is_whole());
  CHECK(scalar_ring_as_finring(2).order() == 2);
  CHECK_THROWS_AS(scalar_ring_as_finring(1), InvalidModulus);
}

TEST_CASE("validation catches broken tables") {
  FinAbGroup add({2});
  // g*g has order not dividing 2 is impossible on Z/2; break the unit law
  // instead: g*g = 0 makes one*x = x fail.
  FinRing bad(add, {{add.zero()}}, add.generator(0));
  RingValidation v = ring_validate(bad);
  CHECK(!v.ok);
  CHECK(v.report.find("unit") != std::string::npos);

  // Non-well-defined table: on Z/2 + Z/4 set g1*g1 = g2 of order 4.
  FinAbGroup add2({2, 4});
  std::vector<std::vector<Element>> t(2, std::vector<Element>(2, add2.zero()));
  t[0][0] = add2.make({0, 1});
  FinRing bad2(add2, std::move(t), add2.zero());
  CHECK(!ring_validate(bad2).ok);
}

TEST_CASE("matrix ring over F2") {
  FinRing r = m2f2();
  CHECK(ring_validate(r).ok);
  CHECK(!ring_is_commutative(r));
  CHECK(ring_center(r).order() == 2);  // scalars
  CHECK(ring_center(r).contains(r.one()));

  CommutatorSet cs = commutator_set(r);
  CHECK(cs.span.order() == 8);  // trace-zero matrices

  // Brute-force span of all element-pair commutators agrees.
  const FinAbGroup& a = r.additive();
  std::vector<Element> gens;
  for (int64_t i = 0; i < a.order(); ++i)
    for (int64_t j = 0; j < a.order(); ++j) {
      Element x = a.element_at(i), y = a.element_at(j);
      gens.push_back(a.sub(r.mul(x, y), r.mul(y, x)));
    }
  CHECK(Subgroup::from_generators(a, std::move(gens)).order() == 8);
}

TEST_CASE("three-way commutativity equivalence") {
  for (const FinRing& r : {scalar_ring_as_finring(6), scalar_ring_as_finring(9), m2f2()}) {
    bool commutative = ring_is_commutative(r);
    CHECK((ring_center(r).is_whole()) == commutative);
    CHECK((commutator_set(r).span.is_trivial()) == commutative);
    // Generator-pair test agrees with the all-element test.
    const FinAbGroup& a = r.additive();
    bool all = true;
    for (int64_t i = 0; i < a.order() && all; ++i)
      for (int64_t j = 0; j < a.order(); ++j)
        if (!(r.mul(a.element_at(i), a.element_at(j)) == r.mul(a.element_at(j), a.element_at(i)))) {
          all = false;
          break;
        }
    CHECK(all == commutative);
    // Center is multiplicatively closed and contains one.
    Subgroup c = ring_center(r);
    CHECK(c.contains(r.one()));
    for (const Element& x : c.elements())
      for (const Element& y : c.elements()) CHECK(c.contains(r.mul(x, y)));
  }
}

TEST_CASE("opposite ring commutativity") {
  for (const FinRing& r : {scalar_ring_as_finring(8), m2f2()}) {
    FinRing op = opposite_ring(r);
    CHECK(ring_validate(op).ok);
    CHECK(ring_is_commutative(op) == ring_is_commutative(r));
    CHECK(ring_center(op).order() == ring_center(r).order());
  }
}

TEST_CASE("commutative ring has zero commutators") {
  FinRing z9 = scalar_ring_as_finring(9);
  for (const Element& c : commutator_set(z9).generator_commutators) CHECK(c.is_zero());
}
