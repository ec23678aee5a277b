#include <doctest.h>

#include <random>

#include "modcenter/subgroup.hpp"
#include "oracles.hpp"

using namespace modcenter;

TEST_CASE("hom construction validates well-definedness") {
  FinAbGroup z4({4}), z6({6});
  // 1 -> 3 is the only nontrivial hom Z/4 -> Z/6.
  AbHom h(z4, z6, Mat::from_rows({{3}}));
  CHECK(h.apply(z4.make({1})) == z6.make({3}));
  CHECK_THROWS_AS(AbHom(z4, z6, Mat::from_rows({{1}})), Error);
  CHECK_THROWS_AS(AbHom(z4, z6, Mat::from_rows({{1, 2}})), ShapeMismatch);
}

TEST_CASE("hom operations on the paper counterexample module") {
  FinAbGroup m({2, 2});
  AbHom f(m, m, Mat::from_rows({{1, 0}, {0, 0}}));
  AbHom g(m, m, Mat::from_rows({{0, 1}, {1, 0}}));
  AbHom fg = f.compose(g);
  AbHom gf = g.compose(f);
  CHECK(fg.apply(m.make({1, 0})) == m.make({0, 0}));
  CHECK(gf.apply(m.make({1, 0})) == m.make({0, 1}));
  CHECK(fg.apply(m.make({0, 1})) == m.make({1, 0}));
  CHECK(gf.apply(m.make({0, 1})) == m.make({0, 0}));
  CHECK(fg.apply(m.make({1, 1})) == m.make({1, 0}));
  CHECK(gf.apply(m.make({1, 1})) == m.make({0, 1}));
  CHECK(!(fg == gf));

  CHECK(f.compose(AbHom::identity(m)) == f);
  CHECK(f.add(f.negate()).is_zero());
  FinAbGroup z4({4});
  CHECK_THROWS_AS(f.compose(AbHom::identity(z4)), ShapeMismatch);
}

TEST_CASE("homs are additive on sampled elements") {
  std::mt19937 rng(5);
  FinAbGroup a({2, 4, 8}), b({2, 12});
  auto homs = oracles::all_homs(a, b);
  std::uniform_int_distribution<int64_t> pick(0, a.order() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const AbHom& h = homs[rng() % homs.size()];
    Element x = a.element_at(pick(rng));
    Element y = a.element_at(pick(rng));
    CHECK(h.apply(a.add(x, y)) == b.add(h.apply(x), h.apply(y)));
  }
}

TEST_CASE("kernel and image of a hom") {
  FinAbGroup z4({4});
  Subgroup k = kernel(AbHom::scalar(z4, 2));
  CHECK(k.order() == 2);
  CHECK(k.contains(z4.make({2})));

  FinAbGroup m({2, 4});
  // a -> 0, b -> 2b
  AbHom h(m, m, Mat::from_rows({{0, 0}, {0, 2}}));
  Subgroup ker = kernel(h);
  CHECK(ker.basis() == FinAbGroup({2, 2}));
  // Enumerated oracle: exactly the elements killed by h.
  int64_t count = 0;
  for (int64_t i = 0; i < m.order(); ++i) {
    Element x = m.element_at(i);
    bool killed = h.apply(x).is_zero();
    CHECK(ker.contains(x) == killed);
    count += killed;
  }
  CHECK(count == ker.order());

  Subgroup im = image(h);
  CHECK(im.basis() == FinAbGroup({2}));
  CHECK(im.contains(m.make({0, 2})));
  CHECK(image(AbHom::identity(m)).order() == m.order());
  CHECK(image(AbHom::zero(m, m)).is_trivial());

  // First isomorphism theorem across random homs.
  std::mt19937 rng(9);
  auto homs = oracles::all_homs(FinAbGroup({2, 8}), FinAbGroup({4, 4}));
  for (int trial = 0; trial < 25; ++trial) {
    const AbHom& f = homs[rng() % homs.size()];
    CHECK(kernel(f).order() * image(f).order() == f.src().order());
  }
}

TEST_CASE("direct sums come with coherent injections and projections") {
  std::vector<FinAbGroup> parts = {FinAbGroup({2}), FinAbGroup({3})};
  DirectSum ds = direct_sum_group(parts);
  CHECK(ds.group == FinAbGroup({6}));

  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = 0; j < parts.size(); ++j) {
      AbHom comp = ds.projections[j].compose(ds.injections[i]);
      if (i == j)
        CHECK(comp.is_identity());
      else
        CHECK(comp.is_zero());
    }
  AbHom sum = AbHom::zero(ds.group, ds.group);
  for (size_t i = 0; i < parts.size(); ++i)
    sum = sum.add(ds.injections[i].compose(ds.projections[i]));
  CHECK(sum.is_identity());

  DirectSum single = direct_sum_group({FinAbGroup({4})});
  CHECK(single.injections[0].is_identity());
  CHECK(single.projections[0].is_identity());
  CHECK(direct_sum_group({FinAbGroup({2}), FinAbGroup({2})}).group == FinAbGroup({2, 2}));
}

TEST_CASE("hom group formula against brute force") {
  HomGroup h = hom_group(FinAbGroup({4}), FinAbGroup({6}));
  CHECK(h.group == FinAbGroup({2}));
  REQUIRE(h.basis.size() == 1);
  CHECK(h.basis[0].apply(FinAbGroup({4}).make({1})) == FinAbGroup({6}).make({3}));

  CHECK(hom_group(FinAbGroup({2}), FinAbGroup({3})).group.is_trivial());
  CHECK(hom_group(FinAbGroup({2, 4}), FinAbGroup::trivial()).group.is_trivial());

  std::vector<FinAbGroup> small = {FinAbGroup::trivial(), FinAbGroup({2}),    FinAbGroup({4}),
                                   FinAbGroup({2, 2}),    FinAbGroup({2, 4}), FinAbGroup({3}),
                                   FinAbGroup({6}),       FinAbGroup({8}),    FinAbGroup({16})};
  for (const auto& a : small)
    for (const auto& b : small) {
      if (a.order() > 16 || b.order() > 16) continue;
      CHECK(hom_group(a, b).group.order() == int64_t(oracles::all_homs(a, b).size()));
    }
}

TEST_CASE("hom flattening round trips") {
  FinAbGroup a({2, 4}), b({4});
  FinAbGroup entry = hom_entry_group(a, b);
  CHECK(entry == FinAbGroup({4, 4}));
  for (const AbHom& h : oracles::all_homs(a, b))
    CHECK(hom_unflatten(a, b, hom_flatten(h)) == h);
}
