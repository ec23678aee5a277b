#include "modcenter/subgroup.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include "modcenter/arith.hpp"
#include "modcenter/errors.hpp"

namespace modcenter {

namespace {

Mat generator_matrix(const FinAbGroup& ambient, const std::vector<Element>& gens) {
  Mat g(ambient.rank(), int(gens.size()));
  for (size_t j = 0; j < gens.size(); ++j) {
    if (int(gens[j].coords.size()) != ambient.rank())
      throw ShapeMismatch("generator does not live in the ambient group");
    for (int i = 0; i < ambient.rank(); ++i) g.at(i, int(j)) = gens[j].coords[i];
  }
  return g;
}

Mat membership_system(const FinAbGroup& ambient, const Mat& gens) {
  Mat d(ambient.rank(), ambient.rank());
  for (int i = 0; i < ambient.rank(); ++i) d.at(i, i) = ambient.invariant_factors()[i];
  return Mat::hstack(gens, d);
}

}  // namespace

Subgroup Subgroup::from_generators(const FinAbGroup& ambient, std::vector<Element> generators) {
  Subgroup s;
  s.ambient_ = ambient;

  const int k = ambient.rank();
  // Large generator lists would blow up the canonicalization solves; the
  // spanned lattice has a basis of at most k vectors, so compress first.
  if (int(generators.size()) > 2 * k + 2) {
    RowReducer red(k, ambient.exponent());
    for (int i = 0; i < k; ++i) {
      std::vector<int64_t> rel(size_t(k), 0);
      rel[size_t(i)] = ambient.invariant_factors()[i];
      red.insert(std::move(rel));
    }
    for (const Element& e : generators) {
      if (int(e.coords.size()) != k) throw ShapeMismatch("generator does not live in the ambient group");
      red.insert(e.coords);
    }
    Mat rows = red.rows();
    std::vector<Element> compressed;
    for (int r = 0; r < rows.rows(); ++r) {
      Element e = ambient.make(rows.row(r));
      if (!e.is_zero()) compressed.push_back(std::move(e));
    }
    generators = std::move(compressed);
  }
  s.gens_ = std::move(generators);

  const int m = int(s.gens_.size());
  Mat g = generator_matrix(ambient, s.gens_);

  // Relations among the chosen generators: c with G c == 0 in the ambient.
  Mat ker = congruence_kernel(g, ambient.invariant_factors());
  Mat relations(ker.cols(), m);
  for (int r = 0; r < ker.cols(); ++r)
    for (int j = 0; j < m; ++j) relations.at(r, j) = ker.at(j, r);
  Presentation pres = group_from_presentation(relations, m);
  s.basis_ = pres.group;

  Mat incl(k, s.basis_.rank());
  for (int t = 0; t < s.basis_.rank(); ++t) {
    std::vector<int64_t> v = g.mul_vec(pres.lift(t));
    for (int i = 0; i < k; ++i) incl.at(i, t) = mod_reduce(v[i], ambient.invariant_factors()[i]);
  }
  s.incl_ = std::make_shared<AbHom>(s.basis_, ambient, std::move(incl));
  s.member_ = std::make_shared<LinearSolver>(membership_system(ambient, g), m);
  return s;
}

Subgroup Subgroup::whole(const FinAbGroup& ambient) {
  std::vector<Element> gens;
  for (int i = 0; i < ambient.rank(); ++i) gens.push_back(ambient.generator(i));
  return from_generators(ambient, std::move(gens));
}

Subgroup Subgroup::trivial_in(const FinAbGroup& ambient) { return from_generators(ambient, {}); }

bool Subgroup::contains(const Element& x) const {
  if (int(x.coords.size()) != ambient_.rank()) throw AmbientMismatch("element in wrong group");
  return member_->solvable(x.coords);
}

bool Subgroup::contains(const Subgroup& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch("subgroups of different groups");
  for (const Element& g : other.basis_images())
    if (!contains(g)) return false;
  return true;
}

bool Subgroup::equals(const Subgroup& other) const {
  return order() == other.order() && contains(other);
}

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  out.reserve(size_t(order()));
  for (int64_t i = 0; i < order(); ++i) out.push_back(incl_->apply(basis_.element_at(i)));
  return out;
}

std::vector<Element> Subgroup::basis_images() const {
  std::vector<Element> out;
  for (int t = 0; t < basis_.rank(); ++t) out.push_back(incl_->apply(basis_.generator(t)));
  return out;
}

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch("sum of subgroups of different groups");
  std::vector<Element> gens = a.basis_images();
  for (auto& g : b.basis_images()) gens.push_back(g);
  return Subgroup::from_generators(a.ambient(), std::move(gens));
}

Subgroup subgroup_intersect_enumerate(const Subgroup& a, const Subgroup& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch("intersection across groups");
  const Subgroup& small = a.order() <= b.order() ? a : b;
  const Subgroup& large = a.order() <= b.order() ? b : a;
  std::vector<Element> common;
  for (const Element& x : small.elements())
    if (large.contains(x)) common.push_back(x);
  return Subgroup::from_generators(a.ambient(), std::move(common));
}

Subgroup subgroup_intersect_pullback(const Subgroup& a, const Subgroup& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch("intersection across groups");
  const FinAbGroup& amb = a.ambient();
  // Lattices L_a = im[G_a | D], L_b = im[G_b | D]; solutions of
  // [G_a|D] x = [G_b|D] y give generators of the intersection.
  Mat ma = membership_system(amb, generator_matrix(amb, a.basis_images()));
  Mat mb = membership_system(amb, generator_matrix(amb, b.basis_images()));
  Mat neg = mb;
  for (int i = 0; i < neg.rows(); ++i)
    for (int j = 0; j < neg.cols(); ++j) neg.at(i, j) = checked_neg(neg.at(i, j));
  Mat k = integer_kernel(Mat::hstack(ma, neg));
  std::vector<Element> gens;
  for (int c = 0; c < k.cols(); ++c) {
    std::vector<int64_t> x(size_t(ma.cols()));
    for (int i = 0; i < ma.cols(); ++i) x[size_t(i)] = k.at(i, c);
    std::vector<int64_t> v = ma.mul_vec(x);
    gens.push_back(amb.make(v));
  }
  return Subgroup::from_generators(amb, std::move(gens));
}

Subgroup subgroup_intersect(const Subgroup& a, const Subgroup& b) {
  if (std::min(a.order(), b.order()) <= 512) return subgroup_intersect_enumerate(a, b);
  return subgroup_intersect_pullback(a, b);
}

Subgroup kernel(const AbHom& h) {
  Mat k = congruence_kernel(h.matrix(), h.dst().invariant_factors());
  std::vector<Element> gens;
  for (int c = 0; c < k.cols(); ++c) gens.push_back(h.src().make(k.col(c)));
  return Subgroup::from_generators(h.src(), std::move(gens));
}

Subgroup image(const AbHom& h) {
  std::vector<Element> gens;
  for (int j = 0; j < h.src().rank(); ++j) gens.push_back(h.apply(h.src().generator(j)));
  return Subgroup::from_generators(h.dst(), std::move(gens));
}

Subgroup socle(const FinAbGroup& g) {
  std::vector<Element> gens;
  for (int i = 0; i < g.rank(); ++i) {
    int64_t d = g.invariant_factors()[i];
    for (auto& [p, e] : factorize(d)) {
      Element x = g.zero();
      x.coords[i] = d / p;
      gens.push_back(std::move(x));
    }
  }
  return Subgroup::from_generators(g, std::move(gens));
}

SocleEssential socle_and_essential(const FinAbGroup& g, const Subgroup& n) {
  if (n.ambient() != g) throw AmbientMismatch("subgroup of a different group");
  Subgroup s = socle(g);
  bool essential = n.contains(s);
  return {std::move(s), essential};
}

// ---- element-set machinery ----

int64_t BitVec::count() const {
  int64_t c = 0;
  for (uint64_t x : w) c += std::popcount(x);
  return c;
}

GroupTable::GroupTable(const FinAbGroup& g) : g_(g), n_(g.order()) {
  if (n_ <= 2048) {
    add_tab_.resize(size_t(n_) * size_t(n_));
    for (int64_t x = 0; x < n_; ++x) {
      Element ex = g_.element_at(x);
      for (int64_t y = 0; y <= x; ++y) {
        int64_t s = g_.index_of(g_.add(ex, g_.element_at(y)));
        add_tab_[size_t(x) * n_ + y] = int32_t(s);
        add_tab_[size_t(y) * n_ + x] = int32_t(s);
      }
    }
  }
}

int64_t GroupTable::add(int64_t x, int64_t y) const {
  if (!add_tab_.empty()) return add_tab_[size_t(x) * n_ + y];
  return g_.index_of(g_.add(g_.element_at(x), g_.element_at(y)));
}

int64_t GroupTable::neg(int64_t x) const { return g_.index_of(g_.neg(g_.element_at(x))); }

void GroupTable::translate_into(BitVec& dst, const BitVec& src, int64_t x) const {
  for (size_t word = 0; word < src.w.size(); ++word) {
    uint64_t bits = src.w[word];
    while (bits) {
      int b = std::countr_zero(bits);
      bits &= bits - 1;
      dst.set(add(int64_t(word) * 64 + b, x));
    }
  }
}

BitVec GroupTable::extend_subgroup(const BitVec& sub, int64_t x) const {
  BitVec out = sub;
  // Union of sub + j*x for j = 0 .. ord(x rel sub)-1.
  int64_t jx = x;
  while (!sub.get(jx)) {
    translate_into(out, sub, jx);
    jx = add(jx, x);
  }
  return out;
}

BitVec GroupTable::span(const std::vector<int64_t>& gens) const {
  BitVec out(n_);
  out.set(0);
  for (int64_t g : gens)
    if (!out.get(g)) out = extend_subgroup(out, g);
  return out;
}

SubgroupEnum enumerate_subgroup_seeds(const FinAbGroup& g, int64_t order_bound) {
  if (g.order() > order_bound)
    throw BoundExceeded("group order exceeds subgroup enumeration bound", g.order());

  SubgroupEnum out;
  out.table = std::make_shared<GroupTable>(g);
  const GroupTable& tab = *out.table;
  const int64_t n = g.order();

  BitVec triv(n);
  triv.set(0);
  std::unordered_set<BitVec, BitVecHash> seen;
  std::deque<BitVec> queue;
  seen.insert(triv);
  queue.push_back(triv);

  std::vector<BitVec> found;
  while (!queue.empty()) {
    BitVec h = std::move(queue.front());
    queue.pop_front();
    found.push_back(h);
    // Extend by one coset representative at a time.
    BitVec covered = h;
    for (int64_t x = 1; x < n; ++x) {
      if (covered.get(x)) continue;
      BitVec bigger = tab.extend_subgroup(h, x);
      if (seen.insert(bigger).second) queue.push_back(std::move(bigger));
      tab.translate_into(covered, h, x);
    }
  }

  // Canonical greedy chain per subgroup, for the deterministic order.
  for (const BitVec& h : found) {
    SubgroupSeed seed;
    seed.order = h.count();
    BitVec cur(n);
    cur.set(0);
    while (cur != h) {
      int64_t pick = -1;
      for (size_t word = 0; word < h.w.size() && pick < 0; ++word) {
        uint64_t candidates = h.w[word] & ~cur.w[word];
        if (candidates) pick = int64_t(word) * 64 + std::countr_zero(candidates);
      }
      seed.gen_indices.push_back(pick);
      cur = tab.extend_subgroup(cur, pick);
    }
    out.seeds.push_back(std::move(seed));
    out.sets.push_back(h);
  }

  std::vector<size_t> idx(out.seeds.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (out.seeds[a].order != out.seeds[b].order) return out.seeds[a].order < out.seeds[b].order;
    return out.seeds[a].gen_indices < out.seeds[b].gen_indices;
  });
  SubgroupEnum sorted;
  sorted.table = out.table;
  for (size_t i : idx) {
    sorted.seeds.push_back(std::move(out.seeds[i]));
    sorted.sets.push_back(std::move(out.sets[i]));
  }
  return sorted;
}

Subgroup subgroup_from_seed(const FinAbGroup& g, const SubgroupSeed& seed) {
  std::vector<Element> gens;
  for (int64_t i : seed.gen_indices) gens.push_back(g.element_at(i));
  return Subgroup::from_generators(g, std::move(gens));
}

std::vector<Subgroup> enumerate_subgroups(const FinAbGroup& g, int64_t order_bound) {
  SubgroupEnum e = enumerate_subgroup_seeds(g, order_bound);
  std::vector<Subgroup> out;
  out.reserve(e.seeds.size());
  for (const auto& seed : e.seeds) out.push_back(subgroup_from_seed(g, seed));
  return out;
}

}  // namespace modcenter
