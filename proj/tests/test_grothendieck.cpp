#include "doctest.h"

#include "nfold/grothendieck.hpp"
#include "nfold/homology.hpp"
#include "nfold/nfold_nerve.hpp"
#include "nfold/saturation.hpp"

using namespace nfold;

namespace {

long long binom(int a, int b) {
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

Cat ordinal(int m) {
  std::vector<std::string> labels;
  for (int i = 0; i <= m; ++i) labels.push_back(std::to_string(i));
  return FinPoset::from_relation(m + 1, [](int a, int b) { return a <= b; }, labels).to_category();
}

// Δ[0,...,0] -> Δ[1,...,1] picking the corner with all coordinates v.
MultiSimplicialMap corner(int n, int v) {
  SSet seg = std_simplex(1);
  std::vector<Simplex> parts(n, SimplicialSet::nd(0, *seg->find(0, {v})));
  return multi_map_from_keys(multi_simplex(MultiIndex(n, 0)), multi_simplex(MultiIndex(n, 1)),
                             [&](const MultiIndex&, const Key&) { return external_key(parts); });
}

}  // namespace

TEST_CASE("Δ/Δ[m] is the comma category over [m]") {
  for (int m = 1; m <= 2; ++m)
    for (int cap = 1; cap <= 2; ++cap) {
      auto g = grothendieck(as_multi(std_simplex(m)), MultiIndex{cap});
      std::string why;
      CHECK_MESSAGE(check_grothendieck(g, &why), why);
      // objects are maps [k] -> [m], arrows are triangles over [m]
      long long objects = 0, arrows = 0;
      for (int k = 0; k <= cap; ++k) objects += binom(k + m + 1, k + 1);
      for (int l = 0; l <= cap; ++l)
        for (int k = 0; k <= cap; ++k) arrows += binom(l + m + 1, l + 1) * binom(k + l + 1, k + 1);
      CHECK(g.cat->count(0) == objects);
      CHECK(g.cat->count(1) == arrows);
    }
}

TEST_CASE("Grothendieck construction of an external product") {
  SSet a = std_simplex(1), b = boundary(2);
  auto whole = grothendieck(external_product({a, b}), MultiIndex{1, 2});
  auto ga = grothendieck(as_multi(a), MultiIndex{1});
  auto gb = grothendieck(as_multi(b), MultiIndex{2});
  auto ext = external_product({to_category(*ga.cat), to_category(*gb.cat)});
  for (unsigned eps = 0; eps < 4; ++eps) CHECK(whole.cat->count(eps) == ext->count(eps));
  std::string why;
  CHECK_MESSAGE(check_grothendieck(whole, &why), why);
}

TEST_CASE("terminal multisimplicial set") {
  auto g = grothendieck(multi_simplex({0, 0}), MultiIndex{2, 1});
  // one object per multi-degree; the cubes are all tuples of maps
  CHECK(g.cat->count(0) == 6);
  long long c3 = 0;
  for (int l1 = 0; l1 <= 2; ++l1)
    for (int k1 = 0; k1 <= 2; ++k1)
      for (int l2 = 0; l2 <= 1; ++l2)
        for (int k2 = 0; k2 <= 1; ++k2) c3 += binom(k1 + l1 + 1, k1 + 1) * binom(k2 + l2 + 1, k2 + 1);
  CHECK(g.cat->count(3) == c3);
}

TEST_CASE("last vertex map of a path") {
  std::vector<OrdinalMap> path{OrdinalMap(1, {0}), OrdinalMap(2, {0, 2})};
  CHECK(last_vertex_map(0, path) == OrdinalMap(2, {0, 2, 2}));
  CHECK(last_vertex_map(3, {}) == OrdinalMap(3, {3}));
}

TEST_CASE("p-multisimplices follow the coproduct formula and rho is a weak equivalence") {
  struct Case {
    SMSet Y;
    MultiIndex caps, extent;
  };
  std::vector<Case> cases{
      {as_multi(std_simplex(1)), {2}, {3}},
      {as_multi(boundary(2)), {2}, {3}},
      {multi_simplex({1, 1}), {1, 1}, {2, 2}},
      {multi_simplex({1, 0}), {1, 1}, {2, 2}},
      {delta_shriek(boundary(2), 2), {1, 1}, {2, 2}},
  };
  for (auto& c : cases) {
    auto r = rho_check(c.Y, c.extent, c.caps);
    CHECK_MESSAGE(r.category_ok, r.detail);
    CHECK_MESSAGE(r.counts_ok, r.detail);
    CHECK_MESSAGE(r.natural, r.detail);
    CHECK_MESSAGE(r.equivalence.ok, r.detail);
  }
}

TEST_CASE("N(Δ/∂Δ[3]) has the homology of the 2-sphere") {
  auto g = grothendieck(as_multi(boundary(3)), MultiIndex{2});
  auto gn = groth_nerve(g, MultiIndex{3});
  auto h = homology(*gn.diag);
  REQUIRE(h.betti.size() >= 3);
  CHECK(h.betti[0] == 1);
  CHECK(h.betti[1] == 0);
  CHECK(h.betti[2] == 1);
  CHECK(h.torsion[1].empty());
  // while c ∂Δ[3] is already [3]
  CHECK(find_isomorphism(categorify(*boundary(3)), ordinal(3)));
}

TEST_CASE("caps are stable") {
  auto s = cap_stability(as_multi(boundary(2)), MultiIndex{1}, MultiIndex{2});
  CHECK(s.stable);
  CHECK(s.at_caps.betti[1] == 1);
}

TEST_CASE("N^n λ_D = ρ_{N^n D}") {
  auto r1 = lambda_rho_check(from_category(*ordinal(1)), MultiIndex{4}, MultiIndex{2});
  CHECK_MESSAGE(r1.ok(), r1.detail);
  auto r2 = lambda_rho_check(external_product({ordinal(1), ordinal(1)}), MultiIndex{2, 2}, MultiIndex{1, 1});
  CHECK_MESSAGE(r2.ok(), r2.detail);
  auto r3 = lambda_rho_check(external_product({ordinal(0), ordinal(0)}), MultiIndex{2, 2}, MultiIndex{1, 1});
  CHECK_MESSAGE(r3.ok(), r3.detail);
  // λ on [1] is the last vertex functor
  SMSet n1 = nfold_nerve(from_category(*ordinal(1)));
  auto g = grothendieck(n1, MultiIndex{1});
  NCat d = from_category(*ordinal(1));
  auto lam = lambda(g, d);
  for (int x = 0; x < g.cat->count(0); ++x) {
    GrothCell c = g.cell(0, x);
    auto arr = n1->model()->act(c.z.eta, n1->key(c.z.nd_degree(), c.z.index));
    const int last = arr.back();
    CHECK(lam.map[0][x] == d->tgt(1, 0, last));
  }
}

TEST_CASE("Δ^{⊠n}/- preserves pushouts") {
  auto r = groth_preserves_colimits_check(corner(2, 1), corner(2, 0), MultiIndex{1, 1}, MultiIndex{2, 2});
  CHECK_MESSAGE(r.iso, r.detail);
  // an empty Y_0 gives the disjoint union
  SMSet empty = MultiSimplicialSet::Builder(2).build();
  MultiSimplicialMap e1{empty, multi_simplex({1, 1}), {}}, e2{empty, multi_simplex({1, 0}), {}};
  auto d = groth_preserves_colimits_check(e1, e2, MultiIndex{1, 1}, MultiIndex{1, 1});
  CHECK_MESSAGE(d.iso, d.detail);
}

TEST_CASE("zigzag through δ*δ_!") {
  for (int n = 1; n <= 2; ++n)
    for (SSet X : {std_simplex(0), std_simplex(1), boundary(2)}) {
      auto z = zigzag_suite(X, n, MultiIndex(n, 2), MultiIndex(n, 1));
      CHECK_MESSAGE(z.ok(), z.detail);
      CHECK(z.rho.dom.same_groups(homology(*X)));
    }
}
