#include "doctest.h"

#include "nfold/homology.hpp"
#include "nfold/multisimplicial.hpp"
#include "nfold/product.hpp"

using namespace nfold;

TEST_CASE("external product of simplices") {
  auto y = multi_simplex({1, 1});
  CHECK(y->count({1, 1}) == 1);
  CHECK(y->count({0, 0}) == 4);
  CHECK(y->count({1, 0}) == 2);
  CHECK(y->total() == 9);
  std::string why;
  CHECK_MESSAGE(y->check_identities(&why), why);
  auto z = multi_simplex({2, 0});
  CHECK(z->extent() == MultiIndex{2, 0});
  CHECK(z->count({2, 0}) == 1);
}

TEST_CASE("diagonal of an external product is the product") {
  auto a = std_simplex(1), b = boundary(2);
  auto y = external_product({a, b});
  auto d = diagonal(y);
  auto p = product({a, b});
  CHECK(d->counts() == p->counts());
  auto f = map_from_keys(d, p, [&](int, const Key& k) {
    MultiSimplex s = diagonal_parts(*y, k);
    auto parts = external_parts(s.nd_degree(), y->key(s.nd_degree(), s.index));
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i].eta = s.eta.parts[i];
    return product_key(parts);
  });
  std::string why;
  CHECK_MESSAGE(is_isomorphism(f, &why), why);
  auto sq = diagonal(multi_simplex({1, 1}));
  CHECK(sq->counts() == std::vector<int>{4, 5, 2});
  auto one = diagonal(multi_simplex({2}));
  CHECK(one->counts() == std_simplex(2)->counts());
}

TEST_CASE("delta shriek of a simplex") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= (n == 3 ? 1 : 2); ++m) {
      auto x = std_simplex(m);
      auto s = delta_shriek(x, n);
      auto t = multi_simplex(MultiIndex(n, m));
      auto f = multi_map_from_keys(s, t, [&](const MultiIndex& p, const Key& k) {
        auto verts = x->key(k[0], k[1]);
        std::vector<Simplex> parts;
        std::size_t at = 2;
        for (int a = 0; a < n; ++a) {
          std::vector<int> v;
          for (int i = 0; i <= p[a]; ++i) v.push_back(verts[k[at + static_cast<std::size_t>(i)]]);
          at += static_cast<std::size_t>(p[a]) + 1;
          parts.push_back(std_simplex(m)->locate(p[a], v));
        }
        return external_key(parts);
      });
      std::string why;
      CHECK_MESSAGE(is_isomorphism(f, &why), why);
    }
  auto pt = delta_shriek(std_simplex(0), 2);
  CHECK(pt->total() == 1);
}

TEST_CASE("delta shriek of a circle and the unit") {
  auto x = boundary(2);
  auto s = delta_shriek(x, 2);
  std::string why;
  CHECK_MESSAGE(s->check_identities(&why), why);
  auto d = diagonal(s);
  auto b = homology(*d).betti;
  b.resize(4, 0);
  CHECK(b == std::vector<int>{1, 1, 0, 0});
  auto u = unit_delta(x, d);
  CHECK(u.check());
  CHECK(homology_equivalence(u).ok);
  auto d3 = diagonal(delta_shriek(std_simplex(1), 3));
  auto u3 = unit_delta(std_simplex(1), d3);
  CHECK(homology_equivalence(u3).ok);
}

TEST_CASE("delta shriek preserves a pushout") {
  // two edges glued head to tail
  auto e = std_simplex(1), pt = std_simplex(0);
  SimplicialMap head{pt, e, {{SimplicialSet::nd(0, 1)}}}, tail{pt, e, {{SimplicialSet::nd(0, 0)}}};
  auto glued = colimit_of_monos({pt, e, e}, {{0, 1, head}, {0, 2, tail}});
  auto big = delta_shriek(glued.object, 2);
  auto de = delta_shriek(e, 2), dp = delta_shriek(pt, 2);
  auto mc = colimit_of_monos(std::vector<SMSet>{dp, de, de},
                             {{0, 1, delta_shriek_map(head, dp, de)}, {0, 2, delta_shriek_map(tail, dp, de)}});
  MultiSimplicialMap cmp{mc.object, big, {}};
  std::vector<MultiSimplicialMap> legs;
  std::vector<SMSet> objs{dp, de, de};
  for (int o = 0; o < 3; ++o) legs.push_back(delta_shriek_map(glued.legs[o], objs[o], big));
  for (auto& p : mc.object->degrees())
    for (int c = 0; c < mc.object->count(p); ++c) {
      const Key& k = mc.object->key(p, c);
      cmp.image[p].push_back(legs[k[0]].image.at(p)[k[1]]);
    }
  std::string why;
  CHECK_MESSAGE(is_isomorphism(cmp, &why), why);
}

TEST_CASE("multisimplicial Eilenberg-Zilber") {
  for (MultiIndex m : {MultiIndex{1, 1}, MultiIndex{2, 1}, MultiIndex{1, 1, 1}}) {
    auto c = multi_ez_census(m, 1);
    CHECK_MESSAGE(c.agree == c.multisimplices, c.first_failure);
    CHECK(c.multisimplices > 0);
  }
  auto f = multi_ez_fuzz(delta_shriek(boundary(2), 2), 300, 1);
  CHECK_MESSAGE(f.agree == f.multisimplices, f.first_failure);
  auto g = multi_ez_fuzz(multi_simplex({2, 1}), 300, 2);
  CHECK_MESSAGE(g.agree == g.multisimplices, g.first_failure);
}
