#include "doctest.h"

#include <set>

#include "nfold/hom_enum.hpp"
#include "nfold/restriction.hpp"
#include "nfold/saturation.hpp"

using namespace nfold;

namespace {

Cat ordinal_cat(int m) {
  std::vector<std::string> labels;
  for (int i = 0; i <= m; ++i) labels.push_back(std::to_string(i));
  return FinPoset::from_relation(m + 1, [](int a, int b) { return a <= b; }, labels).to_category();
}

}  // namespace

TEST_CASE("hom-set enumeration") {
  CHECK(enumerate_nfunctors(from_category(*ordinal_cat(1)), from_category(*ordinal_cat(2))) == 6);
  auto sq = external_product({ordinal_cat(1), ordinal_cat(1)});
  auto big = external_product({ordinal_cat(2), ordinal_cat(1)});
  CHECK(enumerate_nfunctors(sq, big) == 18);
  CHECK(enumerate_nfunctors(big, sq) == 4 * 3);
  CHECK(enumerate_simplicial_maps(std_simplex(1), std_simplex(2)) == 6);
  CHECK(enumerate_simplicial_maps(std_simplex(1), boundary(2)) == 6);
  CHECK(enumerate_simplicial_maps(boundary(2), std_simplex(1)) == 4);
  CHECK(enumerate_simplicial_maps(std_simplex(2), boundary(2)) == 9);  // non-surjective monotone [2] -> [2]
  std::string why;
  enumerate_nfunctors(sq, big, [&](const NFoldFunctor& f) {
    CHECK(f.check(&why));
    return true;
  });
}

TEST_CASE("forgetful functor keeps selected directions") {
  auto d = external_product({ordinal_cat(2), ordinal_cat(1)});
  auto all = forgetful_U(*d, 3u);
  CHECK(all->total_cells() == d->total_cells());
  auto h = forgetful_U(*d, 1u);
  CHECK(h->n() == 1);
  CHECK(h->count(0) == 6);
  CHECK(h->count(1) == 12);
  std::string why;
  CHECK_MESSAGE(h->check(&why), why);
  auto v = forgetful_U(*d, 2u);
  CHECK(v->count(1) == 9);
}

TEST_CASE("right adjoint of the forgetful functor") {
  std::vector<NCat> ds{unit_cube(2), external_product({ordinal_cat(2), ordinal_cat(1)}),
                       external_product({ordinal_cat(1), ordinal_cat(0)})};
  std::vector<NCat> es{from_category(*ordinal_cat(1)), from_category(*ordinal_cat(2))};
  for (unsigned k : {1u, 2u})
    for (auto& d : ds)
      for (auto& e : es) {
        auto re = right_adjoint_R(*e, k, 2);
        std::string why;
        REQUIRE_MESSAGE(re->check(&why), why);
        auto ud = forgetful_U(*d, k);
        std::set<std::vector<std::vector<int>>> images;
        long long left = enumerate_nfunctors(ud, e, [&](const NFoldFunctor& g) {
          auto f = adjunct_R(g, k, d, re);
          CHECK(f.check());
          images.insert(f.map);
          return true;
        });
        long long right = enumerate_nfunctors(d, re);
        CHECK(left == right);
        CHECK(static_cast<long long>(images.size()) == left);
      }
}

TEST_CASE("forgetful functor preserves a pushout") {
  // [1]⊠[1] glued to itself along the edge {1}⊠[1] and {0}⊠[1]
  auto one = ordinal_cat(1), zero = ordinal_cat(0);
  auto sq = external_product({one, one});
  auto edge = external_product({zero, one});
  auto f = external_functor({poset_functor(zero, one, {1}), identity_functor(one)}, edge, sq);
  auto g = external_functor({poset_functor(zero, one, {0}), identity_functor(one)}, edge, sq);
  auto po = nfold_pushout(f, g);
  for (unsigned k : {1u, 2u}) {
    auto up = forgetful_U(*po.P, k);
    auto us = forgetful_U(*edge, k), uq = forgetful_U(*sq, k);
    auto cs = to_category(*us), cq = to_category(*uq);
    auto cp = pushout_cat(to_functor(forgetful_U(f, k, us, uq), cs, cq), to_functor(forgetful_U(g, k, us, uq), cs, cq));
    auto iso = find_isomorphism(to_category(*up), cp.P);
    CHECK(iso.has_value());
  }
}
