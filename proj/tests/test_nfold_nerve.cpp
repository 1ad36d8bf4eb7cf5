#include "doctest.h"

#include "nfold/homology.hpp"
#include "nfold/nfold_nerve.hpp"
#include "nfold/ordinal.hpp"

using namespace nfold;

namespace {

Cat ordinal_cat(int m) {
  std::vector<std::string> labels;
  for (int i = 0; i <= m; ++i) labels.push_back(std::to_string(i));
  return FinPoset::from_relation(m + 1, [](int a, int b) { return a <= b; }, labels).to_category();
}

}  // namespace

TEST_CASE("n-fold nerve of an external product of ordinals") {
  for (auto dims : {MultiIndex{1, 1}, MultiIndex{2, 1}, MultiIndex{1, 2}, MultiIndex{2, 2}}) {
    std::vector<Cat> cats{ordinal_cat(dims[0]), ordinal_cat(dims[1])};
    auto d = external_product(cats);
    auto y = nfold_nerve(d);
    CHECK(y->extent() == dims);
    std::string why;
    CHECK_MESSAGE(y->check_identities(&why), why);
    auto target = multi_simplex(dims);
    auto f = multi_map_from_keys(y, target, [&](const MultiIndex& p, const Key& k) {
      const unsigned eps = shape_of(p);
      const MultiIndex g = grid_dims(p);
      std::vector<Simplex> parts;
      for (int a = 0; a < 2; ++a) {
        // walk along axis a from the origin
        std::vector<int> verts;
        for (int j = 0; j < g[a]; ++j) {
          int idx = a == 0 ? j * g[1] : j;
          const Key& cube = d->key(eps, k[idx]);
          if (p[a] == 0) {
            verts.push_back(cube[a]);
          } else {
            verts.push_back(cats[a]->src(cube[a]));
            if (j + 1 == g[a]) verts.push_back(cats[a]->tgt(cube[a]));
          }
        }
        parts.push_back(std_simplex(dims[a])->locate(p[a], verts));
      }
      return external_key(parts);
    });
    CHECK_MESSAGE(is_isomorphism(f, &why), why);
  }
}

TEST_CASE("diagonal of the nerve of the unit square") {
  auto y = nfold_nerve(unit_cube(2));
  CHECK(diagonal(y)->counts() == std::vector<int>{4, 5, 2});
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      CHECK(composable_arrays(unit_cube(2), {p, q}).size() == static_cast<std::size_t>((p + 2) * (q + 2)));
}

TEST_CASE("1-fold nerve agrees with the category nerve") {
  auto c = ordinal_cat(3);
  auto y = nfold_nerve(from_category(*c));
  auto x = nerve(c);
  for (int p = 0; p <= 3; ++p) CHECK(y->count({p}) == x->count(p));
  CHECK(diagonal(y)->counts() == x->counts());
}

TEST_CASE("n-fold nerve caps") {
  auto d = external_product({ordinal_cat(2), ordinal_cat(1)});
  CHECK(longest_chains(*d) == MultiIndex{2, 1});
  CHECK_THROWS_AS(nfold_nerve(d, MultiIndex{1, 1}), DimensionOverflow);
  CHECK(nfold_nerve(d, MultiIndex{3, 2})->extent() == MultiIndex{2, 1});
}

TEST_CASE("n-fold nerve on functors") {
  auto a = ordinal_cat(1), b = ordinal_cat(2);
  auto da = external_product({a, a}), db = external_product({b, b});
  auto inc = poset_functor(a, b, {0, 2});
  auto f = external_functor({inc, inc}, da, db);
  std::string why;
  CHECK_MESSAGE(f.check(&why), why);
  auto ya = nfold_nerve(da), yb = nfold_nerve(db);
  auto nf = nfold_nerve_map(f, ya, yb);
  CHECK_MESSAGE(nf.check(&why), why);
  auto id = nfold_nerve_map(identity_nfunctor(db), yb, yb);
  CHECK(is_isomorphism(id));
}
