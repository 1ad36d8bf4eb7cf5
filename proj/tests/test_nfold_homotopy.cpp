#include "doctest.h"

#include "nfold/homology.hpp"
#include "nfold/nfold_homotopy.hpp"
#include "nfold/nfold_nerve.hpp"
#include "nfold/product.hpp"

using namespace nfold;

namespace {

Cat ordinal(int m) {
  std::vector<std::string> labels;
  for (int i = 0; i <= m; ++i) labels.push_back(std::to_string(i));
  return FinPoset::from_relation(m + 1, [](int a, int b) { return a <= b; }, labels).to_category();
}

// const_0 => id on [m]
NatTransf to_identity(Cat c) {
  Functor zero = poset_functor(c, c, std::vector<int>(c->num_objects(), 0));
  NatTransf t{zero, identity_functor(c), {}};
  for (int a = 0; a < c->num_objects(); ++a) t.component.push_back(poset_arrow(*c, 0, a));
  return t;
}

NatTransf identity_transf(Cat c) {
  NatTransf t{identity_functor(c), identity_functor(c), {}};
  for (int a = 0; a < c->num_objects(); ++a) t.component.push_back(c->identity(a));
  return t;
}

}  // namespace

TEST_CASE("identity transformation gives the constant homotopy") {
  auto c = ordinal(1);
  auto d = external_product({c, c});
  auto t = external_transf({identity_transf(c), identity_transf(c)}, d, d);
  std::string why;
  CHECK_MESSAGE(t.check(&why), why);
  auto h = transf_to_homotopy(t);
  CHECK_MESSAGE(h.ok, h.detail);
  CHECK(h.end0 == h.end1);
  CHECK(h.end0 == identity_map(h.dom_diag));
}

TEST_CASE("external product of transformations contracts [m] x [m]") {
  for (int m = 1; m <= 2; ++m) {
    auto c = ordinal(m);
    auto d = external_product({c, c});
    auto t = external_transf({to_identity(c), to_identity(c)}, d, d);
    std::string why;
    CHECK_MESSAGE(t.check(&why), why);
    auto h = transf_to_homotopy(t);
    CHECK_MESSAGE(h.ok, h.detail);
    CHECK(h.end1 == identity_map(h.dom_diag));
    // the start is constant at the corner (0, 0)
    for (int q = 0; q <= h.dom_diag->dim(); ++q)
      for (const Simplex& s : h.end0.image[q]) CHECK(s.nd_degree() == 0);
  }
}

TEST_CASE("mixed transformation in a filtered external product") {
  auto c = ordinal(1);
  auto d = external_product({c, c});
  auto t = external_transf({identity_transf(c), to_identity(c)}, d, d);
  auto h = transf_to_homotopy(t);
  CHECK_MESSAGE(h.ok, h.detail);
}

TEST_CASE("diagonal nerve of an external product is the product of nerves") {
  for (auto [m1, m2] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    std::vector<Cat> cs{ordinal(m1), ordinal(m2)};
    auto ext = external_product(cs);
    std::vector<SSet> nerves{nerve(cs[0]), nerve(cs[1])};
    auto prod = product(nerves);
    auto en = nfold_nerve(ext);
    auto dg = diagonal(en);
    auto f = product_to_diagonal(*ext, nerves, prod, en, dg);
    std::string why;
    CHECK_MESSAGE(f.check(&why), why);
    CHECK_MESSAGE(is_isomorphism(f, &why), why);
  }
}

TEST_CASE("diagonal nerve of [m]^{⊠n} is n·m skeletal") {
  for (int n = 1; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      std::vector<Cat> cs(n, ordinal(m));
      auto dg = diagonal(nfold_nerve(external_product(cs)));
      CHECK(dg->dim() == n * m);
      CHECK(homology(*dg).trivial());
    }
}
