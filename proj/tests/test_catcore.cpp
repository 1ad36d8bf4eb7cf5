#include "doctest.h"

#include "nfold/catcore.hpp"
#include "nfold/homology.hpp"
#include "nfold/product.hpp"

using namespace nfold;

namespace {
FinPoset ordinal(int m) {
  return FinPoset::from_relation(m + 1, [](int a, int b) { return a <= b; }, {});
}
}  // namespace

TEST_CASE("nerve of ordinals is the standard simplex") {
  auto c = ordinal(1).to_category();
  CHECK(c->check());
  auto n = nerve(c);
  CHECK(n->counts() == std::vector<int>{2, 1});
  auto n3 = nerve(ordinal(3).to_category());
  CHECK(n3->counts() == std::vector<int>{4, 6, 4, 1});
  CHECK(n3->check_identities());
  CHECK(homology(*n3).trivial());
}

TEST_CASE("nerve cap and loops") {
  auto c = ordinal(3).to_category();
  CHECK_THROWS_AS(nerve(c, 2), DimensionOverflow);
  auto loop = std::make_shared<FinCat>();
  int a = loop->add_object("a");
  int e = loop->add_morphism(a, a, "e");
  loop->set_compose(e, e, loop->identity(a));  // Z/2
  CHECK(loop->check());
  CHECK_THROWS_AS(nerve(loop), DimensionOverflow);
  auto n = nerve(loop, 3);
  CHECK(n->truncated_at() == 3);
  CHECK(n->counts() == std::vector<int>{1, 1, 1, 1});
  CHECK(n->check_identities());
  auto h = homology(*n);
  // B(Z/2): H_1 = Z/2, H_2 = 0 below the truncation
  CHECK(h.betti[0] == 1);
  CHECK(h.torsion[1] == std::vector<std::string>{"2"});
}

TEST_CASE("product of intervals has two shuffles") {
  auto I = std_simplex(1);
  auto p = product({I, I});
  CHECK(p->counts() == std::vector<int>{4, 5, 2});
  CHECK(p->check_identities());
  CHECK(homology(*p).trivial());
  auto t = product({boundary(2), boundary(2)});
  CHECK(homology(*t).betti == std::vector<int>{1, 2, 1});
}

TEST_CASE("identity transformation gives the constant homotopy") {
  auto c = ordinal(2).to_category();
  auto F = identity_functor(c);
  NatTransf a{F, F, {}};
  for (int x = 0; x < c->num_objects(); ++x) a.component.push_back(c->identity(x));
  CHECK(a.check());
  auto h = nat_transf_to_homotopy(a);
  CHECK(h.ok);
}

TEST_CASE("transformation from a constant functor to the identity") {
  auto c = ordinal(2).to_category();
  auto F = poset_functor(c, c, {0, 0, 0});
  auto G = identity_functor(c);
  NatTransf a{F, G, {}};
  for (int x = 0; x < 3; ++x) a.component.push_back(poset_arrow(*c, 0, x));
  CHECK(a.check());
  auto h = nat_transf_to_homotopy(a);
  CHECK(h.ok);
  CHECK(h.h.check());
}

TEST_CASE("nerve pushout hypotheses") {
  auto q = ordinal(1).to_category();
  auto pt = ordinal(0).to_category();
  CHECK_FALSE(nerve_pushout_hypotheses(*q, {0}, *pt, {0}));
  CHECK(nerve_pushout_hypotheses(*q, {1}, *pt, {0}));
  CHECK(nerve_pushout_hypotheses(*q, {}, *pt, {}));
}

TEST_CASE("isomorphism search on posets") {
  auto a = ordinal(3).to_category();
  auto p = FinPoset::from_relation(4, [](int x, int y) { return x >= y; }, {"a", "b", "c", "d"});
  auto iso = find_isomorphism(a, p.to_category());
  REQUIRE(iso);
  CHECK(iso->obj == std::vector<int>{3, 2, 1, 0});
  CHECK_FALSE(find_isomorphism(a, ordinal(2).to_category()));
}
