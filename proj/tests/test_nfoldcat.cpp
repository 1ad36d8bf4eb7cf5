#include "doctest.h"

#include "nfold/nfoldcat.hpp"

using namespace nfold;

namespace {
Cat ordinal_cat(int m) {
  return FinPoset::from_relation(m + 1, [](int a, int b) { return a <= b; }, {}).to_category();
}
}  // namespace

TEST_CASE("unit square") {
  auto sq = unit_cube(2);
  CHECK(sq->count(0) == 4);
  CHECK(sq->count(1) == 6);  // direction 0: 3 arrows of [1] x 2 objects
  CHECK(sq->count(2) == 6);
  CHECK(sq->count(3) == 9);
  std::string why;
  CHECK_MESSAGE(sq->check(&why), why);
  int nontrivial = 0;
  for (int x = 0; x < sq->count(3); ++x)
    if (!sq->is_unit(3, 0, x) && !sq->is_unit(3, 1, x)) ++nontrivial;
  CHECK(nontrivial == 1);
}

TEST_CASE("external products pass the axioms") {
  std::string why;
  auto d = external_product({ordinal_cat(2), ordinal_cat(1)});
  CHECK_MESSAGE(d->check(&why), why);
  auto t = external_product({ordinal_cat(1), ordinal_cat(1), ordinal_cat(1)});
  CHECK_MESSAGE(t->check(&why), why);
  CHECK(t->count(7) == 27);
  auto term = external_product({ordinal_cat(2), ordinal_cat(0)});
  CHECK(term->check());
  for (int x = 0; x < term->count(2); ++x) CHECK(term->is_unit(2, 1, x));
  auto prod = cartesian_product(*d, *unit_cube(2));
  CHECK_MESSAGE(prod->check(&why), why);
  CHECK(prod->count(0) == d->count(0) * 4);
}

TEST_CASE("filtered external product must be closed") {
    auto near = [](const std::vector<int>& e) {
    return e[0] <= e[2] + 1 && e[2] <= e[0] + 1 && e[1] <= e[3] + 1 && e[3] <= e[1] + 1;
  };
  CHECK_THROWS(external_product({ordinal_cat(2), ordinal_cat(2)}, near));
  auto low = external_product({ordinal_cat(2), ordinal_cat(2)}, [](const std::vector<int>& e) {
    for (int v : e)
      if (v > 1) return false;
    return true;
  });
  CHECK(low->check());
  CHECK(low->count(3) == 9);
}

TEST_CASE("1-fold round trip") {
  auto c = ordinal_cat(3);
  auto d = from_category(*c);
  CHECK(d->check());
  auto back = to_category(*d);
  CHECK(back->check());
  CHECK(find_isomorphism(c, back).has_value());
  auto f = identity_nfunctor(d);
  CHECK(f.check());
  CHECK(f.then(f).map == f.map);
}

TEST_CASE("broken interchange is detected") {
  // Z/2 x Z/2 as a double category on one object with a twisted composition
  auto d = std::make_shared<NFoldCategory>(1);
  d->add(0, "*");
  d->add(1, "1");
  d->add(1, "g");
  d->set_src(1, 0, 0, 0);
  d->set_tgt(1, 0, 0, 0);
  d->set_src(1, 0, 1, 0);
  d->set_tgt(1, 0, 1, 0);
  d->set_unit(0, 0, 0, 0);
  d->set_compose(1, 0, 0, 0, 0);
  d->set_compose(1, 0, 0, 1, 1);
  d->set_compose(1, 0, 1, 0, 1);
  d->set_compose(1, 0, 1, 1, 1);  // not a group, still associative
  d->finalize();
  CHECK(d->check());
  d->set_compose(1, 0, 1, 1, 0);
  CHECK(d->check());  // Z/2
  d->set_compose(1, 0, 1, 0, 0);
  std::string why;
  CHECK_FALSE(d->check(&why));
  CHECK(why.find("unit law") != std::string::npos);
}
