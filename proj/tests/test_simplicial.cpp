#include "doctest.h"

#include "nfold/homology.hpp"
#include "nfold/simplicial_map.hpp"
#include "nfold/simplicial_set.hpp"

using namespace nfold;

TEST_CASE("standard complexes have the expected cells") {
  CHECK(std_simplex(2)->counts() == std::vector<int>{3, 3, 1});
  CHECK(horn(2, 1)->counts() == std::vector<int>{3, 2});
  CHECK(boundary(1)->counts() == std::vector<int>{2});
  CHECK(boundary(0)->dim() == -1);
  auto h = horn(2, 1);
  // the kept edges are {0,1} and {1,2}
  CHECK(h->find(1, {0, 1}));
  CHECK(h->find(1, {1, 2}));
  CHECK_FALSE(h->find(1, {0, 2}));
}

TEST_CASE("EZ normal forms of degenerate simplices") {
  auto d1 = std_simplex(1);
  auto s = d1->locate(2, {0, 0, 1});
  CHECK(s.index == 0);
  CHECK(s.eta == OrdinalMap::codegeneracy(1, 0));
  auto v = d1->locate(2, {1, 1, 1});
  CHECK(v.nd_degree() == 0);
  CHECK(v.eta == OrdinalMap::constant(2, 0, 0));
  auto y = d1->locate(1, {0, 1});
  CHECK(y.nondegenerate());
}

TEST_CASE("homology of spheres and simplices") {
  auto h = homology(*boundary(3));
  CHECK(h.betti == std::vector<int>{1, 0, 1});
  CHECK(h.euler_consistent());
  for (int m = 0; m <= 4; ++m) CHECK(homology(*std_simplex(m)).trivial());
  CHECK(homology(*boundary(2)).betti == std::vector<int>{1, 1});
  CHECK(homology(*horn(3, 1)).trivial());
}

TEST_CASE("simplicial identities hold on standard complexes") {
  for (int m = 0; m <= 4; ++m) {
    CHECK(std_simplex(m)->check_identities());
    for (int k = 0; k <= m; ++k) CHECK(horn(m, k)->check_identities());
  }
}

TEST_CASE("horn inclusion is a homology equivalence") {
  auto h = horn(2, 0);
  auto d = std_simplex(2);
  auto f = map_from_keys(h, d, [](int, const Key& k) { return k; });
  CHECK(f.check());
  auto rep = homology_equivalence(f);
  CHECK(rep.ok);
  auto b = boundary(2);
  auto g = map_from_keys(b, d, [](int, const Key& k) { return k; });
  CHECK_FALSE(homology_equivalence(g).ok);
}

TEST_CASE("gluing two edges along a vertex") {
  auto e = std_simplex(1);
  auto pt = std_simplex(0);
  auto to_end = map_from_keys(pt, e, [](int, const Key&) { return Key{1}; });
  auto to_start = map_from_keys(pt, e, [](int, const Key&) { return Key{0}; });
  auto c = colimit_of_monos({pt, e, e}, {{0, 1, to_end}, {0, 2, to_start}});
  CHECK(c.object->counts() == std::vector<int>{3, 2});
  CHECK(homology(*c.object).trivial());
  for (auto& leg : c.legs) CHECK(leg.check());
}
