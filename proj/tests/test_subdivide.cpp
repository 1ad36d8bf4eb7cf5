#include "doctest.h"

#include "nfold/ex.hpp"
#include "nfold/homology.hpp"
#include "nfold/subdivide.hpp"

using namespace nfold;

TEST_CASE("subdivision counts") {
  CHECK(subdivide(std_simplex(1)).sd->counts() == std::vector<int>{3, 2});
  auto sd2 = subdivide(std_simplex(2));
  CHECK(sd2.via_poset);
  CHECK(sd2.sd->counts() == std::vector<int>{7, 12, 6});
  CHECK(subdivide(sd2.sd).sd->count(0) == 25);
  auto p = poset_of_nondegenerate(*subdivide(std_simplex(1)).sd);
  CHECK(p.size() == 5);
  CHECK(poset_of_nondegenerate(*boundary(2)).size() == 6);
  for (int m = 1; m <= 4; ++m) {
    long long fact = 1;
    for (int i = 2; i <= m + 1; ++i) fact *= i;
    CHECK(subdivide(std_simplex(m)).sd->count(m) == fact);
  }
}

TEST_CASE("colimit path agrees with poset path") {
  std::string why;
  for (int m = 0; m <= 3; ++m) {
    CHECK_MESSAGE(subdivision_paths_agree(std_simplex(m), &why), why);
    CHECK(subdivision_paths_agree(boundary(m), &why));
  }
  CHECK(subdivision_paths_agree(horn(3, 1), &why));
  CHECK(subdivision_paths_agree(subdivide(std_simplex(2)).sd, &why));
}

TEST_CASE("colimit path on a non-classical circle") {
  // one vertex, one edge
  SimplicialSet::Builder b;
  b.add(0, {0}, "v");
  b.add(1, {0}, "e");
  b.set_faces(1, 0, {SimplicialSet::nd(0, 0), SimplicialSet::nd(0, 0)});
  auto circle = b.build();
  CHECK_FALSE(is_classical_complex(*circle));
  auto sd = subdivide(circle);
  CHECK_FALSE(sd.via_poset);
  CHECK(sd.sd->counts() == std::vector<int>{2, 2});
  CHECK(homology(*sd.sd).betti == std::vector<int>{1, 1});
  CHECK_THROWS_AS(poset_of_nondegenerate(*circle), UnsupportedInput);
}

TEST_CASE("Ex of small complexes") {
  auto e0 = ex(std_simplex(0), 3);
  CHECK(e0->counts() == std::vector<int>{1});
  auto e1 = ex(std_simplex(1), 2);
  CHECK(simplices_in_degree(*e1, 1) == 5);
  CHECK(e1->count(0) == 2);
  auto b2 = boundary(2);
  auto eb = ex(b2, 2);
  auto u = unit_to_ex(b2, eb);
  CHECK(u.check());
  auto rep = homology_equivalence(u);
  CHECK(rep.ok);
  CHECK(homology(*eb).betti == std::vector<int>{1, 1});
}

TEST_CASE("Sd-Ex adjunction counts on poset nerves") {
  auto P = subsets_poset(1);
  auto N = P.nerve();
  auto e = ex(N, 2);
  for (int p = 0; p <= 2; ++p) CHECK(simplices_in_degree(*e, p) == monotone_maps_from_subsets(p, P.le));
}
