#include "doctest.h"

#include "nfold/saturation.hpp"
#include "nfold/subdivide.hpp"

using namespace nfold;

namespace {
Cat ordinal_cat(int m) {
  return FinPoset::from_relation(m + 1, [](int a, int b) { return a <= b; }, {}).to_category();
}
}  // namespace

TEST_CASE("categorify simplices and boundaries") {
  for (int m = 0; m <= 3; ++m) {
    auto c = categorify(*std_simplex(m));
    CHECK(c->check());
    CHECK(find_isomorphism(c, ordinal_cat(m)).has_value());
  }
  auto b3 = categorify(*boundary(3));
  CHECK(b3->check());
  CHECK(find_isomorphism(b3, ordinal_cat(3)).has_value());
  // the boundary of a triangle has no 2-simplex: 0->2 and 1->2 o 0->1 stay distinct
  auto b2 = categorify(*boundary(2));
  CHECK(b2->num_morphisms() == 3 + 4);
}

TEST_CASE("categorify the double subdivision of an interval") {
  auto sd = subdivide(std_simplex(1)).sd;
  auto sd2 = subdivide(sd).sd;
  auto c = categorify(*sd2);
  auto p = poset_of_nondegenerate(*sd).to_category();
  CHECK(c->num_objects() == 5);
  CHECK(c->num_morphisms() == 5 + 4);
  CHECK(find_isomorphism(c, p).has_value());
}

TEST_CASE("categorify a cycle trips the guard") {
  // a directed loop: one vertex, one non-degenerate edge
  SimplicialSet::Builder b;
  b.add(0, {0}, "v");
  b.add(1, {1}, "e");
  b.set_faces(1, 0, {SimplicialSet::nd(0, 0), SimplicialSet::nd(0, 0)});
  auto loop = b.build();
  CHECK_THROWS_AS(categorify(*loop, 16), GuardTripped);
}

TEST_CASE("pushout of two intervals along an endpoint") {
  auto pt = ordinal_cat(0);
  auto one = ordinal_cat(1);
  Functor to_end{pt, one, {1}, {one->identity(1)}};
  Functor to_start{pt, one, {0}, {one->identity(0)}};
  CHECK(to_end.check());
  auto r = pushout_cat(to_end, to_start);
  CHECK(r.P->check());
  CHECK(r.P->num_objects() == 3);
  CHECK(r.P->num_morphisms() == 3 + 3);
  CHECK(r.free_morphisms.size() == 1);
  CHECK(find_isomorphism(r.P, ordinal_cat(2)).has_value());
  CHECK(r.from_q.check());
  CHECK(r.from_r.check());
}

TEST_CASE("pushout along identities is the identity") {
  auto q = ordinal_cat(2);
  auto id = identity_functor(q);
  auto r = pushout_cat(id, id);
  CHECK(find_isomorphism(r.P, q).has_value());
  CHECK(r.free_morphisms.empty());
}

TEST_CASE("non-injective legs are rejected") {
  auto two = ordinal_cat(1);
  auto pt = ordinal_cat(0);
  Functor collapse{two, pt, {0, 0}, {0, 0, 0}};
  CHECK(collapse.check());
  CHECK_THROWS_AS(pushout_cat(identity_functor(two), collapse), UnsupportedInput);
}

TEST_CASE("double category pushout and its universal property") {
  // [1]x[1] glued to [1]x[1] along an edge in direction 1
  auto pt = ordinal_cat(0), one = ordinal_cat(1), two = ordinal_cat(2);
  auto sq = unit_cube(2);
  auto edge = external_product({pt, one});
  auto expect = external_product({two, one});
  Functor at0{pt, one, {0}, {one->identity(0)}}, at1{pt, one, {1}, {one->identity(1)}};
  auto id1 = identity_functor(one);
  auto right = external_functor({at1, id1}, edge, sq);
  auto left = external_functor({at0, id1}, edge, sq);
  REQUIRE(right.check());
  REQUIRE(left.check());
  auto po = nfold_pushout(right, left);
  std::string why;
  CHECK_MESSAGE(po.P->check(&why), why);
  for (unsigned eps = 0; eps < 4; ++eps) CHECK(po.P->count(eps) == expect->count(eps));
  CHECK(po.from_q.check());
  CHECK(po.from_r.check());
  // universal property against [2]x[1]
  auto f = external_functor({poset_functor(one, two, {0, 1}), id1}, sq, expect);
  auto g = external_functor({poset_functor(one, two, {1, 2}), id1}, sq, expect);
  REQUIRE(f.check());
  REQUIRE(g.check());
  auto h = po.induced(f, g);
  REQUIRE(h.has_value());
  CHECK(h->check());
  for (unsigned eps = 0; eps < 4; ++eps) {
    std::vector<char> hit(expect->count(eps), 0);
    for (int v : h->map[eps]) hit[v] = 1;
    for (char c : hit) CHECK(c);
  }
  CHECK_FALSE(po.induced(f, f).has_value());
  CHECK(po.free_cells[1].size() == 2);  // horizontal composites across the seam
  CHECK(po.free_cells[3].size() == 3);
}
