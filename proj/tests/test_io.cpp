#include "doctest.h"

#include "nfold/cn_delta.hpp"
#include "nfold/homology.hpp"
#include "nfold/io.hpp"
#include "nfold/nfold_nerve.hpp"
#include "nfold/subdivide.hpp"

using namespace nfold;

TEST_CASE("categories and posets round trip") {
  FinPoset p = sd_delta_poset(2).poset;
  Json j = to_json(p);
  CHECK(j["covers"].size() == p.covers().size());
  FinPoset q = poset_from_json(j);
  CHECK(q.labels == p.labels);
  CHECK(q.le == p.le);
  CHECK(dump(to_json(q)) == dump(j));

  Cat c = p.to_category();
  Cat d = category_from_json(to_json(*c));
  CHECK(d->num_objects() == c->num_objects());
  CHECK(d->num_morphisms() == c->num_morphisms());
  CHECK(find_isomorphism(c, d).has_value());
  CHECK(dump(to_json(*d)) == dump(to_json(*c)));

  // an isomorphism: both composites are identities
  Json iso = Json::parse(R"({"kind": "category", "objects": ["a", "b"],
    "morphisms": [{"label": "f", "src": 0, "tgt": 1}, {"label": "g", "src": 1, "tgt": 0}],
    "compose": [[1, 0, -1], [0, 1, -2]]})");
  Cat i = category_from_json(iso);
  CHECK(i->comp(3, 2) == i->identity(0));
  CHECK(homology(*nerve(i, 4)).betti[0] == 1);
}

TEST_CASE("simplicial sets round trip through EZ pairs") {
  for (SSet x : {boundary(3), horn(3, 1), subdivide(std_simplex(2)).sd}) {
    Json j = to_json(*x);
    SSet y = simplicial_set_from_json(j);
    CHECK(y->counts() == x->counts());
    CHECK(homology(*y).betti == homology(*x).betti);
    CHECK(dump(to_json(*y)) == dump(j));
  }
  // a degenerate face: the circle with one vertex and one edge
  Json circle = Json::parse(R"({"kind": "simplicial_set", "nondeg": [["v"], ["e"]],
    "faces": [[[]], [[[0, 0, [0]], [0, 0, [0]]]]]})");
  auto h = homology(*simplicial_set_from_json(circle));
  CHECK(h.betti == std::vector<int>{1, 1});
  Json bad = circle;
  bad["faces"][1][0][0] = Json::array({0, 5, {0}});
  CHECK_THROWS_AS(simplicial_set_from_json(bad), UnsupportedInput);
  CHECK_THROWS_AS(simplicial_set_from_json(Json::parse(R"({"kind": "poset"})")), UnsupportedInput);
}

TEST_CASE("multisimplicial sets and n-fold categories round trip") {
  SMSet y = delta_shriek(boundary(2), 2);
  SMSet z = multisimplicial_set_from_json(to_json(*y));
  CHECK(z->total() == y->total());
  CHECK(homology(*diagonal(z, 3)).betti == homology(*diagonal(y, 3)).betti);

  NCat d = cn_delta_union(sd_delta_poset(1).poset, 1, 2).cat;
  NCat e = nfold_from_json(to_json(*d));
  for (unsigned eps = 0; eps <= d->full(); ++eps) CHECK(e->count(eps) == d->count(eps));
  CHECK(dump(to_json(*e)) == dump(to_json(*d)));
  Json broken = to_json(*d);
  broken["cubes"]["11"]["src"][0][0] = 999;
  CHECK_THROWS_AS(nfold_from_json(broken), UnsupportedInput);
}

TEST_CASE("DOT output") {
  SdPoset sd = sd_delta_poset(1);
  std::string s = poset_dot(sd.poset);
  CHECK(std::count(s.begin(), s.end(), '>') == static_cast<long>(sd.poset.covers().size()));
  std::string t = sd_dot(sd_delta_poset(2), 1);
  CHECK(t.find("class=\"out\", style=solid") != std::string::npos);
  CHECK(t.find("class=\"cen\", style=dotted") != std::string::npos);
  CHECK(t.find("class=\"comp\", style=dotted") != std::string::npos);
}

TEST_CASE("reports serialize without runtimes") {
  CheckReport r{"x", 2, 1, 0, "terminal", Status::Pass, "ok", {{"a", true, 1.5, ""}}, 2.0};
  Json j = to_json(r);
  CHECK(j["status"] == "pass");
  CHECK_FALSE(j.contains("seconds"));
  CHECK(to_json(r, true)["seconds"] == 2.0);
  Json all = to_json(std::vector<CheckReport>{r, r});
  CHECK(all["passed"] == 2);
}
