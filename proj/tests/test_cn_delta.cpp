#include "doctest.h"

#include "nfold/chains.hpp"
#include "nfold/cn_delta.hpp"
#include "nfold/homology.hpp"
#include "nfold/nfold_nerve.hpp"
#include "nfold/subdivide.hpp"

using namespace nfold;

namespace {

FinPoset chain_poset(int m) {
  std::vector<std::string> labels;
  for (int i = 0; i <= m; ++i) labels.push_back(std::to_string(i));
  return FinPoset::from_relation(m + 1, [](int a, int b) { return a <= b; }, labels);
}

FinPoset sd_poset(SSet x) { return poset_of_nondegenerate(*subdivide(x).sd); }

void same_counts(const NFoldCategory& a, const NFoldCategory& b) {
  REQUIRE(a.n() == b.n());
  for (unsigned e = 0; e <= a.full(); ++e) CHECK(a.count(e) == b.count(e));
}

}  // namespace

TEST_CASE("chains and the chain condition") {
  auto t = sd_poset(std_simplex(1));
  CHECK(t.size() == 5);
  CHECK(maximal_chains(t).size() == 4);
  auto c = chain_condition(t, 1, true);
  CHECK(c.ok());
  CHECK(c.walks == c.walks_found);
  auto anti = FinPoset::from_relation(2, [](int a, int b) { return a == b; }, {"a", "b"});
  CHECK_FALSE(chain_condition(anti, 1).ok());
  auto t2 = sd_poset(std_simplex(2));
  CHECK(t2.size() == 25);
  auto c2 = chain_condition(t2, 2, true);
  CHECK(c2.ok());
  CHECK(c2.walks == c2.walks_found);
  CHECK_FALSE(chain_condition(t2, 1).extends);
}

TEST_CASE("union formula on a single chain") {
  for (int m = 0; m <= 2; ++m) {
    auto t = chain_poset(m);
    auto u = cn_delta_union(t, m, 2);
    auto full = external_product({t.to_category(), t.to_category()});
    same_counts(*u.cat, *full);
    std::string why;
    CHECK_MESSAGE(u.cat->check(&why), why);
    auto one = cn_delta_union(t, m, 1);
    CHECK(one.cat->count(0) == m + 1);
    CHECK(one.cat->count(1) == (m + 1) * (m + 2) / 2);
  }
}

TEST_CASE("union formula agrees with comparability") {
  std::string why;
  CHECK_MESSAGE(union_is_comparability(sd_poset(std_simplex(1)), 1, 2, &why), why);
  CHECK_MESSAGE(union_is_comparability(sd_poset(std_simplex(2)), 2, 2, &why), why);
  CHECK_MESSAGE(union_is_comparability(sd_poset(boundary(2)), 1, 2, &why), why);
  CHECK_THROWS_AS(cn_delta_union(sd_poset(std_simplex(2)), 1, 2), PreconditionError);
}

TEST_CASE("saturated presentation matches the union formula on nerves of posets") {
  struct Case {
    FinPoset t;
    int level;
  };
  std::vector<Case> cases{{chain_poset(2), 2}, {sd_poset(std_simplex(1)), 1}, {sd_poset(boundary(2)), 1}};
  for (auto& c : cases)
    for (int n = 1; n <= 2; ++n) {
      auto u = cn_delta_union(c.t, c.level, n);
      auto s = cn_delta_saturated(c.t.nerve(), n);
      same_counts(*s.cn.cat, *u.cat);
      auto f = s.sat.extend(u.cat, [&](unsigned eps, int node) {
        if (s.sat.nodes[eps][node].kind != Derivation::Gen) return -1;
        const Key& k = s.generator_key[eps][node];
        std::vector<int> lo(k.begin() + 2, k.begin() + 2 + n), hi(k.begin() + 2 + n, k.end());
        return u.cell(k[0], k[1], eps, lo, hi);
      });
      REQUIRE(f.has_value());
      for (unsigned e = 0; e <= u.cat->full(); ++e) {
        std::vector<int> m = f->map[e];
        std::sort(m.begin(), m.end());
        CHECK(std::unique(m.begin(), m.end()) == m.end());
      }
    }
}

TEST_CASE("unit into the diagonal nerve of c^n delta_!") {
  auto t = sd_poset(std_simplex(1));
  auto u = cn_delta_union(t, 1, 2);
  auto nu = nfold_nerve(u.cat);
  auto du = diagonal(nu);
  auto unit = cn_unit(u, nu, du);
  std::string why;
  CHECK_MESSAGE(unit.check(&why), why);
  CHECK(homology_equivalence(unit).ok);

  auto s = cn_delta_saturated(boundary(2), 2);
  CHECK_MESSAGE(s.cn.cat->check(&why), why);
  auto ns = nfold_nerve(s.cn.cat);
  auto ds = diagonal(ns);
  auto unit2 = cn_unit(s.cn, ns, ds);
  CHECK_MESSAGE(unit2.check(&why), why);
  auto eq = homology_equivalence(unit2);
  CHECK_MESSAGE(eq.ok, eq.detail);
}

TEST_CASE("adjunction oracle") {
  auto sq = unit_cube(2);
  auto a = adjunction_oracle(cn_delta_union(chain_poset(1), 1, 2), sq);
  CHECK(a.ok());
  CHECK(a.functors == 9);
  auto b = adjunction_oracle(cn_delta_union(sd_poset(std_simplex(1)), 1, 2), sq);
  CHECK(b.ok());
  auto c = adjunction_oracle(cn_delta_saturated(boundary(2), 2).cn, sq);
  CHECK(c.ok());
  auto pt = external_product({chain_poset(0).to_category(), chain_poset(0).to_category()});
  auto d = adjunction_oracle(cn_delta_union(sd_poset(std_simplex(1)), 1, 2), pt);
  CHECK(d.functors == 1);
  CHECK(d.ok());
}
