#include "nfold/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "nfold/chains.hpp"
#include "nfold/cn_delta.hpp"
#include "nfold/ex.hpp"
#include "nfold/grothendieck.hpp"
#include "nfold/homology.hpp"
#include "nfold/multisimplicial.hpp"
#include "nfold/nfold_homotopy.hpp"
#include "nfold/nfold_nerve.hpp"
#include "nfold/saturation.hpp"
#include "nfold/subdivide.hpp"
#include "nfold/subdivision.hpp"

namespace nfold {

namespace {

constexpr unsigned bit(int i) { return 1u << i; }

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Cat chain_cat(int m) {
  std::vector<std::string> labels;
  for (int i = 0; i <= m; ++i) labels.push_back(std::to_string(i));
  return FinPoset::from_relation(m + 1, [](int a, int b) { return a <= b; }, labels).to_category();
}

// A subposet of P Sd Δ[m] and its c^n δ_! N by the union formula.
struct Piece {
  std::vector<int> elems;
  FinPoset poset;
  CnDelta cn;
};

Piece make_piece(const SdPoset& sd, const std::vector<int>& elems, int level, int n) {
  Piece p;
  p.elems = elems;
  p.poset = sd.poset.induced(elems);
  p.cn = cn_delta_union(p.poset, level, n);
  return p;
}

NFoldFunctor inclusion(const Piece& a, const Piece& b) {
  std::map<int, int> pos;
  for (std::size_t i = 0; i < b.elems.size(); ++i) pos[b.elems[i]] = static_cast<int>(i);
  std::vector<int> elem_map;
  for (int e : a.elems) elem_map.push_back(pos.at(e));
  return union_inclusion(a.cn, a.poset, b.cn, b.poset, elem_map);
}

std::vector<int> mask_and(const std::vector<char>& a, const std::vector<char>& b) {
  std::vector<int> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<char> image_mask(const NFoldFunctor& f, unsigned eps) {
  std::vector<char> hit(f.cod->count(eps), 0);
  for (int v : f.map[eps]) hit[v] = 1;
  return hit;
}

bool injective(const NFoldFunctor& f) {
  for (unsigned eps = 0; eps < f.map.size(); ++eps) {
    std::set<int> seen(f.map[eps].begin(), f.map[eps].end());
    if (seen.size() != f.map[eps].size()) return false;
  }
  return true;
}

bool bijective(const NFoldFunctor& f) {
  for (unsigned eps = 0; eps < f.map.size(); ++eps)
    if (f.dom->count(eps) != f.cod->count(eps)) return false;
  return injective(f);
}

bool same_map(const NFoldFunctor& a, const NFoldFunctor& b) { return a.map == b.map; }

std::vector<long long> cell_counts(const NFoldCategory& d) {
  std::vector<long long> c;
  for (unsigned eps = 0; eps <= d.full(); ++eps) c.push_back(d.count(eps));
  return c;
}

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// f x 1 : A x [1]^{⊠n} -> B x [1]^{⊠n} for cylinders built by cartesian_product.
NFoldFunctor cyl_map(const NFoldFunctor& f, NCat cdom, NCat ccod, const NFoldCategory& cube) {
  NFoldFunctor g{cdom, ccod, {}};
  for (unsigned eps = 0; eps < f.map.size(); ++eps) {
    const int c = cube.count(eps);
    g.map.emplace_back();
    for (int x : f.map[eps])
      for (int y = 0; y < c; ++y) g.map[eps].push_back(x * c + y);
  }
  return g;
}

struct FixtureLeg {
  NCat B;
  NFoldFunctor L;
};

FixtureLeg fixture_leg(Fixture b, const Piece& horn, int n) {
  FixtureLeg out;
  switch (b) {
    case Fixture::Terminal: {
      out.B = external_product(std::vector<Cat>(n, chain_cat(0)));
      out.L = NFoldFunctor{horn.cn.cat, out.B, {}};
      for (unsigned eps = 0; eps <= out.B->full(); ++eps) out.L.map.emplace_back(horn.cn.cat->count(eps), 0);
      break;
    }
    case Fixture::Interval: {
      // everything goes to the end 1, so 0 -> 1 composes freely with Out
      Cat one = chain_cat(1);
      std::vector<int> objmap(horn.elems.size(), 1);
      Functor phi = poset_functor(horn.poset.to_category(), one, objmap);
      out.B = external_product(std::vector<Cat>(n, one));
      out.L = external_functor(std::vector<Functor>(n, phi), horn.cn.cat, out.B);
      break;
    }
    case Fixture::Horn:
      out.B = horn.cn.cat;
      out.L = identity_nfunctor(out.B);
      break;
  }
  return out;
}

FreeCensus free_census(const NFoldPushout& q) {
  const NFoldCategory& Q = *q.P;
  const int n = Q.n();
  FreeCensus c;
  std::vector<std::vector<char>> in_b, in_out;
  for (unsigned eps = 0; eps <= Q.full(); ++eps) {
    in_b.push_back(image_mask(q.from_q, eps));
    in_out.push_back(image_mask(q.from_r, eps));
  }
  // b ∘^i x for b from B and x from Out starting where b ends
  auto then_out = [&](unsigned eps, int i, const std::vector<int>& firsts) {
    std::set<int> hit;
    for (int f : firsts)
      for (int g : Q.starting_at(eps, i, Q.tgt(eps, i, f)))
        if (in_out[eps][g]) hit.insert(Q.comp(eps, i, f, g));
    return hit;
  };
  auto from_b = [&](unsigned eps) {
    std::vector<int> v;
    for (int x = 0; x < Q.count(eps); ++x)
      if (in_b[eps][x]) v.push_back(x);
    return v;
  };
  for (int i = 0; i < n; ++i) {
    const unsigned eps = bit(i);
    auto hit = then_out(eps, i, from_b(eps));
    long long covered = 0;
    for (int f : q.free_cells[eps]) covered += hit.count(f);
    c.free_edges.push_back(static_cast<long long>(q.free_cells[eps].size()));
    c.covered_edges.push_back(covered);
  }
  if (n == 2) {
    const unsigned sq = 3;
    auto a = then_out(sq, 1, from_b(sq));
    auto b = then_out(sq, 0, from_b(sq));
    auto cc = then_out(sq, 0, std::vector<int>(a.begin(), a.end()));
    for (int f : q.free_cells[sq]) {
      const bool ia = a.count(f), ib = b.count(f), ic = cc.count(f);
      c.form_a += ia;
      c.form_b += ib;
      c.form_c += ic;
      c.covered_squares += (ia || ib || ic);
    }
    c.free_squares = static_cast<long long>(q.free_cells[sq].size());
  }
  return c;
}

}  // namespace

std::string status_str(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::SkippedBudget:
      return "skipped-budget";
  }
  return "fail";
}

const Assertion* CheckReport::find(const std::string& name) const {
  for (const auto& a : assertions)
    if (a.name == name) return &a;
  return nullptr;
}

std::string CheckReport::key() const {
  std::string s = id;
  if (n > 0) s += " n=" + std::to_string(n);
  if (m >= 0) s += " m=" + std::to_string(m);
  if (k >= 0) s += " k=" + std::to_string(k);
  if (!fixture.empty()) s += " " + fixture;
  return s;
}

double budget_seconds(double fallback) {
  if (const char* v = std::getenv("NFOLD_BUDGET_SECONDS")) {
    char* end = nullptr;
    double d = std::strtod(v, &end);
    if (end != v && d > 0) return d;
  }
  return fallback;
}

std::string fixture_str(Fixture b) {
  switch (b) {
    case Fixture::Terminal:
      return "terminal";
    case Fixture::Interval:
      return "interval";
    case Fixture::Horn:
      return "horn";
  }
  return "";
}

std::optional<Fixture> parse_fixture(const std::string& s) {
  for (Fixture b : {Fixture::Terminal, Fixture::Interval, Fixture::Horn})
    if (fixture_str(b) == s) return b;
  return std::nullopt;
}

bool FreeCensus::ok() const {
  if (free_edges != covered_edges) return false;
  return free_squares == covered_squares;
}

std::string FreeCensus::str() const {
  std::ostringstream o;
  o << "free edges [" << join(free_edges) << "] covered [" << join(covered_edges) << "]";
  if (free_squares || form_a || form_b || form_c)
    o << "; free squares " << free_squares << " covered " << covered_squares << " (a " << form_a << ", b " << form_b
      << ", c " << form_c << ")";
  return o.str();
}

PushoutAxiomDetail pushout_axiom(int n, int m, int k, Fixture b) {
  if (n < 1 || n > 2 || m < 1 || k < 0 || k > m) throw PreconditionError("pushout axiom needs n in {1,2}, 0 <= k <= m");
  PushoutAxiomDetail d;
  d.n = n;
  d.m = m;
  d.k = k;
  d.fixture = b;

  Stopwatch w;
  SdPoset sd = sd_delta_poset(m);
  Pieces pc = pieces(sd, k);
  Retraction ret = retraction(sd, k);
  std::vector<char> rmask(pc.comp.size());
  for (std::size_t x = 0; x < rmask.size(); ++x) rmask[x] = pc.comp[x] || pc.cen[x];
  std::vector<int> all(sd.poset.size());
  for (int x = 0; x < sd.poset.size(); ++x) all[x] = x;

  Piece T = make_piece(sd, all, m, n);
  Piece horn = make_piece(sd, ret.horn_elems, m - 1, n);
  Piece out = make_piece(sd, ret.out_elems, m, n);
  Piece R = make_piece(sd, members(rmask), m, n);
  Piece S = make_piece(sd, mask_and(pc.out, rmask), m - 1, n);

  FixtureLeg fx = fixture_leg(b, horn, n);
  NFoldFunctor horn_T = inclusion(horn, T), horn_out = inclusion(horn, out);
  NFoldFunctor out_T = inclusion(out, T), R_T = inclusion(R, T);
  NFoldFunctor S_out = inclusion(S, out), S_R = inclusion(S, R);

  NFoldPushout P = nfold_pushout(fx.L, horn_T);
  NFoldPushout Q = nfold_pushout(fx.L, horn_out);
  d.p_cells = cell_counts(*P.P);
  d.q_cells = cell_counts(*Q.P);

  // P = Q ∪ R
  std::string why;
  auto u = Q.induced(P.from_q, out_T.then(P.from_r));
  NFoldFunctor v = R_T.then(P.from_r);
  NFoldFunctor S_Q = S_out.then(Q.from_r);
  if (!u) {
    d.decomposition_detail = "Q -> P is not induced";
  } else if (!injective(*u) || !injective(v)) {
    d.decomposition_detail = "Q -> P or R -> P is not injective";
  } else {
    d.decomposition = true;
    NFoldFunctor s_p = S_R.then(v);
    for (unsigned eps = 0; eps <= P.P->full() && d.decomposition; ++eps) {
      auto iu = image_mask(*u, eps), iv = image_mask(v, eps), is = image_mask(s_p, eps);
      for (int x = 0; x < P.P->count(eps); ++x) {
        if (!iu[x] && !iv[x]) {
          d.decomposition = false;
          d.decomposition_detail = "cell " + P.P->label(eps, x) + " is in neither Q nor R";
          break;
        }
        if ((iu[x] && iv[x]) != static_cast<bool>(is[x])) {
          d.decomposition = false;
          d.decomposition_detail = "Q ∩ R differs from S at " + P.P->label(eps, x);
          break;
        }
      }
    }
    if (d.decomposition) {
      NFoldPushout glued = nfold_pushout(S_Q, S_R);
      auto w = glued.induced(*u, v);
      if (!w || !bijective(*w)) {
        d.decomposition = false;
        d.decomposition_detail = "Q ⊔_S R -> P is not an isomorphism";
      }
    }
    d.free_in_q = true;
    for (unsigned eps = 0; eps <= P.P->full(); ++eps) {
      auto iu = image_mask(*u, eps);
      std::size_t q_free = Q.free_cells[eps].size();
      for (int f : P.free_cells[eps]) d.free_in_q = d.free_in_q && iu[f];
      if (q_free != P.free_cells[eps].size()) d.free_in_q = false;
    }
  }

  d.t_pushouts = w.seconds();

  w = Stopwatch();
  SMSet NB = nfold_nerve(fx.B), NP = nfold_nerve(P.P), NQ = nfold_nerve(Q.P);
  if (u) {
    SMSet NS = nfold_nerve(S.cn.cat), NR = nfold_nerve(R.cn.cat);
    MultiColimit co = colimit_of_monos({NS, NQ, NR}, {{0, 1, nfold_nerve_map(S_Q, NS, NQ)},
                                                      {0, 2, nfold_nerve_map(S_R, NS, NR)}});
    std::vector<SMSet> nerves{NS, NQ, NR};
    std::vector<NFoldFunctor> legs{S_R.then(v), *u, v};
    MultiSimplicialMap cmp = multi_map_from_keys(co.object, NP, [&](const MultiIndex& p, const Key& key) {
      const unsigned eps = shape_of(p);
      Key arr = nerves[key[0]]->key(p, key[1]);
      for (int& c : arr) c = legs[key[0]].map[eps][c];
      return arr;
    });
    d.nerve_pushout = is_isomorphism(cmp, &d.nerve_detail);
  } else {
    d.nerve_detail = "no comparison map";
  }
  d.t_nerve = w.seconds();

  w = Stopwatch();
  SSet dB = diagonal(NB), dP = diagonal(NP), dQ = diagonal(NQ);
  d.j_equivalence = homology_equivalence(diagonal_nerve_map(P.from_q, NB, dB, NP, dP));
  d.i_equivalence = homology_equivalence(diagonal_nerve_map(Q.from_q, NB, dB, NQ, dQ));
  d.t_equivalence = w.seconds();

  w = Stopwatch();

  // r̄ from 1_B and L r, then ᾱ : i r̄ => 1_Q from the identity on B and L(α ⊠ ... ⊠ α)
  NFoldFunctor rn = external_functor(std::vector<Functor>(n, ret.r), out.cn.cat, horn.cn.cat);
  auto rbar = Q.induced(identity_nfunctor(fx.B), rn.then(fx.L));
  d.retraction = rbar && same_map(Q.from_q.then(*rbar), identity_nfunctor(fx.B));
  if (!rbar) {
    d.alpha_detail = "r̄ is not induced";
  } else {
    try {
      NCat cube = unit_cube(n);
      auto cyl = [&](const NCat& c) { return cartesian_product(*c, *cube); };
      NCat cB = cyl(fx.B), cH = cyl(horn.cn.cat), cO = cyl(out.cn.cat), cQ = cyl(Q.P);
      NFoldTransf ao = external_transf(std::vector<NatTransf>(n, ret.alpha), out.cn.cat, out.cn.cat);
      NFoldPushout qc = nfold_pushout(cyl_map(fx.L, cH, cB, *cube), cyl_map(horn_out, cH, cO, *cube));
      auto to_cq = qc.induced(cyl_map(Q.from_q, cB, cQ, *cube), cyl_map(Q.from_r, cO, cQ, *cube));
      if (!to_cq || !bijective(*to_cq)) throw Error("(B ⊔ Out) x cube is not Q x cube");
      NFoldFunctor on_b{cB, Q.P, {}};
      for (unsigned eps = 0; eps <= fx.B->full(); ++eps) {
        on_b.map.emplace_back();
        for (int x = 0; x < cB->count(eps); ++x) on_b.map[eps].push_back(Q.from_q.map[eps][x / cube->count(eps)]);
      }
      NFoldFunctor on_out = ao.alpha.then(Q.from_r);
      on_out.dom = cO;
      auto abar = qc.induced(on_b, on_out);
      if (!abar) throw Error("ᾱ is not induced");
      std::vector<std::vector<int>> amap;
      for (unsigned eps = 0; eps <= cQ->full(); ++eps) {
        amap.emplace_back(cQ->count(eps), -1);
        for (int x = 0; x < qc.P->count(eps); ++x) amap[eps][to_cq->map[eps][x]] = abar->map[eps][x];
      }
      NFoldTransf t = make_transf(Q.P, Q.P, std::move(amap));
      std::string tw;
      if (!t.check(&tw)) throw Error("ᾱ: " + tw);
      if (!same_map(t.end(0), rbar->then(Q.from_q))) throw Error("ᾱ does not start at i r̄");
      if (!same_map(t.end(1), identity_nfunctor(Q.P))) throw Error("ᾱ does not end at 1_Q");
      d.alpha = true;
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const Error& e) {
      d.alpha_detail = e.what();
      // any transformation i r̄ => 1_Q needs a top cube from i r̄(x) to x
      NFoldFunctor ir = rbar->then(Q.from_q);
      const unsigned top = Q.P->full();
      for (int x = 0; x < Q.P->count(0); ++x) {
        bool found = false;
        for (int c = 0; c < Q.P->count(top) && !found; ++c)
          found = Q.P->corner(top, c, 0) == ir.map[0][x] && Q.P->corner(top, c, top) == x;
        if (!found) {
          d.alpha_detail += "; no transformation exists: no cube of Q runs from " + Q.P->label(0, ir.map[0][x]) +
                            " to " + Q.P->label(0, x);
          break;
        }
      }
    }
  }

  d.census = free_census(Q);
  d.t_alpha = w.seconds();
  return d;
}

namespace {

class ReportBuilder {
 public:
  ReportBuilder(std::string id, int n, int m, int k, std::string fixture) {
    r_.id = std::move(id);
    r_.n = n;
    r_.m = m;
    r_.k = k;
    r_.fixture = std::move(fixture);
  }
  void add(std::string name, bool ok, std::string detail = {}, double seconds = 0) {
    r_.assertions.push_back(Assertion{std::move(name), ok, seconds, std::move(detail)});
  }
  // Runs fn, which returns (ok, detail), and times it.
  template <class F>
  void step(std::string name, F&& fn) {
    Stopwatch w;
    auto [ok, detail] = fn();
    add(std::move(name), ok, std::move(detail), w.seconds());
  }
  CheckReport done(std::string summary = {}) {
    r_.seconds = watch_.seconds();
    r_.status = Status::Pass;
    for (const auto& a : r_.assertions)
      if (!a.ok) {
        r_.status = Status::Fail;
        r_.witness = a.name + (a.detail.empty() ? "" : ": " + a.detail);
        break;
      }
    if (r_.status == Status::Pass) r_.witness = std::move(summary);
    return r_;
  }

 private:
  CheckReport r_;
  Stopwatch watch_;
};

std::string eq_detail(const EquivalenceReport& e) {
  return e.ok ? "H = " + e.dom.str() : (e.detail.empty() ? "dom " + e.dom.str() + " cod " + e.cod.str() : e.detail);
}

CheckReport pushout_report(const std::string& id, int n, int m, int k, Fixture b) {
  ReportBuilder rb(id, n, m, k, fixture_str(b));
  PushoutAxiomDetail d = pushout_axiom(n, m, k, b);
  // homology has to agree in every degree, not only below a truncation
  auto full = [](const EquivalenceReport& e) { return e.ok && e.iso_below < 0; };
  rb.add("decomposition", d.decomposition, d.decomposition_detail, d.t_pushouts);
  rb.add("free-in-q", d.free_in_q);
  rb.add("nerve-pushout", d.nerve_pushout, d.nerve_detail, d.t_nerve);
  rb.add("j-equivalence", full(d.j_equivalence), eq_detail(d.j_equivalence), d.t_equivalence);
  rb.add("i-equivalence", full(d.i_equivalence), eq_detail(d.i_equivalence));
  rb.add("retraction", d.retraction);
  rb.add("alpha", d.alpha, d.alpha_detail, d.t_alpha);
  rb.add("census", d.census.ok(), d.census.str());
  return rb.done("P cells [" + join(d.p_cells) + "]; " + d.census.str() + "; H(N P) = " + d.j_equivalence.cod.str());
}

}  // namespace

CheckReport pushout_axiom_cat(int m, int k, Fixture b) {
  if (m > 3) throw PreconditionError("pushout_axiom_cat needs m <= 3");
  return pushout_report("pushout-axiom-cat", 1, m, k, b);
}

CheckReport pushout_axiom_nfold(int n, int m, int k, Fixture b) {
  if (n != 2 || m > 2) throw PreconditionError("pushout_axiom_nfold needs n = 2, m <= 2");
  return pushout_report("pushout-axiom-nfold", n, m, k, b);
}

namespace {

// The poset whose nerve is X, when X is one (vertex order from the edges).
std::optional<FinPoset> nerve_poset(const SimplicialSet& X) {
  const int v = X.count(0);
  std::vector<std::vector<char>> le(v, std::vector<char>(v, 0));
  for (int a = 0; a < v; ++a) le[a][a] = 1;
  for (int e = 0; e < X.count(1); ++e) {
    int s = X.face(1, e, 1).index, t = X.face(1, e, 0).index;
    if (s == t) return std::nullopt;
    le[s][t] = 1;
  }
  std::vector<std::string> labels;
  for (int a = 0; a < v; ++a) labels.push_back(X.label(0, a));
  FinPoset t = FinPoset::from_relation(v, [&](int a, int b) { return le[a][b] != 0; }, labels);
  if (!t.check()) return std::nullopt;
  if (t.nerve()->counts() != X.counts()) return std::nullopt;
  return t;
}

}  // namespace

CheckReport unit_counit_suite(SSet X, const std::string& name, int n) {
  ReportBuilder rb("unit-counit", n, -1, -1, name);
  rb.step("cn-unit", [&] {
    CnDelta c;
    std::string how;
    if (auto t = nerve_poset(*X)) {
      c = cn_delta_union(*t, X->dim(), n);
      how = "union formula";
    } else {
      c = cn_delta_saturated(X, n).cn;
      how = "saturated presentation";
    }
    SMSet nc = nfold_nerve(c.cat);
    SSet dc = diagonal(nc);
    auto e = homology_equivalence(cn_unit(c, nc, dc));
    return std::make_pair(e.ok, how + "; " + eq_detail(e));
  });
  rb.step("ex-unit", [&] {
    SSet e = ex(X, 2);
    auto u = unit_to_ex(X, e);
    std::string why;
    if (!u.check(&why)) return std::make_pair(false, why);
    auto r = homology_equivalence(u);
    return std::make_pair(r.ok, eq_detail(r));
  });
  rb.step("zigzag", [&] {
    auto z = zigzag_suite(X, n, MultiIndex(n, 2), MultiIndex(n, 1));
    bool ok = z.ok() && z.rho.dom.same_groups(homology(*X));
    return std::make_pair(ok, z.detail.empty() ? "H = " + z.rho.dom.str() : z.detail);
  });
  return rb.done("H(X) = " + homology(*X).str());
}

CheckReport run_check(const GridEntry& e, double budget) {
  Stopwatch w;
  CheckReport r;
  try {
    BudgetScope scope(budget);
    r = e.run();
  } catch (const BudgetExceeded& ex) {
    r = CheckReport{};
    r.status = Status::SkippedBudget;
    r.witness = std::string("budget of ") + std::to_string(static_cast<int>(budget)) + " s exceeded";
  } catch (const std::exception& ex) {
    r = CheckReport{};
    r.status = Status::Fail;
    r.witness = std::string("exception: ") + ex.what();
  }
  r.id = e.id;
  r.n = e.n;
  r.m = e.m;
  r.k = e.k;
  r.fixture = e.fixture;
  r.seconds = w.seconds();
  return r;
}

std::vector<CheckReport> run_grid(const std::vector<GridEntry>& grid, int threads, double budget) {
  std::vector<CheckReport> out(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) out[i] = run_check(grid[i], budget);
  };
  threads = std::max(1, std::min<int>(threads, static_cast<int>(grid.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

namespace {

long long factorial(int m) { return m <= 1 ? 1 : m * factorial(m - 1); }

// The subposets of P Sd Δ[m] with the level their chain condition is stated at.
struct NamedPiece {
  std::string name;
  std::vector<int> elems;
  int level;
};

// k < 0 gives the pieces that do not depend on k.
std::vector<NamedPiece> corpus_pieces(const SdPoset& sd, int k) {
  const int m = sd.m;
  Pieces pc = pieces(sd, std::max(k, 0));
  if (k < 0) {
    std::vector<int> all(sd.poset.size());
    for (int x = 0; x < sd.poset.size(); ++x) all[x] = x;
    return {{"PSdΔ", all, m}, {"Cen", members(pc.cen), m}};
  }
  std::vector<char> r(pc.comp.size());
  for (std::size_t x = 0; x < r.size(); ++x) r[x] = pc.comp[x] || pc.cen[x];
  return {{"Out", members(pc.out), m},
          {"Comp", members(pc.comp), m},
          {"Comp∪Cen", members(r), m},
          {"PSdΛ", members(pc.horn), m - 1},
          {"Out∩(Comp∪Cen)", mask_and(pc.out, r), m - 1}};
}

CheckReport counting_check() {
  ReportBuilder rb("counting", 0, -1, -1, "");
  for (int m = 0; m <= 4; ++m) {
    const long long want = (1LL << (m + 1)) - 1;
    const long long got = subsets_poset(m).size();
    rb.add("|PΔ[" + std::to_string(m) + "]|", got == want, std::to_string(got) + " vs " + std::to_string(want));
    const long long top = subdivide(std_simplex(m)).sd->count(m);
    rb.add("SdΔ[" + std::to_string(m) + "]_" + std::to_string(m), top == factorial(m + 1),
           std::to_string(top) + " vs " + std::to_string(factorial(m + 1)));
  }
  rb.add("|PSdΔ[1]|", sd_delta_poset(1).poset.size() == 5);
  rb.add("|PSdΔ[2]|", sd_delta_poset(2).poset.size() == 25);
  return rb.done("all counts exact");
}

CheckReport decomposition_check(int m, int k) {
  ReportBuilder rb("decomposition", 0, m, k, "");
  auto r = check_decomposition(sd_delta_poset(m), k);
  rb.add("covers", r.covers, r.detail);
  rb.add("up-closed", r.up_closed, r.detail);
  rb.add("horn-down-closed", r.horn_down_closed, r.detail);
  rb.add("formulas", r.formulas_match, r.detail);
  return rb.done();
}

CheckReport gluing_check(int m) {
  ReportBuilder rb("gluing", 0, m, -1, "");
  SdPoset sd = sd_delta_poset(m);
  rb.step("gluing", [&] {
    auto g = check_gluing(sd);
    return std::make_pair(g.ok(), g.detail.empty() ? std::to_string(g.simplices) + " top simplices" : g.detail);
  });
  for (int k = 0; k <= m; ++k)
    rb.step("compgluing k=" + std::to_string(k), [&] {
      auto c = check_compgluing(sd, k);
      return std::make_pair(c.ok(), c.detail);
    });
  rb.step("central", [&] {
    auto c = check_central(sd);
    bool count = c.central == factorial(m + 1) * factorial(m);
    return std::make_pair(c.ok() && count, std::to_string(c.central) + " central simplices " + c.detail);
  });
  return rb.done();
}

CheckReport chain_condition_check(int m, int k) {
  ReportBuilder rb("chain-condition", 0, m, k, "");
  SdPoset sd = sd_delta_poset(m);
  for (const auto& p : corpus_pieces(sd, k)) {
    rb.step(p.name + "@" + std::to_string(p.level), [&] {
      auto c = chain_condition(sd.poset.induced(p.elems), p.level, true);
      bool ok = c.ok() && c.walks == c.walks_found;
      return std::make_pair(ok, c.detail.empty() ? std::to_string(c.chains) + " chains" : c.detail);
    });
  }
  return rb.done();
}

CheckReport colimit_check(int m, int k, bool diagonal_too) {
  ReportBuilder rb("colimit-decomposition", 0, m, k, "");
  SdPoset sd = sd_delta_poset(m);
  for (const auto& p : corpus_pieces(sd, k)) {
    if (p.level < 1) continue;
    FinPoset t = sd.poset.induced(p.elems);
    const std::string tag = p.name + "@" + std::to_string(p.level);
    rb.step("cat " + tag, [&] {
      auto r = chain_colimit_cat(t, p.level);
      return std::make_pair(r.ok, r.detail);
    });
    rb.step("nerve " + tag, [&] {
      auto r = chain_colimit_nerve(t, p.level);
      return std::make_pair(r.ok, r.detail);
    });
    if (diagonal_too)
      rb.step("diagonal " + tag, [&] {
        auto r = chain_colimit_diagonal(t, p.level, 2);
        return std::make_pair(r.ok, r.detail);
      });
  }
  return rb.done();
}

CheckReport ez_check(unsigned seed, int trials = 1000) {
  ReportBuilder rb("multi-ez", 0, -1, -1, "");
  for (MultiIndex m : {MultiIndex{1, 1}, MultiIndex{2, 1}, MultiIndex{1, 1, 1}}) {
    std::string name = "Δ[";
    for (std::size_t i = 0; i < m.size(); ++i) name += (i ? "," : "") + std::to_string(m[i]);
    name += "]";
    rb.step("census " + name, [&] {
      auto c = multi_ez_census(m, 1);
      return std::make_pair(c.multisimplices > 0 && c.agree == c.multisimplices,
                            std::to_string(c.multisimplices) + " cells " + c.first_failure);
    });
  }
  rb.step("fuzz", [&] {
    auto f = multi_ez_fuzz(multi_simplex({2, 1}), trials, seed);
    auto g = multi_ez_fuzz(delta_shriek(boundary(2), 2), trials, seed + 1);
    bool ok = f.agree == f.multisimplices && g.agree == g.multisimplices && f.multisimplices == trials;
    return std::make_pair(ok, f.first_failure + g.first_failure);
  });
  return rb.done();
}

CheckReport sphere_check() {
  ReportBuilder rb("grothendieck-sphere", 1, 3, -1, "∂Δ[3]");
  rb.step("homology", [&] {
    auto g = grothendieck(as_multi(boundary(3)), MultiIndex{2});
    auto gn = groth_nerve(g, MultiIndex{3});
    auto h = homology(*gn.diag);
    bool ok = h.betti.size() >= 3 && h.betti[0] == 1 && h.betti[1] == 0 && h.betti[2] == 1 && h.torsion[1].empty();
    return std::make_pair(ok, h.str());
  });
  rb.step("categorify", [&] { return std::make_pair(find_isomorphism(categorify(*boundary(3)), chain_cat(3)).has_value(), std::string()); });
  return rb.done();
}

CheckReport rho_entry(const std::string& name, SMSet Y, MultiIndex caps, MultiIndex extent) {
  ReportBuilder rb("rho", Y->n(), -1, -1, name);
  auto r = rho_check(Y, extent, caps);
  rb.add("category", r.category_ok, r.detail);
  rb.add("counts", r.counts_ok, r.detail);
  rb.add("natural", r.natural, r.detail);
  rb.add("equivalence", r.equivalence.ok, eq_detail(r.equivalence));
  return rb.done(eq_detail(r.equivalence));
}

CheckReport lambda_entry(const std::string& name, NCat D, MultiIndex caps, MultiIndex extent) {
  ReportBuilder rb("lambda", D->n(), -1, -1, name);
  auto r = lambda_rho_check(D, extent, caps);
  rb.add("lambda-rho", r.ok(), r.detail.empty() ? std::to_string(r.cells) + " cells compared" : r.detail);
  return rb.done(std::to_string(r.cells) + " cells compared");
}

CheckReport cap_entry() {
  ReportBuilder rb("cap-stability", 1, -1, -1, "∂Δ[2]");
  auto s = cap_stability(as_multi(boundary(2)), MultiIndex{1}, MultiIndex{2});
  rb.add("stable", s.stable, s.at_caps.str() + " vs " + s.at_next.str());
  return rb.done(s.at_caps.str());
}

CheckReport adjunction_entry(const std::string& name, CnDelta c, NCat D, long long expected = -1) {
  ReportBuilder rb("adjunction-oracle", c.n, -1, -1, name);
  auto a = adjunction_oracle(c, D);
  std::string detail = std::to_string(a.functors) + " functors, " + std::to_string(a.simplicial_maps) + " maps";
  rb.add("bijection", a.ok(), detail);
  if (expected >= 0) rb.add("count", a.functors == expected, detail);
  return rb.done(detail);
}

}  // namespace

CheckReport decomposition_report(int m, int k) { return decomposition_check(m, k); }

CheckReport chain_condition_report(const FinPoset& t, int level, const std::string& name) {
  ReportBuilder rb("chain-condition", 0, level, -1, name);
  rb.step("chains", [&] {
    auto c = chain_condition(t, level, true);
    bool ok = c.ok() && c.walks == c.walks_found;
    return std::make_pair(ok, c.detail.empty() ? std::to_string(c.chains) + " chains, " + std::to_string(c.groups) + " groups" : c.detail);
  });
  rb.step("colimit", [&] {
    auto c = chain_colimit_cat(t, level);
    return std::make_pair(c.ok, c.detail);
  });
  return rb.done();
}

CheckReport ez_report(int trials, unsigned seed) { return ez_check(seed, trials); }

CheckReport rho_report(SMSet Y, const std::string& name, MultiIndex caps, MultiIndex extent) {
  return rho_entry(name, std::move(Y), std::move(caps), std::move(extent));
}

CheckReport lambda_report(NCat D, const std::string& name, MultiIndex caps, MultiIndex extent) {
  return lambda_entry(name, std::move(D), std::move(caps), std::move(extent));
}

CheckReport nfold_axioms_report(const NFoldCategory& d, const std::string& name) {
  ReportBuilder rb("nfold-axioms", d.n(), -1, -1, name);
  std::string why;
  const bool ok = d.check(&why);
  std::string counts;
  for (unsigned eps = 0; eps <= d.full(); ++eps)
    counts += (eps ? " " : "") + eps_str(eps, d.n()) + ":" + std::to_string(d.count(eps));
  rb.add("axioms", ok, ok ? counts : why);
  return rb.done(counts);
}

std::vector<GridEntry> default_grid(unsigned seed) {
  std::vector<GridEntry> g;
  auto add = [&](int criterion, std::string id, int n, int m, int k, std::string fixture, std::function<CheckReport()> run) {
    g.push_back(GridEntry{criterion, std::move(id), n, m, k, std::move(fixture), std::move(run)});
  };
  add(1, "counting", 0, -1, -1, "", counting_check);
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= m; ++k) add(2, "decomposition", 0, m, k, "", [m, k] { return decomposition_check(m, k); });
  for (int m = 1; m <= 3; ++m) add(3, "gluing", 0, m, -1, "", [m] { return gluing_check(m); });
  for (int m = 1; m <= 3; ++m)
    for (int k = -1; k <= m; ++k) add(4, "chain-condition", 0, m, k, "", [m, k] { return chain_condition_check(m, k); });
  for (int m = 1; m <= 3; ++m)
    for (int k = -1; k <= m; ++k)
      add(5, "colimit-decomposition", 0, m, k, "", [m, k] { return colimit_check(m, k, m <= 2); });
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= m; ++k)
      for (Fixture b : {Fixture::Terminal, Fixture::Interval, Fixture::Horn})
        add(7, "pushout-axiom-cat", 1, m, k, fixture_str(b), [m, k, b] { return pushout_axiom_cat(m, k, b); });
  for (int m = 1; m <= 2; ++m)
    for (int k = 0; k <= m; ++k)
      for (Fixture b : {Fixture::Terminal, Fixture::Interval, Fixture::Horn})
        add(8, "pushout-axiom-nfold", 2, m, k, fixture_str(b), [m, k, b] { return pushout_axiom_nfold(2, m, k, b); });
  add(9, "multi-ez", 0, -1, -1, "", [seed] { return ez_check(seed); });
  add(10, "grothendieck-sphere", 1, 3, -1, "∂Δ[3]", sphere_check);
  add(10, "rho", 1, -1, -1, "Δ[1]", [] { return rho_entry("Δ[1]", as_multi(std_simplex(1)), {2}, {3}); });
  add(10, "rho", 1, -1, -1, "∂Δ[2]", [] { return rho_entry("∂Δ[2]", as_multi(boundary(2)), {2}, {3}); });
  add(10, "rho", 2, -1, -1, "Δ[1,1]", [] { return rho_entry("Δ[1,1]", multi_simplex({1, 1}), {1, 1}, {2, 2}); });
  add(10, "rho", 2, -1, -1, "Δ[1,0]", [] { return rho_entry("Δ[1,0]", multi_simplex({1, 0}), {1, 1}, {2, 2}); });
  add(10, "rho", 2, -1, -1, "δ_!∂Δ[2]",
      [] { return rho_entry("δ_!∂Δ[2]", delta_shriek(boundary(2), 2), {1, 1}, {2, 2}); });
  add(10, "lambda", 1, -1, -1, "[1]", [] { return lambda_entry("[1]", from_category(*chain_cat(1)), {2}, {4}); });
  add(10, "lambda", 2, -1, -1, "[1]⊠[1]",
      [] { return lambda_entry("[1]⊠[1]", external_product({chain_cat(1), chain_cat(1)}), {1, 1}, {2, 2}); });
  add(10, "lambda", 2, -1, -1, "[0]⊠[0]",
      [] { return lambda_entry("[0]⊠[0]", external_product({chain_cat(0), chain_cat(0)}), {1, 1}, {2, 2}); });
  add(10, "cap-stability", 1, -1, -1, "∂Δ[2]", cap_entry);
  for (int n = 1; n <= 2; ++n) {
    add(11, "unit-counit", n, -1, -1, "Δ[0]", [n] { return unit_counit_suite(std_simplex(0), "Δ[0]", n); });
    add(11, "unit-counit", n, -1, -1, "Δ[1]", [n] { return unit_counit_suite(std_simplex(1), "Δ[1]", n); });
    add(11, "unit-counit", n, -1, -1, "∂Δ[2]", [n] { return unit_counit_suite(boundary(2), "∂Δ[2]", n); });
  }
  auto sd_nerve_poset = [](int m) { return poset_of_nondegenerate(*subdivide(std_simplex(m)).sd); };
  auto chain_poset = [](int m) {
    std::vector<std::string> labels;
    for (int i = 0; i <= m; ++i) labels.push_back(std::to_string(i));
    return FinPoset::from_relation(m + 1, [](int a, int b) { return a <= b; }, labels);
  };
  add(12, "adjunction-oracle", 2, -1, -1, "N[1] -> [1]⊠[1]",
      [=] { return adjunction_entry("N[1] -> [1]⊠[1]", cn_delta_union(chain_poset(1), 1, 2), unit_cube(2), 9); });
  add(12, "adjunction-oracle", 2, -1, -1, "SdΔ[1] -> [1]⊠[1]", [=] {
    return adjunction_entry("SdΔ[1] -> [1]⊠[1]", cn_delta_union(sd_nerve_poset(1), 1, 2), unit_cube(2));
  });
  add(12, "adjunction-oracle", 2, -1, -1, "∂Δ[2] -> [1]⊠[1]", [] {
    return adjunction_entry("∂Δ[2] -> [1]⊠[1]", cn_delta_saturated(boundary(2), 2).cn, unit_cube(2));
  });
  add(12, "adjunction-oracle", 2, -1, -1, "SdΔ[1] -> [0]⊠[0]", [=] {
    return adjunction_entry("SdΔ[1] -> [0]⊠[0]", cn_delta_union(sd_nerve_poset(1), 1, 2),
                            external_product({chain_cat(0), chain_cat(0)}), 1);
  });
  add(12, "adjunction-oracle", 1, -1, -1, "SdΔ[1] -> [2]", [=] {
    return adjunction_entry("SdΔ[1] -> [2]", cn_delta_union(sd_nerve_poset(1), 1, 1), from_category(*chain_cat(2)));
  });
  add(12, "adjunction-oracle", 1, -1, -1, "∂Δ[2] -> [1]", [] {
    return adjunction_entry("∂Δ[2] -> [1]", cn_delta_saturated(boundary(2), 1).cn, from_category(*chain_cat(1)));
  });
  return g;
}

}  // namespace nfold
