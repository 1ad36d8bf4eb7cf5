#include "nfold/grothendieck.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "nfold/homology.hpp"
#include "nfold/nfold_nerve.hpp"

namespace nfold {

namespace {

long long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// Number of monotone maps [a] -> [b].
long long monotone_count(int a, int b) { return binom(a + b + 1, a + 1); }

std::vector<MultiIndex> box_below(const MultiIndex& e) {
  std::vector<MultiIndex> out;
  MultiIndex cur(e.size(), 0);
  while (true) {
    out.push_back(cur);
    int a = static_cast<int>(e.size()) - 1;
    while (a >= 0 && cur[a] == e[a]) cur[a--] = 0;
    if (a < 0) break;
    ++cur[a];
  }
  return out;
}

bool leq(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Key cell_key(const GrothCell& c) {
  Key k;
  for (const OrdinalMap& f : c.f.parts) {
    k.push_back(f.source());
    k.push_back(f.target());
    for (int v : f.values()) k.push_back(v);
  }
  Key z = multisimplex_key(c.z);
  k.insert(k.end(), z.begin(), z.end());
  return k;
}

GrothCell cell_parts(int n, const Key& k) {
  GrothCell c;
  std::size_t at = 0;
  for (int a = 0; a < n; ++a) {
    int src = k[at], tgt = k[at + 1];
    at += 2;
    std::vector<int> vals(k.begin() + at, k.begin() + at + src + 1);
    at += src + 1;
    c.f.parts.emplace_back(tgt, std::move(vals));
  }
  MultiIndex q(k.begin() + at, k.begin() + at + n);
  at += n;
  c.z.index = k[at++];
  const MultiIndex l = c.f.target();
  for (int a = 0; a < n; ++a) {
    std::vector<int> vals(k.begin() + at, k.begin() + at + l[a] + 1);
    at += l[a] + 1;
    c.z.eta.parts.emplace_back(q[a], std::move(vals));
  }
  return c;
}

std::string cell_label(const MultiSimplicialSet& Y, const GrothCell& c) {
  std::string s = Y.label(c.z.nd_degree(), c.z.index);
  if (!c.z.nondegenerate()) s += c.z.eta.str();
  if (!c.f.is_identity()) s += " <- " + c.f.str();
  return s;
}

}  // namespace

Key multisimplex_key(const MultiSimplex& s) {
  Key k = s.nd_degree();
  k.push_back(s.index);
  for (const OrdinalMap& f : s.eta.parts)
    for (int v : f.values()) k.push_back(v);
  return k;
}

std::vector<MultiSimplex> multisimplices(const MultiSimplicialSet& Y, const MultiIndex& p) {
  std::vector<MultiSimplex> out;
  const int n = Y.n();
  for (const MultiIndex& q : Y.degrees()) {
    if (!leq(q, p)) continue;
    std::vector<std::vector<OrdinalMap>> surj(n);
    for (int a = 0; a < n; ++a) surj[a] = surjections(p[a], q[a]);
    std::vector<int> pick(n, 0);
    while (true) {
      MultiOrdinalMap eta;
      for (int a = 0; a < n; ++a) eta.parts.push_back(surj[a][pick[a]]);
      for (int i = 0; i < Y.count(q); ++i) out.push_back(MultiSimplex{eta, i});
      int a = n - 1;
      while (a >= 0 && pick[a] + 1 == static_cast<int>(surj[a].size())) pick[a--] = 0;
      if (a < 0) break;
      ++pick[a];
    }
  }
  return out;
}

GrothCell Grothendieck::cell(unsigned eps, int x) const { return cell_parts(Y->n(), cat->key(eps, x)); }

std::optional<int> Grothendieck::find(unsigned eps, const GrothCell& c) const {
  return cat->find_key(eps, cell_key(c));
}

std::optional<int> Grothendieck::object(const MultiSimplex& y) const {
  return find(0, GrothCell{MultiOrdinalMap::identity(y.degree()), y});
}

MultiIndex default_caps(const MultiSimplicialSet& Y) {
  MultiIndex c = Y.extent();
  for (int& v : c) ++v;
  return c;
}

Grothendieck grothendieck(SMSet Y, std::optional<MultiIndex> caps) {
  const int n = Y->n();
  Grothendieck g;
  g.caps = caps ? *caps : default_caps(*Y);
  if (static_cast<int>(g.caps.size()) != n) throw PreconditionError("caps must have one entry per axis");
  auto cat = std::make_shared<NFoldCategory>(n);
  std::vector<std::unordered_map<Key, int, KeyHash>> ids(1u << n);
  const auto degrees = box_below(g.caps);
  std::vector<std::vector<MultiSimplex>> tops;
  for (const MultiIndex& l : degrees) tops.push_back(multisimplices(*Y, l));

  std::vector<std::vector<std::vector<OrdinalMap>>> into(n);  // into[a][l]: maps [k] -> [l], k <= cap
  for (int a = 0; a < n; ++a)
    for (int l = 0; l <= g.caps[a]; ++l) {
      into[a].emplace_back();
      for (int k = 0; k <= g.caps[a]; ++k)
        for (auto& f : monotone_maps(k, l)) into[a][l].push_back(f);
    }

  for (unsigned eps = 0; eps <= cat->full(); ++eps)
    for (std::size_t li = 0; li < degrees.size(); ++li) {
      const MultiIndex& l = degrees[li];
      std::vector<const std::vector<OrdinalMap>*> choice(n);
      std::vector<std::vector<OrdinalMap>> fixed(n);
      for (int a = 0; a < n; ++a) {
        if (eps >> a & 1u) {
          choice[a] = &into[a][l[a]];
        } else {
          fixed[a] = {OrdinalMap::identity(l[a])};
          choice[a] = &fixed[a];
        }
      }
      std::vector<int> pick(n, 0);
      while (true) {
        MultiOrdinalMap f;
        for (int a = 0; a < n; ++a) f.parts.push_back((*choice[a])[pick[a]]);
        for (const MultiSimplex& z : tops[li]) {
          budget_tick();
          GrothCell c{f, z};
          Key k = cell_key(c);
          int x = cat->add(eps, cell_label(*Y, c), k);
          ids[eps].emplace(std::move(k), x);
        }
        int a = n - 1;
        while (a >= 0 && pick[a] + 1 == static_cast<int>(choice[a]->size())) pick[a--] = 0;
        if (a < 0) break;
        ++pick[a];
      }
    }

  auto lookup = [&](unsigned eps, const GrothCell& c) {
    auto it = ids[eps].find(cell_key(c));
    if (it == ids[eps].end()) throw Error("Grothendieck cell missing: " + cell_label(*Y, c));
    return it->second;
  };

  for (unsigned eps = 0; eps <= cat->full(); ++eps)
    for (int x = 0; x < cat->count(eps); ++x) {
      const GrothCell c = cell_parts(n, cat->key(eps, x));
      for (int i = 0; i < n; ++i) {
        const unsigned bit = 1u << i;
        if (eps & bit) {
          // source: f_i replaced by the identity of its source, z pulled back along f_i
          GrothCell s = c;
          s.f.parts[i] = OrdinalMap::identity(c.f.parts[i].source());
          s.z = Y->apply(on_axis(c.f.target(), i, c.f.parts[i]), c.z);
          GrothCell t = c;
          t.f.parts[i] = OrdinalMap::identity(c.f.parts[i].target());
          cat->set_src(eps, i, x, lookup(eps & ~bit, s));
          cat->set_tgt(eps, i, x, lookup(eps & ~bit, t));
        } else if (c.f.target()[i] <= g.caps[i]) {
          cat->set_unit(eps, i, x, lookup(eps | bit, c));
        }
      }
    }
  cat->finalize();

  for (unsigned eps = 0; eps <= cat->full(); ++eps)
    for (int i = 0; i < n; ++i) {
      const unsigned bit = 1u << i;
      if (!(eps & bit)) continue;
      for (int x = 0; x < cat->count(eps); ++x) {
        const GrothCell first = cell_parts(n, cat->key(eps, x));
        for (int y : cat->starting_at(eps, i, cat->tgt(eps, i, x))) {
          budget_tick();
          GrothCell c = cell_parts(n, cat->key(eps, y));
          c.f.parts[i] = c.f.parts[i].after(first.f.parts[i]);
          cat->set_compose(eps, i, x, y, lookup(eps, c));
        }
      }
    }
  g.Y = std::move(Y);
  g.cat = std::move(cat);
  return g;
}

bool check_grothendieck(const Grothendieck& g, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const NFoldCategory& d = *g.cat;
  const int n = d.n();
  for (unsigned eps = 0; eps <= d.full(); ++eps)
    for (int x = 0; x < d.count(eps); ++x) {
      const GrothCell c = g.cell(eps, x);
      for (int a = 0; a < n; ++a)
        if (!(eps >> a & 1u) && !c.f.parts[a].is_identity())
          return fail("cube " + d.label(eps, x) + " moves outside its directions");
      for (unsigned which = 0; which <= eps; ++which) {
        if ((which & ~eps) != 0) continue;
        MultiOrdinalMap h = c.f;
        for (int a = 0; a < n; ++a)
          if (which >> a & 1u) h.parts[a] = OrdinalMap::identity(c.f.parts[a].target());
        const MultiSimplex y = g.Y->apply(h, c.z);
        auto obj = g.object(y);
        if (!obj || d.corner(eps, x, which) != *obj)
          return fail("corner " + eps_str(which, n) + " of " + d.label(eps, x) + " is not the pulled back multisimplex");
      }
    }
  return d.check(why);
}

GrothNerve groth_nerve(const Grothendieck& g, const MultiIndex& extent) {
  GrothNerve out;
  out.nerve = realize(std::make_shared<NFoldNerveModel>(g.cat, extent));
  out.truncation = *std::min_element(extent.begin(), extent.end());
  out.diag = diagonal(out.nerve, out.truncation);
  return out;
}

long long multisimplex_formula(const MultiSimplicialSet& Y, const MultiIndex& caps, const MultiIndex& p) {
  const int n = Y.n();
  // ends[a][k]: paths of length p_a in Δ_{<= caps_a} ending at [k]
  std::vector<std::vector<long long>> ends(n);
  for (int a = 0; a < n; ++a) {
    std::vector<long long> cur(caps[a] + 1, 1);
    for (int step = 0; step < p[a]; ++step) {
      std::vector<long long> next(caps[a] + 1, 0);
      for (int k = 0; k <= caps[a]; ++k)
        for (int j = 0; j <= caps[a]; ++j) next[k] += cur[j] * monotone_count(j, k);
      cur = std::move(next);
    }
    ends[a] = std::move(cur);
  }
  long long total = 0;
  for (const MultiIndex& k : box_below(caps)) {
    long long cells = 0;
    for (const MultiIndex& q : Y.degrees()) {
      if (!leq(q, k)) continue;
      long long c = Y.count(q);
      for (int a = 0; a < n; ++a) c *= binom(k[a], q[a]);
      cells += c;
    }
    long long paths = 1;
    for (int a = 0; a < n; ++a) paths *= ends[a][k[a]];
    total += paths * cells;
  }
  return total;
}

long long multisimplex_count(const MultiSimplicialSet& X, const MultiIndex& p) {
  long long total = 0;
  for (const MultiIndex& q : X.degrees()) {
    if (!leq(q, p)) continue;
    long long c = X.count(q);
    for (std::size_t a = 0; a < p.size(); ++a) c *= binom(p[a], q[a]);
    total += c;
  }
  return total;
}

long long simplex_count(const SimplicialSet& X, int p) {
  long long total = 0;
  for (int q = 0; q <= std::min(p, X.dim()); ++q) total += X.count(q) * binom(p, q);
  return total;
}

ArrayPaths array_paths(const Grothendieck& g, const MultiIndex& p, const Key& array) {
  const int n = g.Y->n();
  const unsigned eps = shape_of(p);
  const MultiIndex dims = grid_dims(p);
  std::vector<int> st(n, 1);
  for (int a = n - 2; a >= 0; --a) st[a] = st[a + 1] * dims[a + 1];
  int last = 0;
  for (int a = 0; a < n; ++a) last += (dims[a] - 1) * st[a];
  ArrayPaths out;
  out.paths.resize(n);
  out.start.resize(n);
  const GrothCell top = g.cell(eps, array[last]);
  out.z = top.z;
  for (int a = 0; a < n; ++a) {
    if (p[a] == 0) {
      out.start[a] = top.f.target()[a];
      continue;
    }
    for (int c = 0; c < p[a]; ++c) {
      const int idx = last - (dims[a] - 1) * st[a] + c * st[a];
      out.paths[a].push_back(g.cell(eps, array[idx]).f.parts[a]);
    }
    out.start[a] = out.paths[a][0].source();
  }
  return out;
}

OrdinalMap last_vertex_map(int k0, const std::vector<OrdinalMap>& path) {
  const int p = static_cast<int>(path.size());
  const int kp = p == 0 ? k0 : path.back().target();
  std::vector<int> vals(p + 1);
  for (int i = 0; i <= p; ++i) {
    int v = i == 0 ? k0 : path[i - 1].target();
    for (int j = i; j < p; ++j) v = path[j](v);
    vals[i] = v;
  }
  return OrdinalMap(kp, std::move(vals));
}

MultiSimplicialMap rho(const Grothendieck& g, SMSet nerve) {
  MultiSimplicialMap f{nerve, g.Y, {}};
  const int n = g.Y->n();
  for (const MultiIndex& p : nerve->degrees()) {
    auto& level = f.image[p];
    for (int x = 0; x < nerve->count(p); ++x) {
      budget_tick();
      ArrayPaths ap = array_paths(g, p, nerve->key(p, x));
      MultiOrdinalMap phi;
      for (int a = 0; a < n; ++a) phi.parts.push_back(last_vertex_map(ap.start[a], ap.paths[a]));
      level.push_back(g.Y->apply(phi, ap.z));
    }
  }
  return f;
}

NFoldFunctor groth_map(const MultiSimplicialMap& phi, const Grothendieck& dom, const Grothendieck& cod) {
  NFoldFunctor F{dom.cat, cod.cat, {}};
  for (unsigned eps = 0; eps <= dom.cat->full(); ++eps) {
    F.map.emplace_back();
    for (int x = 0; x < dom.cat->count(eps); ++x) {
      GrothCell c = dom.cell(eps, x);
      c.z = phi.apply(c.z);
      auto y = cod.find(eps, c);
      if (!y) throw Error("image cube missing from the codomain Grothendieck construction");
      F.map.back().push_back(*y);
    }
  }
  return F;
}

NFoldFunctor lambda(const Grothendieck& g, NCat d) {
  auto model = std::dynamic_pointer_cast<const NFoldNerveModel>(g.Y->model());
  if (!model) throw PreconditionError("lambda needs the Grothendieck construction of an n-fold nerve");
  const int n = d->n();
  NFoldFunctor F{g.cat, d, {}};
  for (unsigned eps = 0; eps <= g.cat->full(); ++eps) {
    F.map.emplace_back();
    for (int x = 0; x < g.cat->count(eps); ++x) {
      budget_tick();
      const GrothCell c = g.cell(eps, x);
      const MultiIndex l = c.f.target(), k = c.f.source();
      const Key arr = model->act(c.z.eta, g.Y->key(c.z.nd_degree(), c.z.index));
      MultiIndex lo(n), hi = l;
      unsigned have = 0;
      for (int a = 0; a < n; ++a) {
        lo[a] = c.f.parts[a](k[a]);
        if (lo[a] < hi[a]) have |= 1u << a;
      }
      const int y = model->box(l, arr, lo, hi);
      F.map.back().push_back(d->units(have, y, eps & ~have));
    }
  }
  return F;
}

LambdaRhoReport lambda_rho_check(NCat d, const MultiIndex& extent, std::optional<MultiIndex> caps) {
  LambdaRhoReport rep;
  SMSet nd = nfold_nerve(d);
  Grothendieck g = grothendieck(nd, caps);
  NFoldFunctor lam = lambda(g, d);
  std::string why;
  rep.functor_ok = lam.check(&why);
  if (!rep.functor_ok) rep.detail = "lambda is not an n-fold functor: " + why;
  SMSet gn = realize(std::make_shared<NFoldNerveModel>(g.cat, extent));
  MultiSimplicialMap via_lambda = nfold_nerve_map(lam, gn, nd);
  MultiSimplicialMap r = rho(g, gn);
  for (const MultiIndex& p : gn->degrees())
    for (int x = 0; x < gn->count(p); ++x) {
      ++rep.cells;
      if (via_lambda.image.at(p)[x] != r.image.at(p)[x]) {
        if (rep.mismatches++ == 0 && rep.detail.empty()) rep.detail = "first mismatch at " + gn->label(p, x);
      }
    }
  return rep;
}

RhoReport rho_check(SMSet Y, const MultiIndex& extent, std::optional<MultiIndex> caps) {
  RhoReport rep;
  Grothendieck g = grothendieck(Y, caps);
  rep.caps = g.caps;
  std::string why;
  rep.category_ok = check_grothendieck(g, &why);
  if (!rep.category_ok) rep.detail = why;
  GrothNerve gn = groth_nerve(g, extent);
  rep.truncation = gn.truncation;
  rep.counts_ok = true;
  for (const MultiIndex& p : box_below(extent))
    if (multisimplex_count(*gn.nerve, p) != multisimplex_formula(*Y, g.caps, p)) {
      rep.counts_ok = false;
      if (rep.detail.empty()) rep.detail = "p-multisimplex count off the coproduct formula";
    }
  for (int p = 0; p <= gn.truncation; ++p)
    if (simplex_count(*gn.diag, p) != multisimplex_formula(*Y, g.caps, MultiIndex(Y->n(), p))) {
      rep.counts_ok = false;
      if (rep.detail.empty()) rep.detail = "diagonal p-simplex count off the path formula";
    }
  MultiSimplicialMap r = rho(g, gn.nerve);
  rep.natural = r.check(&why);
  if (!rep.natural && rep.detail.empty()) rep.detail = "rho is not simplicial: " + why;
  SSet dy = diagonal(Y);
  rep.equivalence = homology_equivalence(diagonal(r, gn.diag, dy));
  if (!rep.equivalence.ok && rep.detail.empty()) rep.detail = rep.equivalence.detail;
  return rep;
}

CapStability cap_stability(SMSet Y, const MultiIndex& caps, const MultiIndex& extent) {
  CapStability out;
  MultiIndex next = caps;
  for (int& v : next) ++v;
  out.at_caps = homology(*groth_nerve(grothendieck(Y, caps), extent).diag);
  out.at_next = homology(*groth_nerve(grothendieck(Y, next), extent).diag);
  out.stable = out.at_caps.same_groups(out.at_next);
  return out;
}

ColimitPreservation groth_preserves_colimits_check(const MultiSimplicialMap& to1, const MultiSimplicialMap& to2,
                                                   const MultiIndex& caps, const MultiIndex& extent) {
  ColimitPreservation rep;
  SMSet y0 = to1.dom, y1 = to1.cod, y2 = to2.cod;
  MultiColimit po = colimit_of_monos({y0, y1, y2}, {{0, 1, to1}, {0, 2, to2}});
  // the glued Y needs a model for its own construction; reuse the colimit cells
  std::vector<Grothendieck> gs{grothendieck(y0, caps), grothendieck(y1, caps), grothendieck(y2, caps)};
  Grothendieck gy = grothendieck(po.object, caps);
  std::vector<SMSet> nerves;
  for (auto& g : gs) nerves.push_back(realize(std::make_shared<NFoldNerveModel>(g.cat, extent)));
  SMSet whole = realize(std::make_shared<NFoldNerveModel>(gy.cat, extent));
  auto f1 = groth_map(to1, gs[0], gs[1]), f2 = groth_map(to2, gs[0], gs[2]);
  MultiColimit npo = colimit_of_monos(nerves, {{0, 1, nfold_nerve_map(f1, nerves[0], nerves[1])},
                                               {0, 2, nfold_nerve_map(f2, nerves[0], nerves[2])}});
  std::vector<NFoldFunctor> legs;
  for (int o = 0; o < 3; ++o) legs.push_back(groth_map(po.legs[o], gs[o], gy));
  MultiSimplicialMap cmp = multi_map_from_keys(npo.object, whole, [&](const MultiIndex& p, const Key& k) {
    const unsigned eps = shape_of(p);
    Key arr = nerves[k[0]]->key(p, k[1]);
    for (int& c : arr) c = legs[k[0]].map[eps][c];
    return arr;
  });
  rep.counts = {npo.object->total(), whole->total()};
  rep.iso = is_isomorphism(cmp, &rep.detail);
  return rep;
}

ZigzagReport zigzag_suite(SSet X, int n, const MultiIndex& extent, std::optional<MultiIndex> caps) {
  ZigzagReport rep;
  SMSet dx = delta_shriek(X, n);
  SSet ddx = diagonal(dx);
  Grothendieck g = grothendieck(dx, caps);
  GrothNerve gn = groth_nerve(g, extent);
  rep.rho = homology_equivalence(diagonal(rho(g, gn.nerve), gn.diag, ddx));
  rep.unit = homology_equivalence(unit_delta(X, ddx));
  // the condition on G = δ*δ_! at ε^0, ε^1 : Δ[0] -> Δ[1]
  SSet pt = std_simplex(0), seg = std_simplex(1);
  SMSet dpt = delta_shriek(pt, n), dseg = delta_shriek(seg, n);
  SSet gpt = diagonal(dpt), gseg = diagonal(dseg);
  std::vector<int> ends;
  for (int v = 0; v < 2; ++v) {
    SimplicialMap e = map_by_vertices(pt, seg, {1 - v});
    SimplicialMap ge = diagonal(delta_shriek_map(e, dpt, dseg), gpt, gseg);
    ends.push_back(ge.image[0][0].index);
  }
  rep.ends_disjoint = ends[0] != ends[1];
  if (!rep.rho.ok) rep.detail = "rho: " + rep.rho.detail;
  else if (!rep.unit.ok) rep.detail = "unit: " + rep.unit.detail;
  return rep;
}

SMSet as_multi(SSet X) { return external_product({std::move(X)}); }

}  // namespace nfold
