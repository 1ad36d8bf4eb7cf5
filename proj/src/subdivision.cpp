#include "nfold/subdivision.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nfold/cn_delta.hpp"
#include "nfold/homology.hpp"
#include "nfold/multisimplicial.hpp"
#include "nfold/nfold_homotopy.hpp"
#include "nfold/nfold_nerve.hpp"
#include "nfold/product.hpp"
#include "nfold/saturation.hpp"

namespace nfold {

namespace {

int size_of(unsigned v) { return __builtin_popcount(v); }

bool horn_face(unsigned v, int m, int k) { return size_of(v) < m || (size_of(v) == m && (v >> k & 1u)); }

bool contains(const SdSimplex& s, unsigned v) { return std::find(s.begin(), s.end(), v) != s.end(); }

// Sd2 simplex with entry j dropped.
Sd2Simplex drop(const Sd2Simplex& V, int j) {
  Sd2Simplex f = V;
  f.erase(f.begin() + j);
  return f;
}

using FaceIndex = std::map<Sd2Simplex, std::vector<int>>;

FaceIndex face_index(const std::vector<Sd2Simplex>& tops) {
  FaceIndex idx;
  for (int s = 0; s < static_cast<int>(tops.size()); ++s)
    for (int j = 0; j < static_cast<int>(tops[s].size()); ++j) idx[drop(tops[s], j)].push_back(s);
  return idx;
}

// Nerve keys of a chain of elements, as arrows of t.to_category().
Key chain_key(const FinCat& c, const std::vector<int>& xs) {
  Key k{xs[0]};
  for (std::size_t i = 1; i < xs.size(); ++i) k.push_back(poset_arrow(c, xs[i - 1], xs[i]));
  return k;
}

struct ChainDiagram {
  std::vector<Chain> chains;  // nonempty chains of size level and level+1
  std::vector<std::pair<int, int>> arrows;  // (small, large) with small ⊂ large
};

ChainDiagram chain_diagram(const FinPoset& t, int level) {
  ChainDiagram d;
  auto small = chains_of_size(t, level), large = chains_of_size(t, level + 1);
  for (auto& c : small)
    if (!c.empty()) d.chains.push_back(c);
  const int first_large = static_cast<int>(d.chains.size());
  for (auto& c : large) d.chains.push_back(c);
  for (int w = 0; w < first_large; ++w)
    for (int u = first_large; u < static_cast<int>(d.chains.size()); ++u)
      if (std::includes(d.chains[u].begin(), d.chains[u].end(), d.chains[w].begin(), d.chains[w].end()))
        d.arrows.emplace_back(w, u);
  return d;
}

std::vector<int> positions(const Chain& small, const Chain& large) {
  std::vector<int> pos;
  for (int x : small) pos.push_back(static_cast<int>(std::lower_bound(large.begin(), large.end(), x) - large.begin()));
  return pos;
}

void require_condition(const FinPoset& t, int level) {
  auto cc = chain_condition(t, level);
  if (!cc.ok()) throw PreconditionError("chain condition fails: " + cc.detail);
}

}  // namespace

bool membership(Member kind, const SdSimplex& s, int m, int k) {
  switch (kind) {
    case Member::Full:
      return true;
    case Member::Boundary:
      return s.back() != (1u << (m + 1)) - 1;
    case Member::Horn:
      return horn_face(s.back(), m, k);
  }
  return false;
}

std::string sd_label(const SdSimplex& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + set_label(s[i]);
  return out + ")";
}

std::optional<int> SdPoset::find(const SdSimplex& s) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), s, [](const SdSimplex& a, const SdSimplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (it == elems.end() || *it != s) return std::nullopt;
  return static_cast<int>(it - elems.begin());
}

SdPoset sd_delta_poset(int m) {
  SdPoset sd;
  sd.m = m;
  const unsigned full = sd.full_set();
  SdSimplex cur;
  std::function<void()> rec = [&]() {
    if (!cur.empty()) sd.elems.push_back(cur);
    for (unsigned v = 1; v <= full; ++v)
      if (cur.empty() || (v != cur.back() && (v & cur.back()) == cur.back())) {
        cur.push_back(v);
        rec();
        cur.pop_back();
      }
  };
  rec();
  std::sort(sd.elems.begin(), sd.elems.end(), [](const SdSimplex& a, const SdSimplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<std::string> labels;
  for (auto& s : sd.elems) labels.push_back(sd_label(s));
  const auto& el = sd.elems;
  sd.poset = FinPoset::from_relation(
      static_cast<int>(el.size()),
      [&](int a, int b) {
        for (unsigned v : el[a])
          if (!contains(el[b], v)) return false;
        return true;
      },
      std::move(labels));
  return sd;
}

std::vector<int> members(const std::vector<char>& mask) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(mask.size()); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

std::vector<char> up_closure(const FinPoset& t, const std::vector<int>& seeds) {
  std::vector<char> in(t.size(), 0);
  for (int s : seeds)
    for (int b = 0; b < t.size(); ++b)
      if (t.leq(s, b)) in[b] = 1;
  return in;
}

Pieces pieces(const SdPoset& sd, int k) {
  Pieces p;
  p.k = k;
  const int m = sd.m;
  const unsigned full = sd.full_set(), face = full & ~(1u << k);
  for (const SdSimplex& s : sd.elems) {
    p.horn.push_back(membership(Member::Horn, s, m, k));
    p.out.push_back(std::any_of(s.begin(), s.end(), [&](unsigned v) { return horn_face(v, m, k); }));
    p.cen.push_back(s.back() == full);
    p.comp.push_back(contains(s, face));
  }
  return p;
}

DecompositionReport check_decomposition(const SdPoset& sd, int k) {
  DecompositionReport r;
  Pieces p = pieces(sd, k);
  const FinPoset& t = sd.poset;
  r.covers = true;
  for (int x = 0; x < t.size(); ++x)
    if (!(p.out[x] || p.cen[x] || p.comp[x])) {
      r.covers = false;
      r.detail = sd_label(sd.elems[x]) + " is in no piece";
    }
  r.up_closed = t.up_closed(p.out) && t.up_closed(p.cen) && t.up_closed(p.comp);
  r.horn_down_closed = t.down_closed(p.horn);
  const unsigned full = sd.full_set();
  r.formulas_match = up_closure(t, members(p.horn)) == p.out &&
                     up_closure(t, {*sd.find({full})}) == p.cen &&
                     up_closure(t, {*sd.find({full & ~(1u << k)})}) == p.comp;
  if (!r.formulas_match && r.detail.empty()) r.detail = "a membership formula disagrees with its up-closure";
  return r;
}

SdSimplex Retraction::apply(const SdSimplex& s) const {
  SdSimplex u;
  for (unsigned v : s)
    if (horn_face(v, m, k)) u.push_back(v);
  return u;
}

Retraction retraction(const SdPoset& sd, int k) {
  Retraction r;
  r.k = k;
  r.m = sd.m;
  Pieces p = pieces(sd, k);
  r.horn_elems = members(p.horn);
  r.out_elems = members(p.out);
  r.horn = sd.poset.induced(r.horn_elems).to_category();
  r.out = sd.poset.induced(r.out_elems).to_category();
  std::vector<int> horn_pos(sd.elems.size(), -1), out_pos(sd.elems.size(), -1);
  for (std::size_t i = 0; i < r.horn_elems.size(); ++i) horn_pos[r.horn_elems[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < r.out_elems.size(); ++i) out_pos[r.out_elems[i]] = static_cast<int>(i);
  std::vector<int> rmap, incmap;
  for (int x : r.horn_elems) r.horn_cells.push_back(sd.elems[x]);
  for (int x : r.out_elems) r.out_cells.push_back(sd.elems[x]);
  for (int x : r.out_elems) {
    int h = horn_pos[*sd.find(r.apply(sd.elems[x]))];
    if (h < 0) throw Error("retraction leaves the horn");
    rmap.push_back(h);
  }
  for (int x : r.horn_elems) incmap.push_back(out_pos[x]);
  r.r = poset_functor(r.out, r.horn, rmap);
  r.inc = poset_functor(r.horn, r.out, incmap);
  Functor ir = r.r.then(r.inc);
  r.alpha = NatTransf{ir, identity_functor(r.out), {}};
  for (int x = 0; x < r.out->num_objects(); ++x) r.alpha.component.push_back(poset_arrow(*r.out, ir.obj[x], x));
  return r;
}

bool Retraction::check(std::string* why) const {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (!r.check(why) || !inc.check(why) || !alpha.check(why)) return false;
  for (int h = 0; h < horn->num_objects(); ++h) {
    if (r.obj[inc.obj[h]] != h) return fail("r ∘ inc is not the identity");
    if (!out->is_identity(alpha.component[inc.obj[h]])) return fail("α is not the identity on the horn");
  }
  for (int x = 0; x < out->num_objects(); ++x) {
    const SdSimplex& v = out_cells[x];
    std::vector<SdSimplex> in_horn;
    for (unsigned sub = 1; sub < (1u << v.size()); ++sub) {
      SdSimplex u;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (sub >> i & 1u) u.push_back(v[i]);
      if (membership(Member::Horn, u, m, k)) in_horn.push_back(u);
    }
    std::vector<SdSimplex> maximal;
    for (auto& u : in_horn) {
      bool below_other = false;
      for (auto& w : in_horn)
        if (w.size() > u.size() && std::includes(w.begin(), w.end(), u.begin(), u.end(),
                                                 [](unsigned a, unsigned b) { return size_of(a) < size_of(b); }))
          below_other = true;
      if (!below_other) maximal.push_back(u);
    }
    if (maximal.size() != 1) return fail(sd_label(v) + " has no largest sub-tuple in the horn");
    if (horn_cells[r.obj[x]] != maximal[0]) return fail("r" + sd_label(v) + " is not the largest sub-tuple in the horn");
  }
  return true;
}

std::vector<Sd2Simplex> top_simplices(const SdPoset& sd) { return chains_of_size(sd.poset, sd.m + 1); }

std::optional<Sd2Simplex> glue_neighbor(const SdPoset& sd, const Sd2Simplex& V, int j) {
  const int m = sd.m;
  if (static_cast<int>(V.size()) != m + 1 || j < 0 || j > m) throw PreconditionError("not a top simplex face");
  Sd2Simplex out = V;
  if (j < m) {
    const SdSimplex prev = j > 0 ? sd.elems[V[j - 1]] : SdSimplex{};
    const SdSimplex& next = sd.elems[V[j + 1]];
    const SdSimplex& cur = sd.elems[V[j]];
    std::vector<unsigned> extra;
    for (unsigned v : next)
      if (!contains(prev, v)) extra.push_back(v);
    if (extra.size() != 2) throw Error("V_{j+1} \\ V_{j-1} does not have two elements");
    const unsigned other = contains(cur, extra[0]) ? extra[1] : extra[0];
    SdSimplex repl = prev;
    repl.push_back(other);
    std::sort(repl.begin(), repl.end(), [](unsigned a, unsigned b) { return size_of(a) < size_of(b); });
    out[j] = *sd.find(repl);
    return out;
  }
  const SdSimplex& W = sd.elems[V[m - 1]];
  if (W.back() != sd.full_set()) return std::nullopt;
  int gap = -1;
  for (int i = 0; i < static_cast<int>(W.size()); ++i) {
    const unsigned below = i > 0 ? W[i - 1] : 0u;
    if (size_of(W[i]) - size_of(below) == 2) gap = i;
  }
  const unsigned below = gap > 0 ? W[gap - 1] : 0u;
  const SdSimplex& top = sd.elems[V[m]];
  unsigned inserted = 0;
  for (unsigned v : top)
    if (!contains(W, v)) inserted = v;
  const unsigned pair = W[gap] & ~below;
  const unsigned other = below | (pair & ~(inserted & ~below));
  SdSimplex repl = W;
  repl.insert(repl.begin() + gap, other);
  out[m] = *sd.find(repl);
  return out;
}

GluingReport check_gluing(const SdPoset& sd) {
  GluingReport r;
  const int m = sd.m;
  auto tops = top_simplices(sd);
  r.simplices = static_cast<long long>(tops.size());
  r.shapes = r.rule = r.two_sided = true;
  for (const auto& V : tops) {
    for (int i = 0; i <= m; ++i)
      if (static_cast<int>(sd.elems[V[i]].size()) != i + 1) r.shapes = false;
    if (sd.elems[V[m]].back() != sd.full_set()) r.shapes = false;
  }
  FaceIndex idx = face_index(tops);
  for (auto& [face, owners] : idx) {
    if (owners.size() > 2) r.two_sided = false;
    (owners.size() == 2 ? r.interior_faces : r.boundary_faces)++;
  }
  for (int s = 0; s < static_cast<int>(tops.size()); ++s)
    for (int j = 0; j <= m; ++j) {
      const auto& owners = idx.at(drop(tops[s], j));
      std::optional<Sd2Simplex> brute;
      for (int o : owners)
        if (o != s) brute = tops[o];
      auto rule = glue_neighbor(sd, tops[s], j);
      if (rule != brute && r.rule) {
        r.rule = false;
        std::string lab;
        for (int x : tops[s]) lab += sd.poset.labels[x];
        r.detail = "face " + std::to_string(j) + " of " + lab + ": the swap rule names a different neighbour";
      }
    }
  if (!r.shapes && r.detail.empty()) r.detail = "a top simplex has the wrong shape";
  if (!r.two_sided && r.detail.empty()) r.detail = "a face lies in more than two top simplices";
  return r;
}

int comp_class(const SdPoset& sd, const Sd2Simplex& V, int k) {
  const unsigned face = sd.full_set() & ~(1u << k);
  if (sd.elems[V[0]] != SdSimplex{face}) return 0;
  int l = 0;
  while (l < static_cast<int>(V.size()) && sd.elems[V[l]].back() == face) ++l;
  return l;
}

CompGluingReport check_compgluing(const SdPoset& sd, int k) {
  CompGluingReport r;
  const int m = sd.m;
  Pieces p = pieces(sd, k);
  auto tops = top_simplices(sd);
  r.class_sizes.assign(m + 1, 0);
  r.partition = r.criterion = true;
  std::vector<int> cls(tops.size(), 0);
  for (std::size_t s = 0; s < tops.size(); ++s) {
    const auto& V = tops[s];
    const bool in_comp = std::all_of(V.begin(), V.end(), [&](int x) { return p.comp[x]; });
    const int l = comp_class(sd, V, k);
    if (in_comp != (l > 0)) {
      r.partition = false;
      r.detail = "N Comp membership differs from the first-vertex description";
    }
    if (!in_comp) continue;
    ++r.comp_simplices;
    if (l < 1 || l > m) {
      r.partition = false;
      r.detail = "a simplex of N Comp has no class";
      continue;
    }
    for (int i = l; i <= m; ++i)
      if (sd.elems[V[i]].back() != sd.full_set()) r.partition = false;
    cls[s] = l;
    ++r.class_sizes[l];
  }
  FaceIndex idx = face_index(tops);
  for (std::size_t s = 0; s < tops.size(); ++s) {
    const int l = cls[s];
    if (l == 0) continue;
    for (int j = 0; j <= m; ++j) {
      bool shared = false;
      for (int o : idx.at(drop(tops[s], j)))
        if (o != static_cast<int>(s) && cls[o] == l) shared = true;
      const bool expect = j != 0 && j != l - 1 && j != l;
      if (shared != expect && r.criterion) {
        r.criterion = false;
        r.detail = "C^" + std::to_string(l) + " face " + std::to_string(j) + (shared ? " is shared" : " is not shared");
      }
    }
  }
  return r;
}

CentralReport check_central(const SdPoset& sd) {
  CentralReport r;
  const int m = sd.m;
  auto tops = top_simplices(sd);
  const int centre = *sd.find({sd.full_set()});
  std::vector<char> central(tops.size(), 0);
  for (std::size_t s = 0; s < tops.size(); ++s) central[s] = tops[s][0] == centre;
  FaceIndex idx = face_index(tops);
  r.shares_m = true;
  for (std::size_t s = 0; s < tops.size(); ++s) {
    if (!central[s]) continue;
    ++r.central;
    for (int j = 0; j <= m; ++j) {
      bool shared = false;
      for (int o : idx.at(drop(tops[s], j)))
        if (o != static_cast<int>(s) && central[o]) shared = true;
      if (shared != (j > 0)) {
        r.shares_m = false;
        r.detail = "central face " + std::to_string(j) + (shared ? " is shared" : " is not shared");
      }
    }
  }
  Pieces p = pieces(sd, 0);
  r.contractible = homology(*sd.poset.induced(members(p.cen)).nerve()).trivial();
  return r;
}

ColimitReport chain_colimit_cat(const FinPoset& t, int level) {
  require_condition(t, level);
  ColimitReport r;
  ChainDiagram d = chain_diagram(t, level);
  r.objects = static_cast<long long>(d.chains.size());
  r.arrows = static_cast<long long>(d.arrows.size());
  const int N = t.size();
  Saturator s(1);
  // per chain: object nodes by position, arrow nodes by position pair
  std::vector<std::vector<int>> obj(d.chains.size());
  std::vector<std::map<std::pair<int, int>, int>> arr(d.chains.size());
  for (std::size_t c = 0; c < d.chains.size(); ++c) {
    const Chain& C = d.chains[c];
    for (int x : C) obj[c].push_back(s.add_generator(0, t.labels[x]));
    for (std::size_t i = 0; i < C.size(); ++i)
      for (std::size_t j = i + 1; j < C.size(); ++j) {
        int g = s.add_generator(1, t.labels[C[i]] + "<" + t.labels[C[j]]);
        s.set_src(1, 0, g, obj[c][i]);
        s.set_tgt(1, 0, g, obj[c][j]);
        arr[c][{static_cast<int>(i), static_cast<int>(j)}] = g;
      }
  }
  for (std::size_t c = 0; c < d.chains.size(); ++c) {
    const int len = static_cast<int>(d.chains[c].size());
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j)
        for (int l = j + 1; l < len; ++l) s.seed_comp(1, 0, arr[c][{i, j}], arr[c][{j, l}], arr[c][{i, l}]);
  }
  for (auto [w, u] : d.arrows) {
    auto pos = positions(d.chains[w], d.chains[u]);
    for (std::size_t i = 0; i < pos.size(); ++i) {
      s.merge(0, obj[w][i], obj[u][pos[i]]);
      for (std::size_t j = i + 1; j < pos.size(); ++j)
        s.merge(1, arr[w][{static_cast<int>(i), static_cast<int>(j)}], arr[u][{pos[i], pos[j]}]);
    }
  }
  Saturated sat = s.run();
  const NFoldCategory& P = *sat.cat;
  // classes back to T
  std::vector<int> obj_of(P.count(0), -1);
  std::vector<long long> arr_of(P.count(1), -1);
  bool well_defined = true;
  for (std::size_t c = 0; c < d.chains.size(); ++c) {
    const Chain& C = d.chains[c];
    for (std::size_t i = 0; i < C.size(); ++i) {
      int cell = sat.cell_of[0][obj[c][i]];
      if (obj_of[cell] >= 0 && obj_of[cell] != C[i]) well_defined = false;
      obj_of[cell] = C[i];
    }
    for (auto& [ij, g] : arr[c]) {
      int cell = sat.cell_of[1][g];
      long long v = static_cast<long long>(C[ij.first]) * N + C[ij.second];
      if (arr_of[cell] >= 0 && arr_of[cell] != v) well_defined = false;
      arr_of[cell] = v;
    }
  }
  long long strict = 0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) strict += t.less(a, b);
  long long units = 0, named = 0;
  bool free_composite = false, comp_ok = true;
  std::vector<char> seen_obj(N, 0);
  std::vector<char> seen_arr(static_cast<std::size_t>(N) * N, 0);
  bool injective = true;
  for (int x = 0; x < P.count(0); ++x) {
    if (obj_of[x] < 0 || seen_obj[obj_of[x]]) injective = false;
    if (obj_of[x] >= 0) seen_obj[obj_of[x]] = 1;
  }
  for (int f = 0; f < P.count(1); ++f) {
    if (P.is_unit(1, 0, f)) {
      ++units;
      continue;
    }
    if (arr_of[f] < 0) {
      free_composite = true;
      continue;
    }
    ++named;
    if (seen_arr[arr_of[f]]) injective = false;
    seen_arr[arr_of[f]] = 1;
    for (int g : P.starting_at(1, 0, P.tgt(1, 0, f))) {
      if (P.is_unit(1, 0, g) || arr_of[g] < 0) continue;
      const int h = P.comp(1, 0, f, g);
      if (arr_of[h] != (arr_of[f] / N) * N + arr_of[g] % N) comp_ok = false;
    }
  }
  r.ok = well_defined && injective && !free_composite && comp_ok && P.count(0) == N && units == N && named == strict;
  if (!r.ok)
    r.detail = "colimit has " + std::to_string(P.count(0)) + " objects and " + std::to_string(named) +
               " named arrows (T: " + std::to_string(N) + ", " + std::to_string(strict) + ")" +
               (free_composite ? ", free composites" : "") + (well_defined ? "" : ", classes mix elements");
  return r;
}

ColimitReport chain_colimit_nerve(const FinPoset& t, int level) {
  require_condition(t, level);
  ColimitReport r;
  ChainDiagram d = chain_diagram(t, level);
  r.objects = static_cast<long long>(d.chains.size());
  r.arrows = static_cast<long long>(d.arrows.size());
  SSet nt = t.nerve();
  std::vector<SSet> objs;
  std::vector<SimplicialMap> cocone;
  for (auto& c : d.chains) {
    objs.push_back(std_simplex(static_cast<int>(c.size()) - 1));
    cocone.push_back(map_by_vertices(objs.back(), nt, c));
  }
  std::vector<ColimitArrow> arrows;
  for (auto [w, u] : d.arrows)
    arrows.push_back({w, u, map_by_vertices(objs[w], objs[u], positions(d.chains[w], d.chains[u]))});
  Colimit colim = colimit_of_monos(objs, arrows);
  auto f = colimit_map(colim, cocone);
  if (!f) {
    r.detail = "the chain inclusions do not form a cocone";
    return r;
  }
  r.ok = is_isomorphism(*f, &r.detail);
  return r;
}

ColimitReport chain_colimit_diagonal(const FinPoset& t, int level, int n) {
  require_condition(t, level);
  ColimitReport r;
  ChainDiagram d = chain_diagram(t, level);
  r.objects = static_cast<long long>(d.chains.size());
  r.arrows = static_cast<long long>(d.arrows.size());
  CnDelta cn = cn_delta_union(t, level, n);
  SMSet nerve = nfold_nerve(cn.cat);
  SSet diag = diagonal(nerve);
  Cat tc = t.to_category();
  std::vector<SSet> simplex_of;  // Δ[|U|-1]
  std::vector<SSet> objs;
  std::vector<SimplicialMap> cocone;
  for (auto& c : d.chains) {
    simplex_of.push_back(std_simplex(static_cast<int>(c.size()) - 1));
    objs.push_back(product(std::vector<SSet>(n, simplex_of.back())));
  }
  auto vertex_seq = [](const SimplicialSet& s, const Simplex& x) {
    return s.model()->act(x.eta, s.key(x.nd_degree(), x.index));
  };
  for (std::size_t c = 0; c < d.chains.size(); ++c) {
    const Chain& C = d.chains[c];
    const SimplicialSet& sx = *simplex_of[c];
    cocone.push_back(map_from_keys(objs[c], diag, [&](int p, const Key& k) {
      std::vector<Key> chains;
      for (const Simplex& part : product_parts(k)) {
        std::vector<int> xs;
        for (int v : vertex_seq(sx, part)) xs.push_back(C[v]);
        chains.push_back(chain_key(*tc, xs));
      }
      return diagonal_key(nerve->locate(MultiIndex(n, p), external_array(*cn.cat, chains, p)));
    }));
  }
  std::vector<ColimitArrow> arrows;
  for (auto [w, u] : d.arrows) {
    SimplicialMap inc = map_by_vertices(simplex_of[w], simplex_of[u], positions(d.chains[w], d.chains[u]));
    arrows.push_back({w, u, map_from_keys(objs[w], objs[u], [&](int, const Key& k) {
                        std::vector<Simplex> parts;
                        for (const Simplex& part : product_parts(k)) parts.push_back(inc.apply(part));
                        return product_key(parts);
                      })});
  }
  Colimit colim = colimit_of_monos(objs, arrows);
  auto f = colimit_map(colim, cocone);
  if (!f) {
    r.detail = "the chain inclusions do not form a cocone";
    return r;
  }
  r.ok = is_isomorphism(*f, &r.detail);
  return r;
}

RetractReport retract_homology_suite(int m, int k, int n) {
  RetractReport r;
  SdPoset sd = sd_delta_poset(m);
  Pieces p = pieces(sd, k);
  std::vector<int> big, small;
  for (int x = 0; x < sd.poset.size(); ++x) {
    if (p.comp[x] || p.cen[x]) big.push_back(x);
    if ((p.comp[x] || p.cen[x]) && p.out[x]) small.push_back(x);
  }
  FinPoset tb = sd.poset.induced(big), ts = sd.poset.induced(small);
  std::vector<int> elem_map;
  for (int x : small) elem_map.push_back(static_cast<int>(std::lower_bound(big.begin(), big.end(), x) - big.begin()));
  SSet nb = tb.nerve(), ns = ts.nerve();
  r.nerve = homology_equivalence(map_by_vertices(ns, nb, elem_map));
  r.both_trivial = r.nerve.dom.trivial() && r.nerve.cod.trivial();
  if (n > 1) {
    CnDelta cs = cn_delta_union(ts, m - 1, n), cb = cn_delta_union(tb, m, n);
    NFoldFunctor f = union_inclusion(cs, ts, cb, tb, elem_map);
    SMSet Ns = nfold_nerve(cs.cat), Nb = nfold_nerve(cb.cat);
    SSet Ds = diagonal(Ns), Db = diagonal(Nb);
    r.diagonal = homology_equivalence(diagonal(nfold_nerve_map(f, Ns, Nb), Ds, Db));
    r.both_trivial = r.both_trivial && r.diagonal->dom.trivial() && r.diagonal->cod.trivial();
  }
  return r;
}

}  // namespace nfold
