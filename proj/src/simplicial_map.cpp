#include "nfold/simplicial_map.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nfold {

Simplex SimplicialMap::apply(const Simplex& s) const {
  const Simplex& fx = image[s.nd_degree()][s.index];
  return Simplex{fx.eta.after(s.eta), fx.index};
}

bool SimplicialMap::check(std::string* why) const {
  for (int q = 0; q <= dom->dim(); ++q) {
    if (static_cast<int>(image.size()) <= q || static_cast<int>(image[q].size()) != dom->count(q)) {
      if (why) *why = "image table incomplete in degree " + std::to_string(q);
      return false;
    }
    for (int x = 0; x < dom->count(q); ++x) {
      const Simplex& fx = image[q][x];
      if (fx.degree() != q || fx.index < 0 || fx.index >= cod->count(fx.nd_degree())) {
        if (why) *why = "image of " + dom->label(q, x) + " has the wrong degree";
        return false;
      }
      for (int j = 0; q > 0 && j <= q; ++j) {
        if (apply(dom->face(q, x, j)) != cod->face_of(fx, j)) {
          if (why) *why = "face " + std::to_string(j) + " does not commute at " + dom->label(q, x);
          return false;
        }
      }
    }
  }
  return true;
}

SimplicialMap SimplicialMap::then(const SimplicialMap& g) const {
  SimplicialMap h{dom, g.cod, image};
  for (auto& level : h.image)
    for (auto& s : level) s = g.apply(s);
  return h;
}

SimplicialMap identity_map(SSet x) {
  SimplicialMap f{x, x, {}};
  for (int q = 0; q <= x->dim(); ++q) {
    f.image.emplace_back();
    for (int i = 0; i < x->count(q); ++i) f.image[q].push_back(SimplicialSet::nd(q, i));
  }
  return f;
}

SimplicialMap map_from_keys(SSet dom, SSet cod, const std::function<Key(int, const Key&)>& fn) {
  SimplicialMap f{dom, cod, {}};
  for (int q = 0; q <= dom->dim(); ++q) {
    f.image.emplace_back();
    for (int i = 0; i < dom->count(q); ++i) {
      budget_tick();
      f.image[q].push_back(cod->locate(q, fn(q, dom->key(q, i))));
    }
  }
  return f;
}

SimplicialMap map_by_vertices(SSet dom, SSet cod, const std::vector<int>& vmap) {
  std::vector<std::map<std::vector<int>, int>> index(cod->dim() + 1);
  for (int q = 0; q <= cod->dim(); ++q)
    for (int i = 0; i < cod->count(q); ++i) {
      auto v = cod->vertices(SimplicialSet::nd(q, i));
      if (!index[q].emplace(v, i).second)
        throw UnsupportedInput("codomain simplices are not determined by their vertices");
    }
  SimplicialMap f{dom, cod, {}};
  for (int q = 0; q <= dom->dim(); ++q) {
    f.image.emplace_back();
    for (int i = 0; i < dom->count(q); ++i) {
      auto v = dom->vertices(SimplicialSet::nd(q, i));
      std::vector<int> w, sigma;
      for (int a : v) {
        int b = vmap.at(a);
        if (w.empty() || w.back() != b) w.push_back(b);
        sigma.push_back(static_cast<int>(w.size()) - 1);
      }
      int r = static_cast<int>(w.size()) - 1;
      auto it = r <= cod->dim() ? index[r].find(w) : index[0].end();
      if (r > cod->dim() || it == index[r].end())
        throw Error("vertex image of " + dom->label(q, i) + " is not a simplex of the codomain");
      f.image[q].push_back(Simplex{OrdinalMap(r, sigma), it->second});
    }
  }
  return f;
}

bool is_isomorphism(const SimplicialMap& f, std::string* why) {
  if (f.dom->dim() != f.cod->dim()) {
    if (why) *why = "dimensions differ";
    return false;
  }
  for (int q = 0; q <= f.dom->dim(); ++q) {
    if (f.dom->count(q) != f.cod->count(q)) {
      if (why) *why = "simplex counts differ in degree " + std::to_string(q);
      return false;
    }
    std::vector<bool> hit(f.cod->count(q), false);
    for (auto& s : f.image[q]) {
      if (!s.nondegenerate() || hit[s.index]) {
        if (why) *why = "not bijective on non-degenerate simplices in degree " + std::to_string(q);
        return false;
      }
      hit[s.index] = true;
    }
  }
  return f.check(why);
}

std::optional<SimplicialMap> colimit_map(const Colimit& c, const std::vector<SimplicialMap>& cocone) {
  if (cocone.empty()) return std::nullopt;
  SimplicialMap f{c.object, cocone[0].cod, {}};
  for (int q = 0; q <= c.object->dim(); ++q) {
    f.image.emplace_back();
    for (int i = 0; i < c.object->count(q); ++i) {
      const Key& k = c.object->key(q, i);  // owner object and index
      f.image[q].push_back(cocone[k[0]].image[q][k[1]]);
    }
  }
  for (std::size_t o = 0; o < cocone.size(); ++o)
    if (!(c.legs[o].then(f) == cocone[o])) return std::nullopt;
  return f;
}

Colimit colimit_of_monos(const std::vector<SSet>& objects, const std::vector<ColimitArrow>& arrows) {
  int top = -1;
  for (auto& o : objects) top = std::max(top, o->dim());
  // global ids per degree
  std::vector<std::vector<int>> offset(objects.size(), std::vector<int>(top + 1, 0));
  std::vector<int> total(top + 1, 0);
  for (int q = 0; q <= top; ++q)
    for (std::size_t o = 0; o < objects.size(); ++o) {
      offset[o][q] = total[q];
      total[q] += objects[o]->count(q);
    }
  std::vector<std::vector<int>> parent(top + 1);
  for (int q = 0; q <= top; ++q) {
    parent[q].resize(total[q]);
    std::iota(parent[q].begin(), parent[q].end(), 0);
  }
  auto root = [&](int q, int v) {
    while (parent[q][v] != v) v = parent[q][v] = parent[q][parent[q][v]];
    return v;
  };
  for (auto& a : arrows) {
    for (int q = 0; q <= objects[a.from]->dim(); ++q)
      for (int x = 0; x < objects[a.from]->count(q); ++x) {
        const Simplex& y = a.map.image[q][x];
        if (!y.nondegenerate()) throw UnsupportedInput("colimit arrow is not a monomorphism");
        int u = root(q, offset[a.from][q] + x), v = root(q, offset[a.to][q] + y.index);
        if (u != v) parent[q][std::max(u, v)] = std::min(u, v);
      }
  }
  // owner of a global id
  auto owner = [&](int q, int g) {
    int o = static_cast<int>(objects.size()) - 1;
    while (offset[o][q] > g || objects[o]->count(q) == 0 || g >= offset[o][q] + objects[o]->count(q)) --o;
    return o;
  };
  SimplicialSet::Builder b;
  std::vector<std::vector<int>> cls(top + 1);
  for (int q = 0; q <= top; ++q) {
    cls[q].assign(total[q], -1);
    for (int g = 0; g < total[q]; ++g) {
      int r = root(q, g);
      if (r != g) continue;
      int o = owner(q, g);
      int x = g - offset[o][q];
      cls[q][g] = b.add(q, {o, x}, objects[o]->label(q, x));
    }
    for (int g = 0; g < total[q]; ++g) cls[q][g] = cls[q][root(q, g)];
    if (q == 0) continue;
    for (int g = 0; g < total[q]; ++g) {
      if (root(q, g) != g) continue;
      int o = owner(q, g);
      int x = g - offset[o][q];
      std::vector<Simplex> faces;
      for (int j = 0; j <= q; ++j) {
        const Simplex& f = objects[o]->face(q, x, j);
        faces.push_back(Simplex{f.eta, cls[f.nd_degree()][offset[o][f.nd_degree()] + f.index]});
      }
      b.set_faces(q, cls[q][g], std::move(faces));
    }
  }
  Colimit out;
  out.object = b.build();
  for (std::size_t o = 0; o < objects.size(); ++o) {
    SimplicialMap leg{objects[o], out.object, {}};
    for (int q = 0; q <= objects[o]->dim(); ++q) {
      leg.image.emplace_back();
      for (int x = 0; x < objects[o]->count(q); ++x)
        leg.image[q].push_back(SimplicialSet::nd(q, cls[q][offset[o][q] + x]));
    }
    out.legs.push_back(std::move(leg));
  }
  return out;
}

EquivalenceReport homology_equivalence(const SimplicialMap& f) {
  EquivalenceReport rep;
  const SimplicialSet& X = *f.dom;
  const SimplicialSet& Y = *f.cod;

  int nx = 0, ny = 0;
  auto cx = components(X, &nx);
  auto cy = components(Y, &ny);
  std::vector<int> hit(ny, -1);
  bool pi0 = nx == ny;
  for (int v = 0; v < X.count(0) && pi0; ++v) {
    int a = cx[v], b = cy[f.image[0][v].index];
    if (hit[b] >= 0 && hit[b] != a) pi0 = false;
    hit[b] = a;
  }
  for (int b = 0; b < ny && pi0; ++b)
    if (hit[b] < 0) pi0 = false;
  rep.pi0 = pi0;

  ChainComplex CX = normalized_chains(X), CY = normalized_chains(Y);
  rep.dom = homology(CX);
  rep.cod = homology(CY);

  const int top = std::max(X.dim() + 1, Y.dim());
  ChainComplex cone;
  cone.dims.assign(top + 1, 0);
  cone.boundary.resize(top + 1);
  auto xdim = [&](int p) { return p >= 0 && p <= X.dim() ? X.count(p) : 0; };
  auto ydim = [&](int p) { return p >= 0 && p <= Y.dim() ? Y.count(p) : 0; };
  for (int p = 0; p <= top; ++p) cone.dims[p] = xdim(p - 1) + ydim(p);
  for (int p = 1; p <= top; ++p) {
    const int shift = xdim(p - 2);
    auto& cols = cone.boundary[p];
    for (int x = 0; x < xdim(p - 1); ++x) {
      SparseColumn col;
      if (p - 1 >= 1)
        for (auto& [r, v] : CX.boundary[p - 1][x]) col.emplace_back(r, -v);
      const Simplex& fx = f.image[p - 1][x];
      if (fx.nondegenerate()) col.emplace_back(shift + fx.index, 1);
      cols.push_back(std::move(col));
    }
    for (int y = 0; y < ydim(p); ++y) {
      SparseColumn col;
      for (auto& [r, v] : CY.boundary[p][y]) col.emplace_back(shift + r, v);
      cols.push_back(std::move(col));
    }
  }
  int valid = -1;
  if (X.truncated_at()) valid = *X.truncated_at() + 1;
  if (Y.truncated_at()) valid = valid < 0 ? *Y.truncated_at() : std::min(valid, *Y.truncated_at());
  cone.valid_below = valid;
  rep.cone = homology(cone);
  bool acyclic = true;
  for (std::size_t p = 0; p < rep.cone.betti.size(); ++p)
    if (rep.cone.betti[p] != 0 || !rep.cone.torsion[p].empty()) acyclic = false;
  rep.iso_below = valid < 0 ? -1 : valid - 1;
  rep.ok = pi0 && acyclic && rep.dom.same_groups(rep.cod);
  if (!pi0) rep.detail = "pi0 not bijective";
  else if (!acyclic) rep.detail = "mapping cone not acyclic: " + rep.cone.str();
  else if (!rep.ok) rep.detail = "homology groups differ";
  return rep;
}

}  // namespace nfold
