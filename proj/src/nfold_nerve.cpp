#include "nfold/nfold_nerve.hpp"

#include <functional>

namespace nfold {

unsigned shape_of(const MultiIndex& p) {
  unsigned eps = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    if (p[a] > 0) eps |= 1u << a;
  return eps;
}

MultiIndex grid_dims(const MultiIndex& p) {
  MultiIndex g(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) g[a] = std::max(p[a], 1);
  return g;
}

namespace {

std::vector<int> strides(const MultiIndex& g) {
  std::vector<int> s(g.size(), 1);
  for (int a = static_cast<int>(g.size()) - 2; a >= 0; --a) s[a] = s[a + 1] * g[a + 1];
  return s;
}

int grid_size(const MultiIndex& g) {
  int s = 1;
  for (int v : g) s *= v;
  return s;
}

// Backtracking over arrays; with nd set, arrays with a slab of units are cut.
void enumerate_arrays(const NFoldCategory& d, const MultiIndex& p, bool nd, std::vector<Key>& out) {
  const int n = d.n();
  const unsigned eps = shape_of(p);
  const MultiIndex g = grid_dims(p);
  const auto st = strides(g);
  const int total = grid_size(g);
  std::vector<int> all(d.count(eps));
  for (int x = 0; x < d.count(eps); ++x) all[x] = x;

  auto slab_all_units = [&](const Key& arr, int a, int j) {
    MultiIndex c(n, 0);
    for (int idx = 0; idx < total; ++idx) {
      if ((idx / st[a]) % g[a] != j) continue;
      if (!d.is_unit(eps, a, arr[idx])) return false;
    }
    return true;
  };

  Key arr(total, -1);
  std::function<void(int)> rec = [&](int idx) {
    if (idx == total) {
      if (nd)
        for (int a = 1; a < n; ++a)
          for (int j = 0; j < p[a]; ++j)
            if (slab_all_units(arr, a, j)) return;
      out.push_back(arr);
      return;
    }
    budget_tick();
    const std::vector<int>* pool = &all;
    int via = -1;
    for (int a = 0; a < n; ++a) {
      if (p[a] == 0 || (idx / st[a]) % g[a] == 0) continue;
      via = a;
      break;
    }
    if (via >= 0) pool = &d.starting_at(eps, via, d.tgt(eps, via, arr[idx - st[via]]));
    for (int x : *pool) {
      bool ok = true;
      for (int a = via + 1; a < n && ok; ++a) {
        if (p[a] == 0 || (idx / st[a]) % g[a] == 0) continue;
        ok = d.src(eps, a, x) == d.tgt(eps, a, arr[idx - st[a]]);
      }
      if (!ok) continue;
      arr[idx] = x;
      // a slab along axis 0 is complete once its last cell is placed
      if (nd && p[0] > 0 && (idx + 1) % st[0] == 0 && slab_all_units(arr, 0, idx / st[0])) continue;
      rec(idx + 1);
    }
    arr[idx] = -1;
  };
  rec(0);
}

}  // namespace

NFoldNerveModel::NFoldNerveModel(NCat d, MultiIndex extent, bool nondegenerate_only)
    : d_(std::move(d)), extent_(std::move(extent)), nd_only_(nondegenerate_only) {}

std::vector<Key> NFoldNerveModel::candidates(const MultiIndex& p) const {
  std::vector<Key> out;
  enumerate_arrays(*d_, p, nd_only_, out);
  return out;
}

std::vector<Key> composable_arrays(NCat d, const MultiIndex& p) {
  std::vector<Key> out;
  enumerate_arrays(*d, p, false, out);
  return out;
}

int NFoldNerveModel::box(const MultiIndex& p, const Key& x, const MultiIndex& lo, const MultiIndex& hi) const {
  const int n = d_->n();
  const MultiIndex g = grid_dims(p);
  const auto st = strides(g);
  unsigned eps = shape_of(p);
  // Sub-grid of the cubes touching the box; a degenerate range of an axis
  // with p_a > 0 reads off the source of cube lo, or the target of the last.
  MultiIndex from(n), size(n);
  std::vector<int> face(n, -1);  // 0: source, 1: target, -1: none
  for (int a = 0; a < n; ++a) {
    if (p[a] == 0) {
      from[a] = 0;
      size[a] = 1;
    } else if (lo[a] < hi[a]) {
      from[a] = lo[a];
      size[a] = hi[a] - lo[a];
    } else if (lo[a] < p[a]) {
      from[a] = lo[a];
      size[a] = 1;
      face[a] = 0;
    } else {
      from[a] = p[a] - 1;
      size[a] = 1;
      face[a] = 1;
    }
  }
  const auto sst = strides(size);
  const int total = grid_size(size);
  std::vector<int> cur(total);
  for (int i = 0; i < total; ++i) {
    int idx = 0;
    for (int a = 0; a < n; ++a) idx += (from[a] + (i / sst[a]) % size[a]) * st[a];
    cur[i] = x[idx];
  }
  for (int a = 0; a < n; ++a) {
    if (face[a] < 0) continue;
    for (int& c : cur) c = face[a] ? d_->tgt(eps, a, c) : d_->src(eps, a, c);
    eps &= ~(1u << a);
  }
  MultiIndex sz = size;
  for (int a = 0; a < n; ++a) {
    if (sz[a] == 1) continue;
    auto s = strides(sz);
    MultiIndex nsz = sz;
    nsz[a] = 1;
    auto ns = strides(nsz);
    std::vector<int> next(grid_size(nsz));
    for (int i = 0; i < static_cast<int>(next.size()); ++i) {
      int base = 0;
      for (int b = 0; b < n; ++b) base += ((i / ns[b]) % nsz[b]) * s[b];
      int acc = cur[base];
      for (int t = 1; t < sz[a]; ++t) acc = d_->comp(eps, a, acc, cur[base + t * s[a]]);
      next[i] = acc;
    }
    cur = std::move(next);
    sz = std::move(nsz);
  }
  return cur[0];
}

Key NFoldNerveModel::act(const MultiOrdinalMap& theta, const Key& x) const {
  const int n = d_->n();
  const MultiIndex p = theta.target(), q = theta.source();
  const unsigned out_eps = shape_of(q);
  const MultiIndex g = grid_dims(q);
  const auto st = strides(g);
  Key out(grid_size(g));
  MultiIndex lo(n), hi(n);
  for (int i = 0; i < static_cast<int>(out.size()); ++i) {
    for (int a = 0; a < n; ++a) {
      int c = (i / st[a]) % g[a];
      lo[a] = theta.parts[a](q[a] == 0 ? 0 : c);
      hi[a] = q[a] == 0 ? lo[a] : theta.parts[a](c + 1);
    }
    int y = box(p, x, lo, hi);
    unsigned have = 0;
    for (int a = 0; a < n; ++a)
      if (lo[a] < hi[a]) have |= 1u << a;
    out[i] = d_->units(have, y, out_eps & ~have);
  }
  return out;
}

std::pair<MultiOrdinalMap, Key> NFoldNerveModel::normalize(const MultiIndex& p, const Key& x) const {
  const int n = d_->n();
  MultiOrdinalMap acc = MultiOrdinalMap::identity(p);
  Key cur = x;
  MultiIndex q = p;
  for (int a = 0; a < n; ++a) {
    int j = 0;
    while (j < q[a]) {
      const unsigned eps = shape_of(q);
      const MultiIndex g = grid_dims(q);
      const auto st = strides(g);
      const int total = grid_size(g);
      bool units = true;
      for (int idx = 0; idx < total && units; ++idx)
        if ((idx / st[a]) % g[a] == j && !d_->is_unit(eps, a, cur[idx])) units = false;
      if (!units) {
        ++j;
        continue;
      }
      Key next;
      if (q[a] == 1) {
        next = cur;
        for (int& c : next) c = d_->src(eps, a, c);
      } else {
        for (int idx = 0; idx < total; ++idx)
          if ((idx / st[a]) % g[a] != j) next.push_back(cur[idx]);
      }
      acc.parts[a] = OrdinalMap::codegeneracy(q[a] - 1, j).after(acc.parts[a]);
      --q[a];
      cur = std::move(next);
    }
  }
  return {acc, cur};
}

std::string NFoldNerveModel::label(const MultiIndex& p, const Key& x) const {
  const unsigned eps = shape_of(p);
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "; " : "") + d_->label(eps, x[i]);
  return s + "]";
}

MultiIndex longest_chains(const NFoldCategory& d) {
  const int n = d.n();
  MultiIndex out(n, 0);
  const int objs = d.count(0);
  for (int a = 0; a < n; ++a) {
    const unsigned e = 1u << a;
    std::vector<std::vector<int>> succ(objs);
    for (int x = 0; x < d.count(e); ++x)
      if (!d.is_unit(e, a, x)) succ[d.src(e, a, x)].push_back(d.tgt(e, a, x));
    std::vector<int> memo(objs, -1), state(objs, 0);
    std::function<int(int)> longest = [&](int v) -> int {
      if (state[v] == 2) return memo[v];
      if (state[v] == 1) throw UnsupportedInput("direction " + std::to_string(a) + " has a cycle of non-unit 1-cubes; pass explicit caps");
      state[v] = 1;
      int best = 0;
      for (int w : succ[v]) best = std::max(best, 1 + longest(w));
      state[v] = 2;
      return memo[v] = best;
    };
    for (int v = 0; v < objs; ++v) out[a] = std::max(out[a], longest(v));
  }
  return out;
}

SMSet nfold_nerve(NCat d, std::optional<MultiIndex> caps) {
  const bool fixed = caps.has_value();
  MultiIndex cap = fixed ? *caps : longest_chains(*d);
  for (int attempt = 0; attempt < 8; ++attempt) {
    MultiIndex probe = cap;
    for (int& v : probe) ++v;
    SMSet y = realize(std::make_shared<NFoldNerveModel>(d, probe));
    MultiIndex e = y->extent();
    bool over = false;
    for (std::size_t a = 0; a < cap.size(); ++a)
      if (e[a] > cap[a]) {
        over = true;
        cap[a] = e[a];
      }
    if (!over) return y;
    if (fixed) throw DimensionOverflow("n-fold nerve has totally non-degenerate cells beyond the given caps");
  }
  throw DimensionOverflow("n-fold nerve did not stabilize; pass explicit caps");
}

MultiSimplicialMap nfold_nerve_map(const NFoldFunctor& f, SMSet dom_nerve, SMSet cod_nerve) {
  return multi_map_from_keys(dom_nerve, cod_nerve, [&](const MultiIndex& p, const Key& k) {
    const unsigned eps = shape_of(p);
    Key out(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) out[i] = f.map[eps][k[i]];
    return out;
  });
}

}  // namespace nfold
