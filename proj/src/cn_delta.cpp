#include "nfold/cn_delta.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nfold/chains.hpp"
#include "nfold/hom_enum.hpp"
#include "nfold/nfold_nerve.hpp"

namespace nfold {

namespace {

// Every cell of [q]^{⊠n} of shape eps as (lo, hi).
void cube_cells(int q, int n, unsigned eps, const std::function<void(const std::vector<int>&, const std::vector<int>&)>& f) {
  std::vector<int> lo(n), hi(n);
  std::function<void(int)> rec = [&](int a) {
    if (a == n) {
      f(lo, hi);
      return;
    }
    for (lo[a] = 0; lo[a] <= q; ++lo[a]) {
      if (eps >> a & 1u) {
        for (hi[a] = lo[a]; hi[a] <= q; ++hi[a]) rec(a + 1);
      } else {
        hi[a] = lo[a];
        rec(a + 1);
      }
    }
  };
  rec(0);
}

}  // namespace

CnDelta cn_delta_union(const FinPoset& t, int level, int n) {
  auto cc = chain_condition(t, level);
  if (!cc.extends) throw PreconditionError("chain condition fails: " + cc.detail);
  Cat tc = t.to_category();
  std::vector<std::vector<char>> member;
  for (const Chain& c : maximal_chains(t)) {
    std::vector<char> m(t.size(), 0);
    for (int x : c) m[x] = 1;
    member.push_back(std::move(m));
  }
  auto in_one_chain = [member](const std::vector<int>& ends) {
    for (auto& m : member) {
      bool all = true;
      for (int v : ends)
        if (!m[v]) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  };
  CnDelta out;
  out.cat = external_product(std::vector<Cat>(n, tc), in_one_chain);
  out.x = t.nerve();
  out.n = n;
  out.cell = [d = out.cat, x = out.x, tc, n](int q, int idx, unsigned eps, const std::vector<int>& lo, const std::vector<int>& hi) {
    const Key& v = x->key(q, idx);
    Key k(n);
    for (int a = 0; a < n; ++a) k[a] = (eps >> a & 1u) ? poset_arrow(*tc, v[lo[a]], v[hi[a]]) : v[lo[a]];
    auto c = d->find_key(eps, k);
    if (!c) throw Error("cell outside the chain union");
    return *c;
  };
  return out;
}

NFoldFunctor union_inclusion(const CnDelta& small, const FinPoset& s, const CnDelta& big, const FinPoset& t,
                             const std::vector<int>& elem_map) {
  Cat sc = s.to_category(), tc = t.to_category();
  const int n = small.n;
  NFoldFunctor f{small.cat, big.cat, {}};
  for (unsigned eps = 0; eps <= small.cat->full(); ++eps) {
    f.map.emplace_back();
    for (int x = 0; x < small.cat->count(eps); ++x) {
      const Key& k = small.cat->key(eps, x);
      Key img(n);
      for (int a = 0; a < n; ++a)
        img[a] = (eps >> a & 1u) ? poset_arrow(*tc, elem_map[sc->src(k[a])], elem_map[sc->tgt(k[a])]) : elem_map[k[a]];
      auto y = big.cat->find_key(eps, img);
      if (!y) throw Error("cell " + small.cat->label(eps, x) + " is not in the larger union");
      f.map[eps].push_back(*y);
    }
  }
  return f;
}

bool union_is_comparability(const FinPoset& t, int level, int n, std::string* why) {
  CnDelta u = cn_delta_union(t, level, n);
  Cat tc = t.to_category();
  auto cmp = external_product(std::vector<Cat>(n, tc), [&t](const std::vector<int>& e) { return is_chain(t, e); });
  for (unsigned eps = 0; eps <= u.cat->full(); ++eps) {
    std::set<Key> a, b;
    for (int x = 0; x < u.cat->count(eps); ++x) a.insert(u.cat->key(eps, x));
    for (int x = 0; x < cmp->count(eps); ++x) b.insert(cmp->key(eps, x));
    if (a != b) {
      if (why) *why = "cells of shape " + eps_str(eps, n) + " differ";
      return false;
    }
  }
  return true;
}

Key cn_normal_key(const SimplicialSet& x, int q, int idx, const std::vector<int>& lo, const std::vector<int>& hi) {
  std::vector<int> s(lo);
  s.insert(s.end(), hi.begin(), hi.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  Simplex f = x.apply(OrdinalMap(q, s), SimplicialSet::nd(q, idx));
  auto pos = [&](int v) { return f.eta(static_cast<int>(std::lower_bound(s.begin(), s.end(), v) - s.begin())); };
  Key k{f.nd_degree(), f.index};
  for (int v : lo) k.push_back(pos(v));
  for (int v : hi) k.push_back(pos(v));
  return k;
}

SaturatedCnDelta cn_delta_saturated(SSet x, int n, SaturationLimits lim) {
  Saturator s(n, lim);
  const unsigned full = (1u << n) - 1;
  std::vector<std::map<Key, int>> node(full + 1);
  SaturatedCnDelta out;
  out.generator_key.resize(full + 1);
  auto key_of = [&](const Key& k, std::vector<int>& lo, std::vector<int>& hi) {
    lo.assign(k.begin() + 2, k.begin() + 2 + n);
    hi.assign(k.begin() + 2 + n, k.end());
  };
  for (int q = 0; q <= x->dim(); ++q)
    for (int idx = 0; idx < x->count(q); ++idx)
      for (unsigned eps = 0; eps <= full; ++eps)
        cube_cells(q, n, eps, [&](const std::vector<int>& lo, const std::vector<int>& hi) {
          std::vector<char> hit(q + 1, 0);
          for (int a = 0; a < n; ++a) hit[lo[a]] = hit[hi[a]] = 1;
          if (std::count(hit.begin(), hit.end(), 1) != q + 1) return;
          Key k{q, idx};
          k.insert(k.end(), lo.begin(), lo.end());
          k.insert(k.end(), hi.begin(), hi.end());
          std::string lab = x->label(q, idx) + "[";
          for (int a = 0; a < n; ++a) lab += (a ? "," : "") + std::to_string(lo[a]) + ((eps >> a & 1u) ? std::to_string(hi[a]) : std::string());
          node[eps][k] = s.add_generator(eps, lab + "]");
          out.generator_key[eps].push_back(k);
        });
  auto find_node = [&](unsigned eps, int q, int idx, const std::vector<int>& lo, const std::vector<int>& hi) {
    return node[eps].at(cn_normal_key(*x, q, idx, lo, hi));
  };
  std::vector<int> lo, hi;
  for (unsigned eps = 0; eps <= full; ++eps)
    for (auto& [k, g] : node[eps]) {
      key_of(k, lo, hi);
      for (int i = 0; i < n; ++i) {
        const unsigned bit = 1u << i;
        if (eps & bit) {
          auto l2 = lo, h2 = hi;
          h2[i] = lo[i];
          s.set_src(eps, i, g, find_node(eps & ~bit, k[0], k[1], l2, h2));
          l2 = lo, h2 = hi;
          l2[i] = hi[i];
          s.set_tgt(eps, i, g, find_node(eps & ~bit, k[0], k[1], l2, h2));
        } else {
          s.seed_unit(eps, i, g, node[eps | bit].at(k));
        }
      }
    }
  for (int q = 1; q <= x->dim(); ++q)
    for (int idx = 0; idx < x->count(q); ++idx)
      for (unsigned eps = 1; eps <= full; ++eps)
        for (int i = 0; i < n; ++i) {
          if (!(eps >> i & 1u)) continue;
          cube_cells(q, n, eps, [&](const std::vector<int>& l1, const std::vector<int>& h1) {
            for (int top = h1[i]; top <= q; ++top) {
              auto l2 = l1, h2 = h1, lc = l1, hc = h1;
              l2[i] = h1[i];
              h2[i] = top;
              hc[i] = top;
              s.seed_comp(eps, i, find_node(eps, q, idx, l1, h1), find_node(eps, q, idx, l2, h2),
                          find_node(eps, q, idx, lc, hc));
            }
          });
        }
  out.sat = s.run();
  out.cn.cat = out.sat.cat;
  out.cn.x = x;
  out.cn.n = n;
  auto nodes = std::make_shared<std::vector<std::map<Key, int>>>(std::move(node));
  out.cn.cell = [nodes, x, cell_of = out.sat.cell_of](int q, int idx, unsigned eps, const std::vector<int>& l,
                                                      const std::vector<int>& h) {
    return cell_of[eps][(*nodes)[eps].at(cn_normal_key(*x, q, idx, l, h))];
  };
  return out;
}

Key diagonal_array(const CnDelta& c, int p, int idx) {
  const int n = c.n;
  if (p == 0) return {c.cell(0, idx, 0, std::vector<int>(n, 0), std::vector<int>(n, 0))};
  const unsigned full = (1u << n) - 1;
  Key arr;
  std::vector<int> lo(n, 0), hi(n);
  std::function<void(int)> rec = [&](int a) {
    if (a == n) {
      for (int b = 0; b < n; ++b) hi[b] = lo[b] + 1;
      arr.push_back(c.cell(p, idx, full, lo, hi));
      return;
    }
    for (lo[a] = 0; lo[a] < p; ++lo[a]) rec(a + 1);
  };
  rec(0);
  return arr;
}

SimplicialMap cn_unit(const CnDelta& c, SMSet nerve, SSet diag) {
  return map_from_keys(c.x, diag, [&](int p, const Key& k) {
    int idx = *c.x->find(p, k);
    MultiSimplex ms = nerve->locate(MultiIndex(c.n, p), diagonal_array(c, p, idx));
    return diagonal_key(ms);
  });
}

SimplicialMap diagonal_nerve_map(const NFoldFunctor& f, SMSet dom_nerve, SSet dom_diag, SMSet cod_nerve, SSet cod_diag) {
  return diagonal(nfold_nerve_map(f, dom_nerve, cod_nerve), dom_diag, cod_diag);
}

AdjunctionOracle adjunction_oracle(const CnDelta& c, NCat d) {
  AdjunctionOracle r;
  SMSet nd = nfold_nerve(d);
  SSet dd = diagonal(nd);
  const SimplicialSet& x = *c.x;
  std::vector<std::vector<Key>> arrays(x.dim() + 1);
  for (int p = 0; p <= x.dim(); ++p)
    for (int i = 0; i < x.count(p); ++i) arrays[p].push_back(diagonal_array(c, p, i));
  std::set<std::vector<std::vector<Simplex>>> images;
  r.functors = enumerate_nfunctors(c.cat, d, [&](const NFoldFunctor& f) {
    SimplicialMap g{c.x, dd, {}};
    g.image.resize(x.dim() + 1);
    for (int p = 0; p <= x.dim(); ++p) {
      const unsigned eps = p == 0 ? 0u : d->full();
      for (const Key& arr : arrays[p]) {
        Key img(arr.size());
        for (std::size_t j = 0; j < arr.size(); ++j) img[j] = f.map[eps][arr[j]];
        MultiSimplex ms = nd->locate(MultiIndex(c.n, p), img);
        g.image[p].push_back(dd->locate(p, diagonal_key(ms)));
      }
    }
    if (!g.check()) r.images_are_maps = false;
    images.insert(g.image);
    return true;
  });
  r.distinct_images = static_cast<long long>(images.size());
  r.simplicial_maps = enumerate_simplicial_maps(c.x, dd);
  return r;
}

}  // namespace nfold
