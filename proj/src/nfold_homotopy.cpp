#include "nfold/nfold_homotopy.hpp"

#include <functional>

#include "nfold/nfold_nerve.hpp"
#include "nfold/product.hpp"

namespace nfold {

namespace {

Cat interval() {
  static const Cat one = FinPoset::from_relation(2, [](int a, int b) { return a <= b; }, {"0", "1"}).to_category();
  return one;
}

// Cell of [1]^{⊠n} of shape eps with every direction in eps going lo -> hi
// and every other direction at lo.
int cube_cell(const NFoldCategory& cube, unsigned eps, const std::vector<int>& lo, const std::vector<int>& hi) {
  const int n = cube.n();
  Key k(n);
  for (int a = 0; a < n; ++a) k[a] = (eps >> a & 1u) ? poset_arrow(*interval(), lo[a], hi[a]) : lo[a];
  return *cube.find_key(eps, k);
}

// Visits the grid cells of a p-array in key order.
void grid(int n, int p, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> c(n, 0);
  const int side = std::max(p, 1);
  std::function<void(int)> rec = [&](int a) {
    if (a == n) {
      f(c);
      return;
    }
    for (c[a] = 0; c[a] < side; ++c[a]) rec(a + 1);
  };
  rec(0);
}

}  // namespace

NFoldFunctor NFoldTransf::end(int e) const {
  NFoldFunctor f{dom, cod, {}};
  const int n = dom->n();
  for (unsigned eps = 0; eps <= dom->full(); ++eps) {
    const int y = cube_cell(*cube, eps, std::vector<int>(n, e), std::vector<int>(n, e));
    f.map.emplace_back();
    for (int x = 0; x < dom->count(eps); ++x) f.map[eps].push_back(alpha.map[eps][x * cube->count(eps) + y]);
  }
  return f;
}

bool NFoldTransf::check(std::string* why) const {
  if (!alpha.check(why)) return false;
  for (int e = 0; e <= 1; ++e)
    if (!end(e).check(why)) return false;
  return true;
}

NFoldTransf make_transf(NCat dom, NCat cod, std::vector<std::vector<int>> alpha_map) {
  NFoldTransf t;
  t.dom = dom;
  t.cod = cod;
  t.cube = unit_cube(dom->n());
  t.cylinder = cartesian_product(*dom, *t.cube);
  t.alpha = NFoldFunctor{t.cylinder, cod, std::move(alpha_map)};
  return t;
}

NFoldTransf external_transf(const std::vector<NatTransf>& alphas, NCat dom, NCat cod) {
  const int n = dom->n();
  if (static_cast<int>(alphas.size()) != n) throw PreconditionError("one transformation per direction");
  NCat cube = unit_cube(n);
  const FinCat& one = *interval();
  std::vector<std::vector<int>> map(dom->full() + 1);
  for (unsigned eps = 0; eps <= dom->full(); ++eps)
    for (int x = 0; x < dom->count(eps); ++x)
      for (int y = 0; y < cube->count(eps); ++y) {
        const Key &xk = dom->key(eps, x), &yk = cube->key(eps, y);
        Key img(n);
        for (int a = 0; a < n; ++a) {
          const NatTransf& al = alphas[a];
          if (eps >> a & 1u) {
            const int f = xk[a];
            const int e0 = one.src(yk[a]), e1 = one.tgt(yk[a]);
            if (e1 == 0)
              img[a] = al.F.mor[f];
            else if (e0 == 1)
              img[a] = al.G.mor[f];
            else
              img[a] = al.F.cod->comp(al.component[al.F.dom->tgt(f)], al.F.mor[f]);
          } else {
            img[a] = yk[a] == 0 ? al.F.obj[xk[a]] : al.G.obj[xk[a]];
          }
        }
        auto c = cod->find_key(eps, img);
        if (!c) throw Error("transformation leaves the codomain at " + dom->label(eps, x) + " x " + cube->label(eps, y));
        map[eps].push_back(*c);
      }
  return make_transf(dom, cod, std::move(map));
}

NFoldHomotopy transf_to_homotopy(const NFoldTransf& a) {
  NFoldHomotopy out;
  const int n = a.dom->n();
  out.dom_nerve = nfold_nerve(a.dom);
  out.cod_nerve = nfold_nerve(a.cod);
  out.dom_diag = diagonal(out.dom_nerve);
  out.cod_diag = diagonal(out.cod_nerve);
  SSet I = std_simplex(1);
  out.cylinder = product({out.dom_diag, I});
  const MultiSimplicialSet& ND = *out.dom_nerve;
  const MultiSimplicialSet& NE = *out.cod_nerve;
  auto key_in = [](const SimplicialSet& s, const Simplex& x) {
    return s.model()->act(x.eta, s.key(x.nd_degree(), x.index));
  };
  out.h = map_from_keys(out.cylinder, out.cod_diag, [&](int p, const Key& k) {
    auto parts = product_parts(k);
    MultiSimplex ms = diagonal_parts(ND, key_in(*out.dom_diag, parts[0]));
    Key arr = ND.model()->act(ms.eta, ND.key(ms.nd_degree(), ms.index));
    Key e = key_in(*I, parts[1]);
    const unsigned eps = p == 0 ? 0u : a.dom->full();
    Key img;
    int j = 0;
    grid(n, p, [&](const std::vector<int>& c) {
      std::vector<int> lo(n), hi(n);
      for (int b = 0; b < n; ++b) {
        lo[b] = e[c[b]];
        hi[b] = p == 0 ? lo[b] : e[c[b] + 1];
      }
      const int y = cube_cell(*a.cube, eps, lo, hi);
      img.push_back(a.alpha.map[eps][arr[j++] * a.cube->count(eps) + y]);
    });
    return diagonal_key(NE.locate(MultiIndex(n, p), img));
  });
  std::string why;
  out.ok = out.h.check(&why);
  if (!out.ok) out.detail = why;
  for (int e = 0; e <= 1; ++e) {
    SimplicialMap end{out.dom_diag, out.cod_diag, {}};
    for (int q = 0; q <= out.dom_diag->dim(); ++q) {
      end.image.emplace_back();
      for (int x = 0; x < out.dom_diag->count(q); ++x) {
        Key k = product_key({SimplicialSet::nd(q, x), Simplex{OrdinalMap::constant(q, 0, 0), e}});
        end.image[q].push_back(out.h.apply(out.cylinder->locate(q, k)));
      }
    }
    SimplicialMap expect = diagonal(nfold_nerve_map(a.end(e), out.dom_nerve, out.cod_nerve), out.dom_diag, out.cod_diag);
    if (!(end == expect)) {
      out.ok = false;
      out.detail = "homotopy does not restrict to δ*N^n of the end functor";
    }
    (e == 0 ? out.end0 : out.end1) = std::move(end);
  }
  return out;
}

Key external_array(const NFoldCategory& ext, const std::vector<Key>& chains, int p) {
  const int n = ext.n();
  const unsigned eps = p == 0 ? 0u : ext.full();
  Key arr;
  grid(n, p, [&](const std::vector<int>& c) {
    Key k(n);
    for (int a = 0; a < n; ++a) k[a] = p == 0 ? chains[a][0] : chains[a][c[a] + 1];
    auto x = ext.find_key(eps, k);
    if (!x) throw Error("array leaves the external product");
    arr.push_back(*x);
  });
  return arr;
}

SimplicialMap product_to_diagonal(const NFoldCategory& ext, const std::vector<SSet>& nerves, SSet prod, SMSet ext_nerve,
                                  SSet diag) {
  return map_from_keys(prod, diag, [&](int p, const Key& k) {
    auto parts = product_parts(k);
    std::vector<Key> chains;
    for (std::size_t a = 0; a < parts.size(); ++a)
      chains.push_back(nerves[a]->model()->act(parts[a].eta, nerves[a]->key(parts[a].nd_degree(), parts[a].index)));
    return diagonal_key(ext_nerve->locate(MultiIndex(ext.n(), p), external_array(ext, chains, p)));
  });
}

}  // namespace nfold
