#include "nfold/restriction.hpp"

namespace nfold {

namespace {

// Bits of eps that lie in mask, packed in the order of mask's bits.
unsigned compress(unsigned eps, unsigned mask) {
  unsigned out = 0;
  int t = 0;
  for (int i = 0; mask >> i; ++i)
    if (mask >> i & 1u) {
      if (eps >> i & 1u) out |= 1u << t;
      ++t;
    }
  return out;
}

unsigned spread(unsigned packed, unsigned mask) {
  unsigned out = 0;
  int t = 0;
  for (int i = 0; mask >> i; ++i)
    if (mask >> i & 1u) {
      if (packed >> t & 1u) out |= 1u << i;
      ++t;
    }
  return out;
}

int packed_dir(int i, unsigned mask) { return __builtin_popcount(mask & ((1u << i) - 1)); }

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

NCat forgetful_U(const NFoldCategory& d, unsigned k) {
  const int m = __builtin_popcount(k);
  auto u = std::make_shared<NFoldCategory>(m);
  for (unsigned e = 0; e <= u->full(); ++e) {
    unsigned eps = spread(e, k);
    for (int x = 0; x < d.count(eps); ++x) u->add(e, d.label(eps, x), d.key(eps, x));
  }
  for (unsigned e = 0; e <= u->full(); ++e) {
    unsigned eps = spread(e, k);
    for (int j = 0; j < m; ++j) {
      int i = __builtin_ctz(spread(1u << j, k));
      for (int x = 0; x < d.count(eps); ++x) {
        if (e >> j & 1u) {
          u->set_src(e, j, x, d.src(eps, i, x));
          u->set_tgt(e, j, x, d.tgt(eps, i, x));
        } else {
          u->set_unit(e, j, x, d.unit(eps, i, x));
        }
      }
    }
  }
  u->finalize();
  for (unsigned e = 0; e <= u->full(); ++e) {
    unsigned eps = spread(e, k);
    for (int j = 0; j < m; ++j) {
      if (!(e >> j & 1u)) continue;
      int i = __builtin_ctz(spread(1u << j, k));
      for (int x = 0; x < d.count(eps); ++x)
        for (int x2 : d.starting_at(eps, i, d.tgt(eps, i, x))) u->set_compose(e, j, x, x2, d.comp(eps, i, x, x2));
    }
  }
  return u;
}

NFoldFunctor forgetful_U(const NFoldFunctor& f, unsigned k, NCat u_dom, NCat u_cod) {
  NFoldFunctor g{u_dom, u_cod, {}};
  for (unsigned e = 0; e <= u_dom->full(); ++e) g.map.push_back(f.map[spread(e, k)]);
  return g;
}

NCat right_adjoint_R(const NFoldCategory& e, unsigned k, int n) {
  if (__builtin_popcount(k) != e.n()) throw PreconditionError("k must select as many directions as E has");
  auto r = std::make_shared<NFoldCategory>(n);
  const unsigned full = r->full();
  // families[eps][cell] = E-cube per corner
  std::vector<std::vector<Key>> fam(full + 1);
  auto base = [&](unsigned eps) { return compress(eps & k, k); };
  auto id_of = [&](unsigned eps, const Key& f) {
    long long id = 0, mul = 1;
    const long long radix = e.count(base(eps));
    for (int v : f) {
      id += v * mul;
      mul *= radix;
    }
    return static_cast<int>(id);
  };
  for (unsigned eps = 0; eps <= full; ++eps) {
    const unsigned J = eps & ~k;
    const int corners = 1 << __builtin_popcount(J);
    const long long radix = e.count(base(eps));
    const long long total = ipow(radix, corners);
    if (total > 2'000'000) throw ResourceError("right adjoint too large");
    for (long long id = 0; id < total; ++id) {
      Key f(corners);
      long long v = id;
      for (int c = 0; c < corners; ++c) {
        f[c] = static_cast<int>(v % radix);
        v /= radix;
      }
      std::string lab = "{";
      for (int c = 0; c < corners; ++c) lab += (c ? "," : "") + e.label(base(eps), f[c]);
      r->add(eps, lab + "}", f);
      fam[eps].push_back(std::move(f));
    }
  }
  for (unsigned eps = 0; eps <= full; ++eps) {
    const unsigned J = eps & ~k;
    const unsigned c0 = base(eps);
    for (int x = 0; x < r->count(eps); ++x) {
      const Key& f = fam[eps][x];
      for (int i = 0; i < n; ++i) {
        const unsigned bit = 1u << i;
        if (eps & bit) {
          const unsigned lo = eps & ~bit;
          const unsigned Jl = lo & ~k;
          Key s(std::size_t{1} << __builtin_popcount(Jl)), t(s.size());
          for (unsigned c = 0; c < s.size(); ++c) {
            unsigned M = spread(c, Jl);
            if (k & bit) {
              int ci = packed_dir(i, k);
              s[c] = e.src(c0, ci, f[compress(M, J)]);
              t[c] = e.tgt(c0, ci, f[compress(M, J)]);
            } else {
              s[c] = f[compress(M, J)];
              t[c] = f[compress(M | bit, J)];
            }
          }
          r->set_src(eps, i, x, id_of(lo, s));
          r->set_tgt(eps, i, x, id_of(lo, t));
        } else {
          const unsigned up = eps | bit;
          const unsigned Ju = up & ~k;
          Key u(std::size_t{1} << __builtin_popcount(Ju));
          for (unsigned c = 0; c < u.size(); ++c) {
            unsigned M = spread(c, Ju);
            u[c] = (k & bit) ? e.unit(c0, packed_dir(i, k), f[compress(M, J)]) : f[compress(M & ~bit, J)];
          }
          r->set_unit(eps, i, x, id_of(up, u));
        }
      }
    }
  }
  r->finalize();
  for (unsigned eps = 0; eps <= full; ++eps) {
    const unsigned J = eps & ~k;
    const unsigned c0 = base(eps);
    for (int i = 0; i < n; ++i) {
      const unsigned bit = 1u << i;
      if (!(eps & bit)) continue;
      for (int x = 0; x < r->count(eps); ++x)
        for (int y : r->starting_at(eps, i, r->tgt(eps, i, x))) {
          const Key &a = fam[eps][x], &b = fam[eps][y];
          Key c(a.size());
          bool ok = true;
          for (unsigned w = 0; w < c.size() && ok; ++w) {
            if (k & bit) {
              auto v = e.compose(c0, packed_dir(i, k), a[w], b[w]);
              ok = v.has_value();
              if (ok) c[w] = *v;
            } else {
              c[w] = (spread(w, J) & bit) ? b[w] : a[w];
            }
          }
          if (ok) r->set_compose(eps, i, x, y, id_of(eps, c));
        }
    }
  }
  return r;
}

NFoldFunctor adjunct_R(const NFoldFunctor& g, unsigned k, NCat d, NCat re) {
  NFoldFunctor f{d, re, {}};
  const NFoldCategory& e = *g.cod;
  for (unsigned eps = 0; eps <= d->full(); ++eps) {
    const unsigned J = eps & ~k;
    const unsigned c0 = compress(eps & k, k);
    const int corners = 1 << __builtin_popcount(J);
    const long long radix = e.count(c0);
    f.map.emplace_back();
    for (int x = 0; x < d->count(eps); ++x) {
      long long id = 0, mul = 1;
      for (int c = 0; c < corners; ++c) {
        int face = d->face(eps, x, J, spread(static_cast<unsigned>(c), J));
        id += g.map[c0][face] * mul;
        mul *= radix;
      }
      f.map[eps].push_back(static_cast<int>(id));
    }
  }
  return f;
}

}  // namespace nfold
