#include "nfold/nfoldcat.hpp"

#include <map>

namespace nfold {

std::string eps_str(unsigned eps, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += (eps >> i & 1u) ? '1' : '0';
  return s;
}

NFoldCategory::NFoldCategory(int n) : n_(n), cells_(1u << n) {
  for (auto& l : cells_) {
    l.src.resize(n);
    l.tgt.resize(n);
    l.unit.resize(n);
    l.comp.resize(n);
  }
}

long long NFoldCategory::total_cells() const {
  long long t = 0;
  for (unsigned e = 0; e <= full(); ++e) t += count(e);
  return t;
}

int NFoldCategory::add(unsigned eps, std::string label, Key key) {
  Level& l = cells_[eps];
  int x = static_cast<int>(l.label.size());
  l.label.push_back(std::move(label));
  l.key.push_back(std::move(key));
  for (int i = 0; i < n_; ++i) {
    l.src[i].push_back(-1);
    l.tgt[i].push_back(-1);
    l.unit[i].push_back(-1);
  }
  return x;
}

void NFoldCategory::set_compose(unsigned eps, int i, int first, int second, int result) {
  cells_[eps].comp[i][pair_key(first, second)] = result;
}

std::optional<int> NFoldCategory::compose(unsigned eps, int i, int first, int second) const {
  auto& m = cells_[eps].comp[i];
  auto it = m.find(pair_key(first, second));
  if (it == m.end()) return std::nullopt;
  return it->second;
}

int NFoldCategory::comp(unsigned eps, int i, int first, int second) const {
  auto c = compose(eps, i, first, second);
  if (!c)
    throw Error("composite in direction " + std::to_string(i) + " of " + label(eps, first) + " and " +
                label(eps, second) + " undefined");
  return *c;
}

bool NFoldCategory::is_unit(unsigned eps, int i, int x) const {
  const unsigned lower = eps & ~(1u << i);
  int s = src(eps, i, x);
  return s >= 0 && unit(lower, i, s) == x;
}

const std::vector<int>& NFoldCategory::starting_at(unsigned eps, int i, int s) const {
  static const std::vector<int> none;
  auto& b = cells_[eps].by_src;
  if (b.empty()) throw Error("n-fold category not finalized");
  if (s < 0 || s >= static_cast<int>(b[i].size())) return none;
  return b[i][s];
}

std::optional<int> NFoldCategory::find_key(unsigned eps, const Key& k) const {
  auto& m = cells_[eps].by_key;
  auto it = m.find(k);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

void NFoldCategory::finalize() {
  for (unsigned eps = 0; eps <= full(); ++eps) {
    Level& l = cells_[eps];
    l.by_key.clear();
    for (int x = 0; x < count(eps); ++x)
      if (!l.key[x].empty()) l.by_key.emplace(l.key[x], x);
    l.by_src.assign(n_, {});
    for (int i = 0; i < n_; ++i) {
      if (!(eps >> i & 1u)) continue;
      l.by_src[i].assign(count(eps & ~(1u << i)), {});
      for (int x = 0; x < count(eps); ++x)
        if (l.src[i][x] >= 0) l.by_src[i][l.src[i][x]].push_back(x);
    }
  }
}

int NFoldCategory::face(unsigned eps, int x, unsigned dirs, unsigned which) const {
  for (int i = 0; i < n_; ++i) {
    if (!(dirs >> i & 1u)) continue;
    x = (which >> i & 1u) ? tgt(eps, i, x) : src(eps, i, x);
    eps &= ~(1u << i);
  }
  return x;
}

int NFoldCategory::corner(unsigned eps, int x, unsigned which) const { return face(eps, x, eps, which); }

int NFoldCategory::units(unsigned eps, int x, unsigned dirs) const {
  for (int i = 0; i < n_; ++i) {
    if (!(dirs >> i & 1u)) continue;
    x = unit(eps, i, x);
    eps |= 1u << i;
  }
  return x;
}

bool NFoldCategory::check(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  auto bit = [](int i) { return 1u << i; };
  for (unsigned eps = 0; eps <= full(); ++eps)
    for (int x = 0; x < count(eps); ++x)
      for (int i = 0; i < n_; ++i) {
        if (eps & bit(i)) {
          int lim = count(eps & ~bit(i));
          if (src(eps, i, x) < 0 || src(eps, i, x) >= lim || tgt(eps, i, x) < 0 || tgt(eps, i, x) >= lim)
            return fail("source/target out of range at " + label(eps, x));
        } else {
          if (unit(eps, i, x) < 0 || unit(eps, i, x) >= count(eps | bit(i)))
            return fail("unit missing at " + label(eps, x));
        }
      }
  // sources and targets commute
  for (unsigned eps = 0; eps <= full(); ++eps)
    for (int x = 0; x < count(eps); ++x)
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
          if (i == j || !(eps & bit(i)) || !(eps & bit(j))) continue;
          unsigned ei = eps & ~bit(i), ej = eps & ~bit(j), eij = ei & ~bit(j);
          (void)eij;
          if (src(ei, j, src(eps, i, x)) != src(ej, i, src(eps, j, x))) return fail("s^i s^j != s^j s^i at " + label(eps, x));
          if (tgt(ei, j, tgt(eps, i, x)) != tgt(ej, i, tgt(eps, j, x))) return fail("t^i t^j != t^j t^i at " + label(eps, x));
          if (src(ej, i, tgt(eps, j, x)) != tgt(ei, j, src(eps, i, x))) return fail("s^i t^j != t^j s^i at " + label(eps, x));
        }
  // units
  for (unsigned eps = 0; eps <= full(); ++eps)
    for (int x = 0; x < count(eps); ++x)
      for (int i = 0; i < n_; ++i) {
        if (eps & bit(i)) continue;
        unsigned up = eps | bit(i);
        int u = unit(eps, i, x);
        if (src(up, i, u) != x || tgt(up, i, u) != x) return fail("s^i u^i != 1 at " + label(eps, x));
        for (int j = 0; j < n_; ++j) {
          if (j == i) continue;
          if (eps & bit(j)) {
            unsigned lo = eps & ~bit(j);
            if (src(up, j, u) != unit(lo, i, src(eps, j, x)) || tgt(up, j, u) != unit(lo, i, tgt(eps, j, x)))
              return fail("s^j u^i != u^i s^j at " + label(eps, x));
          } else {
            if (unit(up, j, u) != unit(eps | bit(j), i, unit(eps, j, x)))
              return fail("u^i u^j != u^j u^i at " + label(eps, x));
          }
        }
      }
  // categorical structure in each direction, and compatibility with the other directions
  for (unsigned eps = 0; eps <= full(); ++eps)
    for (int i = 0; i < n_; ++i) {
      if (!(eps & bit(i))) continue;
      const unsigned lo = eps & ~bit(i);
      for (int a = 0; a < count(eps); ++a) {
        if (comp(eps, i, unit(lo, i, src(eps, i, a)), a) != a || comp(eps, i, a, unit(lo, i, tgt(eps, i, a))) != a)
          return fail("unit law fails in direction " + std::to_string(i) + " at " + label(eps, a));
        for (int b : starting_at(eps, i, tgt(eps, i, a))) {
          budget_tick();
          auto c = compose(eps, i, a, b);
          if (!c) return fail("missing composite of " + label(eps, a) + " and " + label(eps, b));
          if (src(eps, i, *c) != src(eps, i, a) || tgt(eps, i, *c) != tgt(eps, i, b))
            return fail("composite has the wrong boundary at " + label(eps, a));
          for (int j = 0; j < n_; ++j) {
            if (j == i) continue;
            if (eps & bit(j)) {
              unsigned ej = eps & ~bit(j);
              if (src(eps, j, *c) != comp(ej, i, src(eps, j, a), src(eps, j, b)) ||
                  tgt(eps, j, *c) != comp(ej, i, tgt(eps, j, a), tgt(eps, j, b)))
                return fail("s^j does not preserve composition in direction " + std::to_string(i));
            } else {
              unsigned ej = eps | bit(j);
              if (unit(eps, j, *c) != comp(ej, i, unit(eps, j, a), unit(eps, j, b)))
                return fail("u^j does not preserve composition in direction " + std::to_string(i));
            }
          }
          for (int d : starting_at(eps, i, tgt(eps, i, b)))
            if (comp(eps, i, comp(eps, i, a, b), d) != comp(eps, i, a, comp(eps, i, b, d)))
              return fail("associativity fails in direction " + std::to_string(i));
        }
      }
    }
  // interchange: w x / y z with w -> x in direction i and w -> y in direction j
  for (unsigned eps = 0; eps <= full(); ++eps)
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        if (!(eps & bit(i)) || !(eps & bit(j))) continue;
        for (int w = 0; w < count(eps); ++w)
          for (int x : starting_at(eps, i, tgt(eps, i, w)))
            for (int y : starting_at(eps, j, tgt(eps, j, w)))
              for (int z : starting_at(eps, i, tgt(eps, i, y))) {
                budget_tick();
                if (src(eps, j, z) != tgt(eps, j, x)) continue;
                int l = comp(eps, i, comp(eps, j, w, y), comp(eps, j, x, z));
                int r = comp(eps, j, comp(eps, i, w, x), comp(eps, i, y, z));
                if (l != r) return fail("interchange fails at " + label(eps, w));
              }
      }
  return true;
}

bool NFoldFunctor::check(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const int n = dom->n();
  if (cod->n() != n) return fail("arity mismatch");
  for (unsigned eps = 0; eps <= dom->full(); ++eps) {
    if (static_cast<int>(map[eps].size()) != dom->count(eps)) return fail("map table has the wrong size");
    for (int x = 0; x < dom->count(eps); ++x) {
      int fx = map[eps][x];
      if (fx < 0 || fx >= cod->count(eps)) return fail("image out of range");
      for (int i = 0; i < n; ++i) {
        if (eps >> i & 1u) {
          unsigned lo = eps & ~(1u << i);
          if (cod->src(eps, i, fx) != map[lo][dom->src(eps, i, x)] || cod->tgt(eps, i, fx) != map[lo][dom->tgt(eps, i, x)])
            return fail("boundary not preserved at " + dom->label(eps, x));
          for (int b : dom->starting_at(eps, i, dom->tgt(eps, i, x)))
            if (map[eps][dom->comp(eps, i, x, b)] != cod->comp(eps, i, fx, map[eps][b]))
              return fail("composition not preserved at " + dom->label(eps, x));
        } else {
          unsigned up = eps | (1u << i);
          if (cod->unit(eps, i, fx) != map[up][dom->unit(eps, i, x)])
            return fail("unit not preserved at " + dom->label(eps, x));
        }
      }
    }
  }
  return true;
}

NFoldFunctor NFoldFunctor::then(const NFoldFunctor& g) const {
  NFoldFunctor h{dom, g.cod, map};
  for (unsigned eps = 0; eps < h.map.size(); ++eps)
    for (auto& v : h.map[eps]) v = g.map[eps][v];
  return h;
}

NFoldFunctor identity_nfunctor(NCat d) {
  NFoldFunctor f{d, d, {}};
  for (unsigned eps = 0; eps <= d->full(); ++eps) {
    f.map.emplace_back();
    for (int x = 0; x < d->count(eps); ++x) f.map[eps].push_back(x);
  }
  return f;
}

NCat from_category(const FinCat& c) {
  auto d = std::make_shared<NFoldCategory>(1);
  for (int a = 0; a < c.num_objects(); ++a) d->add(0, c.object_label(a));
  for (int f = 0; f < c.num_morphisms(); ++f) {
    d->add(1, c.morphism(f).label);
    d->set_src(1, 0, f, c.src(f));
    d->set_tgt(1, 0, f, c.tgt(f));
  }
  for (int a = 0; a < c.num_objects(); ++a) d->set_unit(0, 0, a, c.identity(a));
  for (int f = 0; f < c.num_morphisms(); ++f) {
    d->set_compose(1, 0, c.identity(c.src(f)), f, f);
    for (int g : c.out(c.tgt(f))) d->set_compose(1, 0, f, g, c.comp(g, f));
    d->set_compose(1, 0, f, c.identity(c.tgt(f)), f);
  }
  d->finalize();
  return d;
}

Cat to_category(const NFoldCategory& d, std::vector<int>* mor_map) {
  if (d.n() != 1) throw PreconditionError("not a 1-fold category");
  auto c = std::make_shared<FinCat>();
  for (int a = 0; a < d.count(0); ++a) {
    std::string l = d.label(0, a);
    while (c->find_object(l)) l += "'";
    c->add_object(l);
  }
  std::vector<int> id(d.count(1), -1);
  for (int a = 0; a < d.count(0); ++a) id[d.unit(0, 0, a)] = c->identity(a);
  for (int f = 0; f < d.count(1); ++f)
    if (id[f] < 0) id[f] = c->add_morphism(d.src(1, 0, f), d.tgt(1, 0, f), d.label(1, f));
  for (int f = 0; f < d.count(1); ++f)
    for (int g : d.starting_at(1, 0, d.tgt(1, 0, f))) c->set_compose(id[g], id[f], id[d.comp(1, 0, f, g)]);
  if (mor_map) *mor_map = id;
  return c;
}

Functor to_functor(const NFoldFunctor& f, Cat dom, Cat cod) {
  std::vector<int> md, mc;
  to_category(*f.dom, &md);
  to_category(*f.cod, &mc);
  Functor g{std::move(dom), std::move(cod), f.map[0], std::vector<int>(md.size())};
  for (std::size_t x = 0; x < md.size(); ++x) g.mor[md[x]] = mc[f.map[1][x]];
  return g;
}

NCat external_product(const std::vector<Cat>& cats, const std::function<bool(const std::vector<int>&)>& filter) {
  const int n = static_cast<int>(cats.size());
  auto d = std::make_shared<NFoldCategory>(n);
  std::vector<std::map<Key, int>> index(1u << n);
  std::vector<std::vector<Key>> tuples(1u << n);
  auto endpoints = [&](unsigned eps, const Key& t) {
    std::vector<int> e;
    for (int i = 0; i < n; ++i) {
      if (eps >> i & 1u) {
        e.push_back(cats[i]->src(t[i]));
        e.push_back(cats[i]->tgt(t[i]));
      } else {
        e.push_back(t[i]);
        e.push_back(t[i]);
      }
    }
    return e;
  };
  for (unsigned eps = 0; eps < (1u << n); ++eps) {
    Key t(n);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        if (filter && !filter(endpoints(eps, t))) return;
        std::string lab;
        for (int a = 0; a < n; ++a) {
          if (a) lab += "|";
          lab += (eps >> a & 1u) ? cats[a]->morphism(t[a]).label : cats[a]->object_label(t[a]);
        }
        index[eps][t] = d->add(eps, lab, t);
        tuples[eps].push_back(t);
        return;
      }
      int lim = (eps >> i & 1u) ? cats[i]->num_morphisms() : cats[i]->num_objects();
      for (t[i] = 0; t[i] < lim; ++t[i]) rec(i + 1);
    };
    rec(0);
  }
  auto look = [&](unsigned eps, const Key& t) {
    auto it = index[eps].find(t);
    if (it == index[eps].end()) throw Error("filtered external product is not closed");
    return it->second;
  };
  for (unsigned eps = 0; eps < (1u << n); ++eps)
    for (int x = 0; x < d->count(eps); ++x) {
      const Key& t = tuples[eps][x];
      for (int i = 0; i < n; ++i) {
        Key u = t;
        if (eps >> i & 1u) {
          unsigned lo = eps & ~(1u << i);
          u[i] = cats[i]->src(t[i]);
          d->set_src(eps, i, x, look(lo, u));
          u[i] = cats[i]->tgt(t[i]);
          d->set_tgt(eps, i, x, look(lo, u));
        } else {
          u[i] = cats[i]->identity(t[i]);
          d->set_unit(eps, i, x, look(eps | (1u << i), u));
        }
      }
    }
  d->finalize();
  for (unsigned eps = 0; eps < (1u << n); ++eps)
    for (int i = 0; i < n; ++i) {
      if (!(eps >> i & 1u)) continue;
      for (int x = 0; x < d->count(eps); ++x)
        for (int y : d->starting_at(eps, i, d->tgt(eps, i, x))) {
          Key u = tuples[eps][x];
          u[i] = cats[i]->comp(tuples[eps][y][i], u[i]);
          d->set_compose(eps, i, x, y, look(eps, u));
        }
    }
  return d;
}

NFoldFunctor external_functor(const std::vector<Functor>& fs, NCat dom, NCat cod) {
  NFoldFunctor f{dom, cod, {}};
  for (unsigned eps = 0; eps <= dom->full(); ++eps) {
    f.map.emplace_back();
    for (int x = 0; x < dom->count(eps); ++x) {
      Key t = dom->key(eps, x);
      for (std::size_t i = 0; i < fs.size(); ++i) t[i] = (eps >> i & 1u) ? fs[i].mor[t[i]] : fs[i].obj[t[i]];
      auto y = cod->find_key(eps, t);
      if (!y) throw Error("componentwise image of " + dom->label(eps, x) + " is not a cell of the codomain");
      f.map[eps].push_back(*y);
    }
  }
  return f;
}

NCat cartesian_product(const NFoldCategory& a, const NFoldCategory& b) {
  const int n = a.n();
  if (b.n() != n) throw PreconditionError("cartesian product needs equal arity");
  auto d = std::make_shared<NFoldCategory>(n);
  auto id = [&](unsigned eps, int x, int y) { return x * b.count(eps) + y; };
  for (unsigned eps = 0; eps <= a.full(); ++eps)
    for (int x = 0; x < a.count(eps); ++x)
      for (int y = 0; y < b.count(eps); ++y) d->add(eps, "(" + a.label(eps, x) + "," + b.label(eps, y) + ")");
  for (unsigned eps = 0; eps <= a.full(); ++eps)
    for (int x = 0; x < a.count(eps); ++x)
      for (int y = 0; y < b.count(eps); ++y)
        for (int i = 0; i < n; ++i) {
          if (eps >> i & 1u) {
            unsigned lo = eps & ~(1u << i);
            d->set_src(eps, i, id(eps, x, y), id(lo, a.src(eps, i, x), b.src(eps, i, y)));
            d->set_tgt(eps, i, id(eps, x, y), id(lo, a.tgt(eps, i, x), b.tgt(eps, i, y)));
          } else {
            unsigned up = eps | (1u << i);
            d->set_unit(eps, i, id(eps, x, y), id(up, a.unit(eps, i, x), b.unit(eps, i, y)));
          }
        }
  d->finalize();
  for (unsigned eps = 0; eps <= a.full(); ++eps)
    for (int i = 0; i < n; ++i) {
      if (!(eps >> i & 1u)) continue;
      for (int x = 0; x < a.count(eps); ++x)
        for (int x2 : a.starting_at(eps, i, a.tgt(eps, i, x)))
          for (int y = 0; y < b.count(eps); ++y)
            for (int y2 : b.starting_at(eps, i, b.tgt(eps, i, y)))
              d->set_compose(eps, i, id(eps, x, y), id(eps, x2, y2), id(eps, a.comp(eps, i, x, x2), b.comp(eps, i, y, y2)));
    }
  return d;
}

NCat unit_cube(int n) {
  auto one = FinPoset::from_relation(2, [](int a, int b) { return a <= b; }, {"0", "1"}).to_category();
  return external_product(std::vector<Cat>(n, one));
}

}  // namespace nfold
