#include "nfold/catcore.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "nfold/product.hpp"

namespace nfold {

int FinCat::add_object(std::string label) {
  int a = num_objects();
  if (!object_index_.emplace(label, a).second) throw Error("duplicate object label " + label);
  objects_.push_back(std::move(label));
  out_.emplace_back();
  in_.emplace_back();
  int id = static_cast<int>(morphisms_.size());
  morphisms_.push_back({a, a, "1_" + objects_[a]});
  identity_.push_back(id);
  return a;
}

int FinCat::add_morphism(int src, int tgt, std::string label) {
  int f = num_morphisms();
  morphisms_.push_back({src, tgt, std::move(label)});
  out_[src].push_back(f);
  in_[tgt].push_back(f);
  return f;
}

void FinCat::set_compose(int g, int f, int h) { compose_[pair_key(g, f)] = h; }

std::optional<int> FinCat::compose(int g, int f) const {
  if (tgt(f) != src(g)) return std::nullopt;
  if (is_identity(f)) return g;
  if (is_identity(g)) return f;
  auto it = compose_.find(pair_key(g, f));
  if (it == compose_.end()) return std::nullopt;
  return it->second;
}

int FinCat::comp(int g, int f) const {
  auto h = compose(g, f);
  if (!h) throw Error("composite " + morphisms_[g].label + " o " + morphisms_[f].label + " undefined");
  return *h;
}

std::vector<int> FinCat::hom(int a, int b) const {
  std::vector<int> r;
  if (a == b) r.push_back(identity_[a]);
  for (int f : out_[a])
    if (tgt(f) == b) r.push_back(f);
  return r;
}

std::optional<int> FinCat::find_object(const std::string& label) const {
  auto it = object_index_.find(label);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

bool FinCat::check(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  for (auto& m : morphisms_)
    if (m.src < 0 || m.src >= num_objects() || m.tgt < 0 || m.tgt >= num_objects())
      return fail("morphism " + m.label + " has an endpoint outside the objects");
  for (int a = 0; a < num_objects(); ++a)
    if (src(identity_[a]) != a || tgt(identity_[a]) != a) return fail("bad identity");
  for (int f = 0; f < num_morphisms(); ++f)
    for (int g : out_[tgt(f)]) {
      auto h = compose(g, f);
      if (!h) return fail("missing composite " + morphisms_[g].label + " o " + morphisms_[f].label);
      if (src(*h) != src(f) || tgt(*h) != tgt(g)) return fail("composite with wrong endpoints");
    }
  for (int f = 0; f < num_morphisms(); ++f) {
    if (is_identity(f)) continue;
    for (int g : out_[tgt(f)])
      for (int h : out_[tgt(g)]) {
        budget_tick();
        if (comp(h, comp(g, f)) != comp(comp(h, g), f))
          return fail("associativity fails at " + morphisms_[h].label + "," + morphisms_[g].label + "," +
                      morphisms_[f].label);
      }
  }
  return true;
}

int FinCat::longest_chain() const {
  // longest path in the graph of non-identity morphisms
  const int n = num_objects();
  std::vector<int> state(n, 0), best(n, 0);
  bool cyclic = false;
  std::function<void(int)> dfs = [&](int a) {
    state[a] = 1;
    for (int f : out_[a]) {
      int b = tgt(f);
      if (state[b] == 1) {
        cyclic = true;
        continue;
      }
      if (state[b] == 0) dfs(b);
      best[a] = std::max(best[a], best[b] + 1);
    }
    state[a] = 2;
  };
  for (int a = 0; a < n; ++a)
    if (!state[a]) dfs(a);
  if (cyclic) return -1;
  int L = 0;
  for (int a = 0; a < n; ++a) L = std::max(L, best[a]);
  return L;
}

bool FinCat::is_preorder() const {
  for (int a = 0; a < num_objects(); ++a) {
    std::set<int> seen;
    for (int f : out_[a])
      if (!seen.insert(tgt(f)).second || tgt(f) == a) return false;
  }
  return true;
}

FinPoset FinPoset::from_relation(int n, const std::function<bool(int, int)>& leq, std::vector<std::string> labels) {
  FinPoset p;
  p.labels = std::move(labels);
  if (static_cast<int>(p.labels.size()) != n) {
    p.labels.clear();
    for (int i = 0; i < n; ++i) p.labels.push_back(std::to_string(i));
  }
  p.le.assign(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p.le[a][b] = leq(a, b) ? 1 : 0;
  return p;
}

bool FinPoset::check(std::string* why) const {
  const int n = size();
  for (int a = 0; a < n; ++a) {
    if (!le[a][a]) {
      if (why) *why = "not reflexive at " + labels[a];
      return false;
    }
    for (int b = 0; b < n; ++b) {
      if (a != b && le[a][b] && le[b][a]) {
        if (why) *why = "not antisymmetric at " + labels[a] + "," + labels[b];
        return false;
      }
      if (!le[a][b]) continue;
      for (int c = 0; c < n; ++c)
        if (le[b][c] && !le[a][c]) {
          if (why) *why = "not transitive at " + labels[a] + "," + labels[b] + "," + labels[c];
          return false;
        }
    }
  }
  return true;
}

std::vector<std::pair<int, int>> FinPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (less(a, c) && less(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

FinPoset FinPoset::induced(const std::vector<int>& elems) const {
  FinPoset p;
  for (int e : elems) p.labels.push_back(labels[e]);
  const int n = static_cast<int>(elems.size());
  p.le.assign(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p.le[a][b] = le[elems[a]][elems[b]];
  return p;
}

bool FinPoset::up_closed(const std::vector<char>& member) const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (member[a] && le[a][b] && !member[b]) return false;
  return true;
}

bool FinPoset::down_closed(const std::vector<char>& member) const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (member[b] && le[a][b] && !member[a]) return false;
  return true;
}

std::optional<int> FinPoset::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

Cat FinPoset::to_category() const {
  auto c = std::make_shared<FinCat>();
  const int n = size();
  for (int a = 0; a < n; ++a) c->add_object(labels[a]);
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) arrow[a][a] = c->identity(a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (less(a, b)) arrow[a][b] = c->add_morphism(a, b, labels[a] + "<=" + labels[b]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      for (int d = 0; d < n; ++d)
        if (less(b, d)) c->set_compose(arrow[b][d], arrow[a][b], arrow[a][d]);
    }
  return c;
}

SSet FinPoset::nerve() const {
  return order_complex(size(), [le = le](int a, int b) { return le[a][b] != 0; }, labels);
}

int poset_arrow(const FinCat& c, int a, int b) {
  if (a == b) return c.identity(a);
  for (int f : c.out(a))
    if (c.tgt(f) == b) return f;
  throw Error("no arrow " + c.object_label(a) + " -> " + c.object_label(b));
}

bool Functor::check(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (static_cast<int>(obj.size()) != dom->num_objects() || static_cast<int>(mor.size()) != dom->num_morphisms())
    return fail("functor tables have the wrong size");
  for (int a = 0; a < dom->num_objects(); ++a)
    if (mor[dom->identity(a)] != cod->identity(obj[a])) return fail("identity not preserved at " + dom->object_label(a));
  for (int f = 0; f < dom->num_morphisms(); ++f) {
    int g = mor[f];
    if (cod->src(g) != obj[dom->src(f)] || cod->tgt(g) != obj[dom->tgt(f)])
      return fail("endpoints not preserved at " + dom->morphism(f).label);
  }
  for (int f = 0; f < dom->num_morphisms(); ++f)
    for (int g : dom->out(dom->tgt(f)))
      if (mor[dom->comp(g, f)] != cod->comp(mor[g], mor[f]))
        return fail("composition not preserved at " + dom->morphism(g).label + " o " + dom->morphism(f).label);
  return true;
}

Functor Functor::then(const Functor& g) const {
  Functor h{dom, g.cod, obj, mor};
  for (auto& a : h.obj) a = g.obj[a];
  for (auto& f : h.mor) f = g.mor[f];
  return h;
}

Functor identity_functor(Cat c) {
  Functor f{c, c, {}, {}};
  for (int a = 0; a < c->num_objects(); ++a) f.obj.push_back(a);
  for (int m = 0; m < c->num_morphisms(); ++m) f.mor.push_back(m);
  return f;
}

Functor poset_functor(Cat dom, Cat cod, const std::vector<int>& objmap) {
  Functor f{dom, cod, objmap, {}};
  for (int m = 0; m < dom->num_morphisms(); ++m)
    f.mor.push_back(poset_arrow(*cod, objmap[dom->src(m)], objmap[dom->tgt(m)]));
  return f;
}

bool NatTransf::check(std::string* why) const {
  const FinCat& C = *F.dom;
  const FinCat& D = *F.cod;
  for (int a = 0; a < C.num_objects(); ++a) {
    int c = component[a];
    if (D.src(c) != F.obj[a] || D.tgt(c) != G.obj[a]) {
      if (why) *why = "component at " + C.object_label(a) + " has the wrong endpoints";
      return false;
    }
  }
  for (int f = 0; f < C.num_morphisms(); ++f) {
    int a = C.src(f), b = C.tgt(f);
    if (D.comp(G.mor[f], component[a]) != D.comp(component[b], F.mor[f])) {
      if (why) *why = "naturality square fails at " + C.morphism(f).label;
      return false;
    }
  }
  return true;
}

namespace {

class CategoryNerveModel : public SimplicialModel {
 public:
  CategoryNerveModel(Cat c, int max_degree, std::optional<int> trunc)
      : c_(std::move(c)), max_(max_degree), trunc_(trunc) {}

  int max_degree() const override { return max_; }
  std::optional<int> truncation() const override { return trunc_; }
  bool candidates_nondegenerate() const override { return true; }

  std::vector<Key> candidates(int p) const override {
    std::vector<Key> out;
    Key cur;
    std::function<void(int, int)> rec = [&](int obj, int left) {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (int f : c_->out(obj)) {
        cur.push_back(f);
        rec(c_->tgt(f), left - 1);
        cur.pop_back();
      }
    };
    for (int a = 0; a < c_->num_objects(); ++a) {
      cur = {a};
      rec(a, p);
    }
    return out;
  }

  Key act(const OrdinalMap& theta, const Key& x) const override {
    const int p = static_cast<int>(x.size()) - 1;
    auto obj_at = [&](int j) { return j == 0 ? x[0] : c_->tgt(x[j]); };
    (void)p;
    Key y;
    y.push_back(obj_at(theta(0)));
    for (int i = 1; i <= theta.source(); ++i) {
      int a = theta(i - 1), b = theta(i);
      if (a == b) {
        y.push_back(c_->identity(obj_at(a)));
        continue;
      }
      int h = x[a + 1];
      for (int t = a + 2; t <= b; ++t) h = c_->comp(x[t], h);
      y.push_back(h);
    }
    return y;
  }

  std::string label(int p, const Key& x) const override {
    if (p == 0) return c_->object_label(x[0]);
    std::string s;
    for (int i = 1; i <= p; ++i) s += (i > 1 ? "," : "") + c_->morphism(x[i]).label;
    return "(" + s + ")";
  }

 private:
  Cat c_;
  int max_;
  std::optional<int> trunc_;
};

}  // namespace

SSet nerve(Cat c, std::optional<int> cap) {
  int L = c->longest_chain();
  if (L < 0) {
    if (!cap) throw DimensionOverflow("category has composable loops; an explicit cap is required");
    return realize(std::make_shared<CategoryNerveModel>(c, *cap, *cap));
  }
  if (cap && *cap < L)
    throw DimensionOverflow("non-degenerate chain of length " + std::to_string(L) + " exceeds cap " +
                            std::to_string(*cap));
  return realize(std::make_shared<CategoryNerveModel>(c, L, std::nullopt));
}

SimplicialMap nerve_map(const Functor& f, SSet dom_nerve, SSet cod_nerve) {
  return map_from_keys(dom_nerve, cod_nerve, [&](int p, const Key& x) {
    Key y;
    y.push_back(f.obj[x[0]]);
    for (int i = 1; i <= p; ++i) y.push_back(f.mor[x[i]]);
    return y;
  });
}

NerveHomotopy nat_transf_to_homotopy(const NatTransf& a) {
  NerveHomotopy out;
  const FinCat& D = *a.F.cod;
  SSet NC = nerve(a.F.dom);
  SSet ND = nerve(a.F.cod);
  SSet I = std_simplex(1);
  out.cylinder = product({NC, I});
  auto chain_of = [&](const Simplex& s) {
    // key of eta^* y in NC
    return NC->model()->act(s.eta, NC->key(s.nd_degree(), s.index));
  };
  out.h = map_from_keys(out.cylinder, ND, [&](int p, const Key& k) {
    auto parts = product_parts(k);
    Key chain = chain_of(parts[0]);
    Key e = I->model()->act(parts[1].eta, I->key(parts[1].nd_degree(), parts[1].index));
    auto obj_at = [&](int j) { return j == 0 ? chain[0] : a.F.dom->tgt(chain[j]); };
    Key y;
    y.push_back(e[0] == 0 ? a.F.obj[obj_at(0)] : a.G.obj[obj_at(0)]);
    for (int i = 1; i <= p; ++i) {
      int f = chain[i];
      if (e[i - 1] == 0 && e[i] == 0)
        y.push_back(a.F.mor[f]);
      else if (e[i - 1] == 1)
        y.push_back(a.G.mor[f]);
      else
        y.push_back(D.comp(a.component[obj_at(i)], a.F.mor[f]));
    }
    return y;
  });
  std::string why;
  out.ok = out.h.check(&why);
  if (!out.ok) out.detail = why;
  // restrict along N(dom) x {e} -> N(dom) x Delta[1]
  for (int e = 0; e <= 1; ++e) {
    SimplicialMap end{NC, ND, {}};
    for (int q = 0; q <= NC->dim(); ++q) {
      end.image.emplace_back();
      for (int x = 0; x < NC->count(q); ++x) {
        Key k = product_key({SimplicialSet::nd(q, x), Simplex{OrdinalMap::constant(q, 0, 0), e}});
        end.image[q].push_back(out.h.apply(out.cylinder->locate(q, k)));
      }
    }
    SimplicialMap expect = nerve_map(e == 0 ? a.F : a.G, NC, ND);
    if (!(end == expect)) {
      out.ok = false;
      out.detail = "homotopy does not restrict to the nerve of the end functor";
    }
    (e == 0 ? out.end0 : out.end1) = std::move(end);
  }
  return out;
}

bool nerve_pushout_hypotheses(const FinCat& Q, const std::vector<int>& s_in_q, const FinCat& R,
                              const std::vector<int>& s_in_r) {
  if (s_in_q.size() != s_in_r.size()) throw PreconditionError("S has different sizes in Q and R");
  const int n = static_cast<int>(s_in_q.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (Q.hom(s_in_q[a], s_in_q[b]).size() != R.hom(s_in_r[a], s_in_r[b]).size())
        throw PreconditionError("S is not the same full subcategory of Q and R");
  auto closed = [](const FinCat& C, const std::vector<int>& s) {
    std::vector<char> in(C.num_objects(), 0);
    for (int a : s) in[a] = 1;
    for (int a : s)
      for (int f : C.out(a))
        if (!in[C.tgt(f)]) return false;
    return true;
  };
  return closed(Q, s_in_q) && closed(R, s_in_r);
}

std::optional<Functor> find_isomorphism(Cat A, Cat B) {
  const FinCat& a = *A;
  const FinCat& b = *B;
  const int n = a.num_objects();
  if (n != b.num_objects() || a.num_morphisms() != b.num_morphisms()) return std::nullopt;
  // colour refinement on the hom-count graph
  auto refine = [](const FinCat& c) {
    const int k = c.num_objects();
    std::vector<long long> col(k);
    for (int x = 0; x < k; ++x)
      col[x] = static_cast<long long>(c.out(x).size()) * 1000003LL + static_cast<long long>(c.in(x).size()) * 1009 +
               static_cast<long long>(c.hom(x, x).size());
    for (int round = 0; round < 4; ++round) {
      std::vector<long long> next(k);
      for (int x = 0; x < k; ++x) {
        std::vector<long long> o, i;
        for (int f : c.out(x)) o.push_back(col[c.tgt(f)]);
        for (int f : c.in(x)) i.push_back(col[c.src(f)]);
        std::sort(o.begin(), o.end());
        std::sort(i.begin(), i.end());
        long long h = col[x];
        for (auto v : o) h = h * 31 + v;
        h = h * 131 + 7;
        for (auto v : i) h = h * 37 + v;
        next[x] = h;
      }
      col = next;
    }
    return col;
  };
  auto ca = refine(a), cb = refine(b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // objects in BFS order so neighbours constrain early
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      order.push_back(x);
      for (int f : a.out(x))
        if (!seen[a.tgt(f)]) seen[a.tgt(f)] = 1, q.push(a.tgt(f));
      for (int f : a.in(x))
        if (!seen[a.src(f)]) seen[a.src(f)] = 1, q.push(a.src(f));
    }
  }
  auto hom_counts = [n](const FinCat& c) {
    std::vector<std::vector<int>> h(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x) {
      h[x][x] = 1;
      for (int f : c.out(x)) ++h[x][c.tgt(f)];
    }
    return h;
  };
  const auto ha = hom_counts(a), hb = hom_counts(b);
  const bool thin = a.is_preorder() && b.is_preorder();
  std::vector<int> omap(n, -1), used(n, 0);
  std::vector<int> mmap;
  // Once objects are matched, morphisms are matched hom-set by hom-set so that
  // composition is preserved.
  auto match_morphisms = [&]() -> bool {
    mmap.assign(a.num_morphisms(), -1);
    for (int x = 0; x < n; ++x) mmap[a.identity(x)] = b.identity(omap[x]);
    if (thin) {
      for (int f = 0; f < a.num_morphisms(); ++f)
        if (!a.is_identity(f)) mmap[f] = poset_arrow(b, omap[a.src(f)], omap[a.tgt(f)]);
      return true;
    }
    std::vector<int> nonid;
    for (int f = 0; f < a.num_morphisms(); ++f)
      if (!a.is_identity(f)) nonid.push_back(f);
    std::vector<char> taken(b.num_morphisms(), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
      if (i == nonid.size()) return true;
      int f = nonid[i];
      for (int g : b.hom(omap[a.src(f)], omap[a.tgt(f)])) {
        if (taken[g]) continue;
        mmap[f] = g;
        bool ok = true;
        for (std::size_t j = 0; j <= i && ok; ++j) {
          int u = nonid[j];
          if (a.tgt(u) == a.src(f)) {
            int c = a.comp(f, u);
            if (mmap[c] >= 0 && mmap[c] != b.comp(g, mmap[u])) ok = false;
          }
          if (a.tgt(f) == a.src(u)) {
            int c = a.comp(u, f);
            if (mmap[c] >= 0 && mmap[c] != b.comp(mmap[u], g)) ok = false;
          }
        }
        if (ok) {
          taken[g] = 1;
          if (rec(i + 1)) return true;
          taken[g] = 0;
        }
        mmap[f] = -1;
      }
      return false;
    };
    return rec(0);
  };
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) return match_morphisms();
    budget_tick();
    int x = order[i];
    for (int y = 0; y < n; ++y) {
      if (used[y] || ca[x] != cb[y]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        int u = order[j];
        if (ha[x][u] != hb[y][omap[u]] || ha[u][x] != hb[omap[u]][y]) ok = false;
      }
      if (!ok) continue;
      omap[x] = y;
      used[y] = 1;
      if (place(i + 1)) return true;
      used[y] = 0;
      omap[x] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  Functor f{A, B, omap, mmap};
  if (!f.check()) return std::nullopt;
  return f;
}

}  // namespace nfold
