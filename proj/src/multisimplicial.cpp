#include "nfold/multisimplicial.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace nfold {

namespace {

int total_degree(const MultiIndex& p) { return std::accumulate(p.begin(), p.end(), 0); }

// All multi-indices q with 0 <= q <= e componentwise, by total degree then lexicographically.
std::vector<MultiIndex> indices_below(const MultiIndex& e) {
  std::vector<MultiIndex> out;
  MultiIndex q(e.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t a) {
    if (a == e.size()) {
      out.push_back(q);
      return;
    }
    for (q[a] = 0; q[a] <= e[a]; ++q[a]) rec(a + 1);
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [](const MultiIndex& x, const MultiIndex& y) {
    return total_degree(x) < total_degree(y);
  });
  return out;
}

std::string multi_str(const MultiIndex& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace

std::vector<MultiIndex> MultiSimplicialSet::degrees() const {
  std::vector<MultiIndex> d;
  for (auto& [p, l] : levels_)
    if (!l.keys.empty()) d.push_back(p);
  return d;
}

int MultiSimplicialSet::count(const MultiIndex& p) const {
  auto it = levels_.find(p);
  return it == levels_.end() ? 0 : static_cast<int>(it->second.keys.size());
}

long long MultiSimplicialSet::total() const {
  long long t = 0;
  for (auto& [p, l] : levels_) t += static_cast<long long>(l.keys.size());
  return t;
}

MultiIndex MultiSimplicialSet::extent() const {
  MultiIndex e(n_, 0);
  for (auto& [p, l] : levels_)
    if (!l.keys.empty())
      for (int a = 0; a < n_; ++a) e[a] = std::max(e[a], p[a]);
  return e;
}

std::optional<int> MultiSimplicialSet::find(const MultiIndex& p, const Key& k) const {
  auto it = levels_.find(p);
  if (it == levels_.end()) return std::nullopt;
  auto jt = it->second.lookup.find(k);
  if (jt == it->second.lookup.end()) return std::nullopt;
  return jt->second;
}

MultiSimplex MultiSimplicialSet::apply(const MultiOrdinalMap& theta, const MultiSimplex& s) const {
  MultiOrdinalMap c = s.eta.after(theta);
  const MultiIndex q = c.target();
  for (int a = 0; a < n_; ++a) {
    auto [sigma, mu] = c.parts[a].epi_mono();
    if (mu.is_identity()) continue;
    int missing = 0;
    for (int x = 0, v = 0; x <= q[a]; ++x) {
      if (v <= mu.source() && mu(v) == x) {
        ++v;
      } else {
        missing = x;
        break;
      }
    }
    std::vector<int> vals(mu.source() + 1);
    for (int x = 0; x <= mu.source(); ++x) vals[x] = mu(x) - (mu(x) > missing ? 1 : 0);
    // c_a = d^missing ∘ (mu' ∘ sigma)
    MultiOrdinalMap rest = c;
    rest.parts[a] = OrdinalMap(q[a] - 1, std::move(vals)).after(sigma);
    return apply(rest, face(q, s.index, a, missing));
  }
  return MultiSimplex{c, s.index};
}

MultiSimplex MultiSimplicialSet::locate(const MultiIndex& p, const Key& k) const {
  if (!model_) throw Error("multisimplicial set has no model to locate keys in");
  auto [eta, y] = model_->normalize(p, k);
  auto idx = find(eta.target(), y);
  if (!idx) throw Error("key does not name a cell of this multisimplicial set");
  return MultiSimplex{eta, *idx};
}

bool MultiSimplicialSet::check_identities(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  for (auto& [p, l] : levels_)
    for (int x = 0; x < static_cast<int>(l.keys.size()); ++x) {
      MultiSimplex s = nd(p, x);
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          for (int j = 0; j <= p[b] && p[b] > 0; ++j)
            for (int i = 0; i <= p[a] && p[a] > 0; ++i) {
              if (a == b && i >= j) continue;
              // d^a_i d^b_j versus the reordered pair
              MultiSimplex fb = apply(on_axis(p, b, OrdinalMap::coface(p[b], j)), s);
              MultiIndex pb = fb.degree();
              if (a == b && pb[a] == 0) continue;
              MultiSimplex left = apply(on_axis(pb, a, OrdinalMap::coface(pb[a], i)), fb);
              MultiSimplex fa = apply(on_axis(p, a, OrdinalMap::coface(p[a], i)), s);
              MultiIndex pa = fa.degree();
              int jj = a == b ? j - 1 : j;
              MultiSimplex right = apply(on_axis(pa, b, OrdinalMap::coface(pa[b], jj)), fa);
              if (left != right)
                return fail("face identity fails at " + l.labels[x] + " axes " + std::to_string(a) + "," + std::to_string(b));
            }
      for (int a = 0; a < n_; ++a)
        for (int j = 0; j <= p[a] && p[a] > 0; ++j) {
          const MultiSimplex& f = l.faces[x][a][j];
          MultiIndex t = f.nd_degree();
          if (f.index < 0 || f.index >= count(t)) return fail("dangling face at " + l.labels[x]);
          for (int b = 0; b < n_; ++b)
            if (!f.eta.parts[b].surjective()) return fail("face not in normal form at " + l.labels[x]);
        }
    }
  return true;
}

int MultiSimplicialSet::Builder::add(const MultiIndex& p, Key key, std::string label) {
  auto& l = s_.levels_[p];
  int i = static_cast<int>(l.keys.size());
  if (!l.lookup.emplace(key, i).second) throw Error("duplicate multisimplex key");
  l.keys.push_back(std::move(key));
  l.labels.push_back(std::move(label));
  l.faces.emplace_back(s_.n_);
  return i;
}

void MultiSimplicialSet::Builder::set_faces(const MultiIndex& p, int i, int axis, std::vector<MultiSimplex> faces) {
  s_.levels_[p].faces[i][axis] = std::move(faces);
}

SMSet MultiSimplicialSet::Builder::build() { return std::make_shared<const MultiSimplicialSet>(std::move(s_)); }

std::string MultiModel::label(const MultiIndex& p, const Key& x) const {
  std::string s = multi_str(p) + "[";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + "]";
}

bool MultiModel::degenerate_along(const MultiIndex& p, int axis, const Key& x) const {
  for (int j = 0; j < p[axis]; ++j) {
    OrdinalMap t = OrdinalMap::coface(p[axis], j).after(OrdinalMap::codegeneracy(p[axis] - 1, j));
    if (act(on_axis(p, axis, t), x) == x) return true;
  }
  return false;
}

bool MultiModel::totally_nondegenerate(const MultiIndex& p, const Key& x) const {
  for (int a = 0; a < n(); ++a)
    if (degenerate_along(p, a, x)) return false;
  return true;
}

std::pair<MultiOrdinalMap, Key> MultiModel::normalize(const MultiIndex& p, const Key& x) const {
  MultiOrdinalMap acc = MultiOrdinalMap::identity(p);
  Key cur = x;
  MultiIndex d = p;
  for (int a = 0; a < n(); ++a) {
    bool again = true;
    while (again) {
      again = false;
      for (int j = 0; j < d[a]; ++j) {
        OrdinalMap t = OrdinalMap::coface(d[a], j).after(OrdinalMap::codegeneracy(d[a] - 1, j));
        if (act(on_axis(d, a, t), cur) == cur) {
          cur = act(on_axis(d, a, OrdinalMap::coface(d[a], j)), cur);
          acc.parts[a] = OrdinalMap::codegeneracy(d[a] - 1, j).after(acc.parts[a]);
          --d[a];
          again = true;
          break;
        }
      }
    }
  }
  return {acc, cur};
}

SMSet realize(std::shared_ptr<const MultiModel> model) {
  const int n = model->n();
  MultiSimplicialSet::Builder b(n);
  const bool nd = model->candidates_nondegenerate();
  for (const MultiIndex& p : indices_below(model->extent())) {
    int first = b.count(p);
    for (Key& x : model->candidates(p)) {
      budget_tick();
      if (!nd && !model->totally_nondegenerate(p, x)) continue;
      if (b.find(p, x)) continue;
      std::string lab = model->label(p, x);
      b.add(p, std::move(x), std::move(lab));
    }
    for (int i = first; i < b.count(p); ++i)
      for (int a = 0; a < n; ++a) {
        if (p[a] == 0) continue;
        std::vector<MultiSimplex> faces(p[a] + 1);
        MultiIndex q = p;
        --q[a];
        for (int j = 0; j <= p[a]; ++j) {
          budget_tick();
          Key y = model->act(on_axis(p, a, OrdinalMap::coface(p[a], j)), b.key(p, i));
          auto [eta, z] = model->normalize(q, y);
          auto idx = b.find(eta.target(), z);
          if (!idx) throw Error("face of " + model->label(p, b.key(p, i)) + " is not among the realized cells");
          faces[j] = MultiSimplex{eta, *idx};
        }
        b.set_faces(p, i, a, std::move(faces));
      }
  }
  b.set_model(std::move(model));
  return b.build();
}

MultiSimplex MultiSimplicialMap::apply(const MultiSimplex& s) const {
  const MultiSimplex& fx = image.at(s.nd_degree())[s.index];
  return MultiSimplex{fx.eta.after(s.eta), fx.index};
}

bool MultiSimplicialMap::check(std::string* why) const {
  for (const MultiIndex& p : dom->degrees()) {
    auto it = image.find(p);
    if (it == image.end() || static_cast<int>(it->second.size()) != dom->count(p)) {
      if (why) *why = "image table incomplete at " + multi_str(p);
      return false;
    }
    for (int x = 0; x < dom->count(p); ++x) {
      const MultiSimplex& y = it->second[x];
      if (y.degree() != p || y.index < 0 || y.index >= cod->count(y.nd_degree())) {
        if (why) *why = "image of " + dom->label(p, x) + " has the wrong degree";
        return false;
      }
      for (int a = 0; a < dom->n(); ++a)
        for (int j = 0; j <= p[a] && p[a] > 0; ++j)
          if (apply(dom->face(p, x, a, j)) != cod->apply(on_axis(p, a, OrdinalMap::coface(p[a], j)), y)) {
            if (why) *why = "face does not commute at " + dom->label(p, x);
            return false;
          }
    }
  }
  return true;
}

MultiSimplicialMap multi_map_from_keys(SMSet dom, SMSet cod, const std::function<Key(const MultiIndex&, const Key&)>& fn) {
  MultiSimplicialMap f{dom, cod, {}};
  for (const MultiIndex& p : dom->degrees()) {
    auto& level = f.image[p];
    for (int x = 0; x < dom->count(p); ++x) {
      budget_tick();
      level.push_back(cod->locate(p, fn(p, dom->key(p, x))));
    }
  }
  return f;
}

bool is_isomorphism(const MultiSimplicialMap& f, std::string* why) {
  if (f.dom->degrees() != f.cod->degrees()) {
    if (why) *why = "cells live in different multi-degrees";
    return false;
  }
  for (const MultiIndex& p : f.dom->degrees()) {
    if (f.dom->count(p) != f.cod->count(p)) {
      if (why) *why = "cell counts differ at " + multi_str(p);
      return false;
    }
    std::vector<char> hit(f.cod->count(p), 0);
    for (const MultiSimplex& s : f.image.at(p)) {
      if (!s.nondegenerate() || hit[s.index]) {
        if (why) *why = "not bijective on cells at " + multi_str(p);
        return false;
      }
      hit[s.index] = 1;
    }
  }
  return f.check(why);
}

// ---------------------------------------------------------------------------
// external products

namespace {

class ExternalModel : public MultiModel {
 public:
  explicit ExternalModel(std::vector<SSet> f) : f_(std::move(f)) {}
  int n() const override { return static_cast<int>(f_.size()); }
  MultiIndex extent() const override {
    MultiIndex e;
    for (auto& x : f_) e.push_back(std::max(0, x->dim()));
    return e;
  }
  bool candidates_nondegenerate() const override { return true; }
  std::vector<Key> candidates(const MultiIndex& p) const override {
    std::vector<Key> out;
    std::vector<Simplex> parts(n());
    std::function<void(int)> rec = [&](int a) {
      if (a == n()) {
        out.push_back(external_key(parts));
        return;
      }
      for (int i = 0; i < f_[a]->count(p[a]); ++i) {
        parts[a] = SimplicialSet::nd(p[a], i);
        rec(a + 1);
      }
    };
    rec(0);
    return out;
  }
  Key act(const MultiOrdinalMap& theta, const Key& x) const override {
    auto parts = external_parts(theta.target(), x);
    for (int a = 0; a < n(); ++a) parts[a] = f_[a]->apply(theta.parts[a], parts[a]);
    return external_key(parts);
  }
  std::string label(const MultiIndex& p, const Key& x) const override {
    auto parts = external_parts(p, x);
    std::string s;
    for (int a = 0; a < n(); ++a) {
      if (a) s += "|";
      s += f_[a]->label(parts[a].nd_degree(), parts[a].index);
      if (!parts[a].nondegenerate()) s += parts[a].eta.str();
    }
    return s;
  }

 private:
  std::vector<SSet> f_;
};

}  // namespace

Key external_key(const std::vector<Simplex>& parts) {
  Key k;
  for (auto& s : parts) {
    k.push_back(s.nd_degree());
    k.push_back(s.index);
    for (int v : s.eta.values()) k.push_back(v);
  }
  return k;
}

std::vector<Simplex> external_parts(const MultiIndex& p, const Key& key) {
  std::vector<Simplex> parts;
  std::size_t at = 0;
  for (int pa : p) {
    int q = key.at(at), idx = key.at(at + 1);
    std::vector<int> vals(key.begin() + static_cast<long>(at) + 2, key.begin() + static_cast<long>(at) + 3 + pa);
    parts.push_back(Simplex{OrdinalMap(q, std::move(vals)), idx});
    at += 3 + static_cast<std::size_t>(pa);
  }
  return parts;
}

SMSet external_product(const std::vector<SSet>& factors) {
  return realize(std::make_shared<ExternalModel>(factors));
}

SMSet multi_simplex(const MultiIndex& m) {
  std::vector<SSet> f;
  for (int x : m) f.push_back(std_simplex(x));
  return external_product(f);
}

// ---------------------------------------------------------------------------
// diagonal

namespace {

class DiagonalModel : public SimplicialModel {
 public:
  DiagonalModel(SMSet y, std::optional<int> trunc) : y_(std::move(y)), trunc_(trunc) {}
  const SMSet& source() const { return y_; }
  int max_degree() const override {
    if (trunc_) return *trunc_;
    auto e = y_->extent();
    return std::accumulate(e.begin(), e.end(), 0);
  }
  std::optional<int> truncation() const override { return trunc_; }
  bool candidates_nondegenerate() const override { return true; }
  std::vector<Key> candidates(int p) const override {
    std::vector<Key> out;
    for (const MultiIndex& q : y_->degrees()) {
      if (*std::max_element(q.begin(), q.end()) > p) continue;
      for (auto& etas : jointly_injective_surjections(p, q))
        for (int i = 0; i < y_->count(q); ++i) out.push_back(diagonal_key(MultiSimplex{MultiOrdinalMap{etas}, i}));
    }
    return out;
  }
  Key act(const OrdinalMap& theta, const Key& x) const override {
    MultiSimplex s = diagonal_parts(*y_, x);
    return diagonal_key(y_->apply(MultiOrdinalMap::diagonal(theta, y_->n()), s));
  }
  // Keys carry EZ forms, so a degeneracy is a step where every part stands still.
  std::pair<OrdinalMap, Key> normalize(int p, const Key& x) const override {
    MultiSimplex s = diagonal_parts(*y_, x);
    for (auto& f : s.eta.parts)
      if (!f.surjective()) return SimplicialModel::normalize(p, x);
    std::vector<int> sigma(p + 1, 0);
    std::vector<int> keep{0};
    for (int i = 1; i <= p; ++i) {
      bool moves = false;
      for (auto& f : s.eta.parts) moves = moves || f(i) != f(i - 1);
      sigma[i] = sigma[i - 1] + (moves ? 1 : 0);
      if (moves) keep.push_back(i);
    }
    const int r = sigma[p];
    MultiOrdinalMap reduced;
    for (auto& f : s.eta.parts) {
      std::vector<int> vals;
      for (int i : keep) vals.push_back(f(i));
      reduced.parts.emplace_back(f.target(), std::move(vals));
    }
    return {OrdinalMap(r, std::move(sigma)), diagonal_key(MultiSimplex{reduced, s.index})};
  }
  std::string label(int, const Key& x) const override {
    MultiSimplex s = diagonal_parts(*y_, x);
    std::string l = y_->label(s.nd_degree(), s.index);
    if (!s.nondegenerate()) l += s.eta.str();
    return l;
  }

 private:
  SMSet y_;
  std::optional<int> trunc_;
};

}  // namespace

Key diagonal_key(const MultiSimplex& s) {
  Key k = s.nd_degree();
  k.push_back(s.index);
  for (auto& f : s.eta.parts)
    for (int v : f.values()) k.push_back(v);
  return k;
}

MultiSimplex diagonal_parts(const MultiSimplicialSet& Y, const Key& key) {
  const int n = Y.n();
  MultiIndex q(key.begin(), key.begin() + n);
  MultiSimplex s;
  s.index = key[n];
  const int len = (static_cast<int>(key.size()) - n - 1) / n;
  for (int a = 0; a < n; ++a) {
    std::vector<int> vals(key.begin() + n + 1 + a * len, key.begin() + n + 1 + (a + 1) * len);
    s.eta.parts.emplace_back(q[a], std::move(vals));
  }
  return s;
}

SSet diagonal(SMSet Y, std::optional<int> truncation) {
  return realize(std::make_shared<DiagonalModel>(std::move(Y), truncation));
}

SimplicialMap diagonal(const MultiSimplicialMap& f, SSet dom_diag, SSet cod_diag) {
  return map_from_keys(dom_diag, cod_diag, [&](int, const Key& k) {
    return diagonal_key(f.apply(diagonal_parts(*f.dom, k)));
  });
}

// ---------------------------------------------------------------------------
// δ_!

namespace {

class DeltaShriekModel : public MultiModel {
 public:
  DeltaShriekModel(SSet x, int n) : x_(std::move(x)), n_(n) {}
  int n() const override { return n_; }
  MultiIndex extent() const override { return MultiIndex(n_, std::max(0, x_->dim())); }
  bool candidates_nondegenerate() const override { return true; }
  std::vector<Key> candidates(const MultiIndex& p) const override {
    std::vector<Key> out;
    const int top = *std::max_element(p.begin(), p.end());
    for (int m = top; m <= x_->dim(); ++m) {
      std::vector<std::vector<OrdinalMap>> inj;
      for (int a = 0; a < n_; ++a) inj.push_back(injections(p[a], m));
      std::vector<const OrdinalMap*> pick(n_);
      std::function<void(int, unsigned long long)> rec = [&](int a, unsigned long long hit) {
        if (a == n_) {
          if (hit != (m >= 63 ? ~0ULL : (1ULL << (m + 1)) - 1)) return;
          for (int i = 0; i < x_->count(m); ++i) {
            Key k{m, i};
            for (auto* f : pick)
              for (int v : f->values()) k.push_back(v);
            out.push_back(std::move(k));
          }
          return;
        }
        for (auto& f : inj[a]) {
          unsigned long long h = hit;
          for (int v : f.values()) h |= 1ULL << v;
          pick[a] = &f;
          rec(a + 1, h);
        }
      };
      rec(0, 0);
    }
    return out;
  }
  Key act(const MultiOrdinalMap& theta, const Key& key) const override {
    const MultiIndex p = theta.target();
    int m = key[0], idx = key[1];
    std::vector<std::vector<int>> g(n_);
    std::size_t at = 2;
    for (int a = 0; a < n_; ++a) {
      std::vector<int> f(key.begin() + static_cast<long>(at), key.begin() + static_cast<long>(at) + p[a] + 1);
      at += static_cast<std::size_t>(p[a]) + 1;
      for (int i = 0; i <= theta.parts[a].source(); ++i) g[a].push_back(f[theta.parts[a](i)]);
    }
    for (;;) {
      std::set<int> u;
      for (auto& v : g) u.insert(v.begin(), v.end());
      if (static_cast<int>(u.size()) == m + 1) break;
      std::vector<int> image(u.begin(), u.end());
      Simplex s = x_->apply(OrdinalMap(m, image), SimplicialSet::nd(m, idx));
      for (auto& v : g)
        for (int& e : v) e = s.eta(static_cast<int>(std::lower_bound(image.begin(), image.end(), e) - image.begin()));
      m = s.nd_degree();
      idx = s.index;
    }
    Key out{m, idx};
    for (auto& v : g) out.insert(out.end(), v.begin(), v.end());
    return out;
  }
  std::string label(const MultiIndex& p, const Key& key) const override {
    std::string s = x_->label(key[0], key[1]) + "<";
    std::size_t at = 2;
    for (int a = 0; a < n_; ++a) {
      if (a) s += ";";
      for (int i = 0; i <= p[a]; ++i) s += std::to_string(key[at + static_cast<std::size_t>(i)]);
      at += static_cast<std::size_t>(p[a]) + 1;
    }
    return s + ">";
  }

 private:
  SSet x_;
  int n_;
};

}  // namespace

SMSet delta_shriek(SSet X, int n) { return realize(std::make_shared<DeltaShriekModel>(std::move(X), n)); }

MultiSimplicialMap delta_shriek_map(const SimplicialMap& f, SMSet dom, SMSet cod) {
  return multi_map_from_keys(dom, cod, [&](const MultiIndex& p, const Key& k) {
    Simplex y = f.apply(SimplicialSet::nd(k[0], k[1]));
    Key raw{y.nd_degree(), y.index};
    for (std::size_t i = 2; i < k.size(); ++i) raw.push_back(y.eta(k[i]));
    // act by the identity brings the key to its jointly surjective form
    return cod->model()->act(MultiOrdinalMap::identity(p), raw);
  });
}

SimplicialMap unit_delta(SSet X, SSet diag_of_shriek) {
  auto dm = std::dynamic_pointer_cast<const DiagonalModel>(diag_of_shriek->model());
  if (!dm) throw PreconditionError("unit_delta needs the diagonal of a δ_! realization");
  const SMSet& Y = dm->source();
  const int n = Y->n();
  SimplicialMap f{X, diag_of_shriek, {}};
  for (int q = 0; q <= X->dim(); ++q) {
    f.image.emplace_back();
    for (int x = 0; x < X->count(q); ++x) {
      Key k{q, x};
      for (int a = 0; a < n; ++a)
        for (int v = 0; v <= q; ++v) k.push_back(v);
      MultiIndex p(n, q);
      auto idx = Y->find(p, k);
      if (!idx) throw Error("diagonal cell of " + X->label(q, x) + " missing from δ_!");
      f.image[q].push_back(diag_of_shriek->locate(q, diagonal_key(MultiSimplicialSet::nd(p, *idx))));
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// colimits of monomorphisms

MultiColimit colimit_of_monos(const std::vector<SMSet>& objects, const std::vector<MultiColimitArrow>& arrows) {
  const int n = objects.empty() ? 1 : objects[0]->n();
  std::set<MultiIndex> all;
  for (auto& o : objects)
    for (auto& p : o->degrees()) all.insert(p);
  std::vector<MultiIndex> levels(all.begin(), all.end());
  std::stable_sort(levels.begin(), levels.end(),
                   [](const MultiIndex& x, const MultiIndex& y) { return total_degree(x) < total_degree(y); });
  std::map<MultiIndex, std::vector<int>> offset, parent;
  std::map<MultiIndex, int> total;
  for (auto& p : levels) {
    for (auto& o : objects) {
      offset[p].push_back(total[p]);
      total[p] += o->count(p);
    }
    parent[p].resize(total[p]);
    std::iota(parent[p].begin(), parent[p].end(), 0);
  }
  auto root = [&](const MultiIndex& p, int v) {
    auto& par = parent[p];
    while (par[v] != v) v = par[v] = par[par[v]];
    return v;
  };
  for (auto& a : arrows)
    for (auto& p : objects[a.from]->degrees())
      for (int x = 0; x < objects[a.from]->count(p); ++x) {
        const MultiSimplex& y = a.map.image.at(p)[x];
        if (!y.nondegenerate()) throw UnsupportedInput("colimit arrow is not a monomorphism");
        int u = root(p, offset[p][a.from] + x), v = root(p, offset[p][a.to] + y.index);
        if (u != v) parent[p][std::max(u, v)] = std::min(u, v);
      }
  auto owner = [&](const MultiIndex& p, int g) {
    int o = static_cast<int>(objects.size()) - 1;
    while (offset[p][o] > g || g >= offset[p][o] + objects[o]->count(p)) --o;
    return o;
  };
  MultiSimplicialSet::Builder b(n);
  std::map<MultiIndex, std::vector<int>> cls;
  for (auto& p : levels) {
    cls[p].assign(total[p], -1);
    for (int g = 0; g < total[p]; ++g) {
      if (root(p, g) != g) continue;
      int o = owner(p, g);
      int x = g - offset[p][o];
      cls[p][g] = b.add(p, {o, x}, objects[o]->label(p, x));
    }
    for (int g = 0; g < total[p]; ++g) cls[p][g] = cls[p][root(p, g)];
    for (int g = 0; g < total[p]; ++g) {
      if (root(p, g) != g) continue;
      int o = owner(p, g);
      int x = g - offset[p][o];
      for (int a = 0; a < n; ++a) {
        if (p[a] == 0) continue;
        std::vector<MultiSimplex> faces;
        for (int j = 0; j <= p[a]; ++j) {
          const MultiSimplex& f = objects[o]->face(p, x, a, j);
          MultiIndex t = f.nd_degree();
          faces.push_back(MultiSimplex{f.eta, cls[t][offset[t][o] + f.index]});
        }
        b.set_faces(p, cls[p][g], a, std::move(faces));
      }
    }
  }
  MultiColimit out;
  out.object = b.build();
  for (std::size_t o = 0; o < objects.size(); ++o) {
    MultiSimplicialMap leg{objects[o], out.object, {}};
    for (auto& p : objects[o]->degrees())
      for (int x = 0; x < objects[o]->count(p); ++x)
        leg.image[p].push_back(MultiSimplicialSet::nd(p, cls[p][offset[p][o] + x]));
    out.legs.push_back(std::move(leg));
  }
  return out;
}

// ---------------------------------------------------------------------------
// factorization census

FactorizationCensus multi_ez_census(const MultiIndex& m, int extra_degree) {
  FactorizationCensus c;
  const int n = static_cast<int>(m.size());
  std::vector<SSet> simplices;
  for (int x : m) simplices.push_back(std_simplex(x));
  SMSet Y = external_product(simplices);
  // raw vertex tuple of a totally non-degenerate cell, per axis
  auto raw_of_cell = [&](const MultiIndex& q, int idx) {
    auto parts = external_parts(q, Y->key(q, idx));
    std::vector<std::vector<int>> r;
    for (int a = 0; a < n; ++a) r.push_back(simplices[a]->key(parts[a].nd_degree(), parts[a].index));
    return r;
  };
  MultiIndex top(n);
  for (int a = 0; a < n; ++a) top[a] = m[a] + extra_degree;
  for (const MultiIndex& p : indices_below(top)) {
    std::vector<std::vector<OrdinalMap>> maps;
    for (int a = 0; a < n; ++a) maps.push_back(monotone_maps(p[a], m[a]));
    std::vector<const OrdinalMap*> pick(n);
    std::function<void(int)> rec = [&](int a) {
      if (a < n) {
        for (auto& f : maps[a]) {
          pick[a] = &f;
          rec(a + 1);
        }
        return;
      }
      budget_tick();
      ++c.multisimplices;
      // normal form through the model
      std::vector<Simplex> parts;
      for (int b = 0; b < n; ++b) parts.push_back(simplices[b]->locate(p[b], pick[b]->values()));
      MultiSimplex nf = Y->locate(p, external_key(parts));
      // brute force over all q <= p, cells at q and componentwise surjections p ->> q
      int found = 0;
      MultiSimplex hit;
      for (const MultiIndex& q : Y->degrees()) {
        bool below = true;
        for (int b = 0; b < n; ++b) below = below && q[b] <= p[b];
        if (!below) continue;
        std::vector<std::vector<OrdinalMap>> sur;
        for (int b = 0; b < n; ++b) sur.push_back(surjections(p[b], q[b]));
        for (int z = 0; z < Y->count(q); ++z) {
          auto raw = raw_of_cell(q, z);
          std::vector<const OrdinalMap*> eta(n);
          std::function<void(int)> r2 = [&](int b) {
            if (b < n) {
              for (auto& e : sur[b]) {
                bool ok = true;
                for (int i = 0; i <= p[b] && ok; ++i) ok = raw[b][e(i)] == (*pick[b])(i);
                if (!ok) continue;
                eta[b] = &e;
                r2(b + 1);
              }
              return;
            }
            ++found;
            hit.index = z;
            hit.eta.parts.clear();
            for (auto* e : eta) hit.eta.parts.push_back(*e);
          };
          r2(0);
        }
      }
      if (found == 1) {
        ++c.unique;
        if (hit == nf) ++c.agree;
      }
      if ((found != 1 || hit != nf) && c.first_failure.empty())
        c.first_failure = "multisimplex at " + multi_str(p) + " has " + std::to_string(found) + " factorizations";
    };
    rec(0);
  }
  return c;
}

FactorizationCensus multi_ez_fuzz(SMSet Y, int trials, unsigned seed) {
  FactorizationCensus c;
  std::mt19937 rng(seed);
  auto degs = Y->degrees();
  if (degs.empty()) return c;
  const int n = Y->n();
  for (int t = 0; t < trials; ++t) {
    ++c.multisimplices;
    const MultiIndex& q = degs[std::uniform_int_distribution<std::size_t>(0, degs.size() - 1)(rng)];
    int z = std::uniform_int_distribution<int>(0, Y->count(q) - 1)(rng);
    MultiOrdinalMap eta;
    for (int a = 0; a < n; ++a) {
      int extra = std::uniform_int_distribution<int>(0, 2)(rng);
      auto sur = surjections(q[a] + extra, q[a]);
      eta.parts.push_back(sur[std::uniform_int_distribution<std::size_t>(0, sur.size() - 1)(rng)]);
    }
    MultiSimplex expect{eta, z};
    MultiIndex p = eta.source();
    // key of eta^* z through the model, then back to normal form
    Key k = Y->model()->act(eta, Y->key(q, z));
    MultiSimplex nf = Y->locate(p, k);
    MultiSimplex via_apply = Y->apply(eta, MultiSimplicialSet::nd(q, z));
    bool ok = nf == expect && via_apply == expect;
    // faces of the degenerate cell agree between the two routes
    for (int a = 0; a < n && ok; ++a)
      for (int j = 0; j <= p[a] && p[a] > 0 && ok; ++j) {
        auto d = on_axis(p, a, OrdinalMap::coface(p[a], j));
        MultiSimplex lhs = Y->apply(d, expect);
        MultiIndex pd = d.source();
        MultiSimplex rhs = Y->locate(pd, Y->model()->act(d, k));
        ok = lhs == rhs;
      }
    if (ok) {
      ++c.unique;
      ++c.agree;
    } else if (c.first_failure.empty()) {
      c.first_failure = "round trip fails for " + eta.str() + " on " + Y->label(q, z);
    }
  }
  return c;
}

}  // namespace nfold
