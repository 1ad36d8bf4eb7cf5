#include "nfold/simplicial_set.hpp"

#include <algorithm>
#include <sstream>

namespace nfold {

std::vector<int> SimplicialSet::counts() const {
  std::vector<int> c;
  for (int q = 0; q <= dim(); ++q) c.push_back(count(q));
  return c;
}

long long SimplicialSet::total() const {
  long long t = 0;
  for (int q = 0; q <= dim(); ++q) t += count(q);
  return t;
}

std::optional<int> SimplicialSet::find(int q, const Key& k) const {
  if (q < 0 || q > dim()) return std::nullopt;
  auto it = lookup_[q].find(k);
  if (it == lookup_[q].end()) return std::nullopt;
  return it->second;
}

Simplex SimplicialSet::apply(const OrdinalMap& theta, const Simplex& s) const {
  OrdinalMap c = s.eta.after(theta);
  auto [sigma, mu] = c.epi_mono();
  if (mu.is_identity()) return Simplex{sigma, s.index};
  const int q = mu.target();
  int missing = 0;
  for (int a = 0, v = 0; a <= q; ++a) {
    if (v <= mu.source() && mu(v) == a) {
      ++v;
    } else {
      missing = a;
      break;
    }
  }
  std::vector<int> vals(mu.source() + 1);
  for (int a = 0; a <= mu.source(); ++a) vals[a] = mu(a) - (mu(a) > missing ? 1 : 0);
  // mu = d^missing ∘ mu'
  Simplex f = apply(OrdinalMap(q - 1, std::move(vals)), faces_[q][s.index][missing]);
  return Simplex{f.eta.after(sigma), f.index};
}

Simplex SimplicialSet::face_of(const Simplex& s, int j) const {
  return apply(OrdinalMap::coface(s.degree(), j), s);
}

Simplex SimplicialSet::degeneracy_of(const Simplex& s, int j) const {
  return apply(OrdinalMap::codegeneracy(s.degree(), j), s);
}

std::vector<int> SimplicialSet::vertices(const Simplex& s) const {
  std::vector<int> v;
  const int p = s.degree();
  for (int j = 0; j <= p; ++j) v.push_back(apply(OrdinalMap::constant(0, p, j), s).index);
  return v;
}

Simplex SimplicialSet::locate(int p, const Key& k) const {
  if (!model_) throw Error("simplicial set has no model to locate keys in");
  auto [eta, y] = model_->normalize(p, k);
  auto idx = find(eta.target(), y);
  if (!idx) throw Error("key does not name a simplex of this set");
  return Simplex{eta, *idx};
}

bool SimplicialSet::check_identities(std::string* why) const {
  for (int q = 2; q <= dim(); ++q) {
    for (int x = 0; x < count(q); ++x) {
      Simplex s = nd(q, x);
      for (int j = 1; j <= q; ++j)
        for (int i = 0; i < j; ++i) {
          if (face_of(face_of(s, j), i) != face_of(face_of(s, i), j - 1)) {
            if (why) *why = "d_i d_j != d_{j-1} d_i at degree " + std::to_string(q) + " simplex " + label(q, x);
            return false;
          }
        }
    }
  }
  for (int q = 1; q <= dim(); ++q)
    for (int x = 0; x < count(q); ++x)
      for (int i = 0; i <= q; ++i) {
        const Simplex& f = faces_[q][x][i];
        if (f.degree() != q - 1 || !f.eta.surjective() || f.index < 0 || f.index >= count(f.nd_degree())) {
          if (why) *why = "malformed face at degree " + std::to_string(q);
          return false;
        }
      }
  return true;
}

void SimplicialSet::Builder::grow(int q) {
  while (s_.dim() < q) {
    s_.keys_.emplace_back();
    s_.labels_.emplace_back();
    s_.faces_.emplace_back();
    s_.lookup_.emplace_back();
  }
}

int SimplicialSet::Builder::add(int q, Key key, std::string label) {
  grow(q);
  int idx = static_cast<int>(s_.keys_[q].size());
  auto [it, fresh] = s_.lookup_[q].emplace(key, idx);
  if (!fresh) throw Error("duplicate key in degree " + std::to_string(q));
  s_.keys_[q].push_back(std::move(key));
  s_.labels_[q].push_back(std::move(label));
  s_.faces_[q].emplace_back();
  return idx;
}

void SimplicialSet::Builder::set_faces(int q, int i, std::vector<Simplex> faces) {
  s_.faces_[q][i] = std::move(faces);
}

SSet SimplicialSet::Builder::build() {
  while (!s_.keys_.empty() && s_.keys_.back().empty()) {
    s_.keys_.pop_back();
    s_.labels_.pop_back();
    s_.faces_.pop_back();
    s_.lookup_.pop_back();
  }
  return std::make_shared<const SimplicialSet>(std::move(s_));
}

std::string SimplicialModel::label(int, const Key& x) const {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

bool SimplicialModel::is_degenerate(int p, const Key& x) const {
  for (int j = 0; j < p; ++j) {
    OrdinalMap t = OrdinalMap::coface(p, j).after(OrdinalMap::codegeneracy(p - 1, j));
    if (act(t, x) == x) return true;
  }
  return false;
}

std::pair<OrdinalMap, Key> SimplicialModel::normalize(int p, const Key& x) const {
  OrdinalMap acc = OrdinalMap::identity(p);
  Key cur = x;
  int d = p;
  bool again = true;
  while (again) {
    again = false;
    for (int j = 0; j < d; ++j) {
      OrdinalMap t = OrdinalMap::coface(d, j).after(OrdinalMap::codegeneracy(d - 1, j));
      if (act(t, cur) == cur) {
        cur = act(OrdinalMap::coface(d, j), cur);
        acc = OrdinalMap::codegeneracy(d - 1, j).after(acc);
        --d;
        again = true;
        break;
      }
    }
  }
  return {acc, cur};
}

SSet realize(std::shared_ptr<const SimplicialModel> model) {
  SimplicialSet::Builder b;
  const bool nd = model->candidates_nondegenerate();
  for (int p = 0; p <= model->max_degree(); ++p) {
    auto cands = model->candidates(p);
    int first = b.count(p);
    for (auto& x : cands) {
      budget_tick();
      if (!nd && model->is_degenerate(p, x)) continue;
      if (b.find(p, x)) continue;
      std::string lab = model->label(p, x);
      b.add(p, std::move(x), std::move(lab));
    }
    if (p == 0) continue;
    for (int i = first; i < b.count(p); ++i) {
      std::vector<Simplex> faces(p + 1);
      for (int j = 0; j <= p; ++j) {
        budget_tick();
        Key y = model->act(OrdinalMap::coface(p, j), b.key(p, i));
        auto [eta, z] = model->normalize(p - 1, y);
        auto idx = b.find(eta.target(), z);
        if (!idx) throw Error("face " + model->label(p - 1, y) + " of " + model->label(p, b.key(p, i)) + " is not among the realized simplices");
        faces[j] = Simplex{eta, *idx};
      }
      b.set_faces(p, i, std::move(faces));
    }
  }
  b.set_truncated(model->truncation());
  b.set_model(std::move(model));
  return b.build();
}

OrderedComplexModel::OrderedComplexModel(int n, Leq leq, FacePred face, std::vector<std::string> labels)
    : n_(n), leq_(std::move(leq)), face_(std::move(face)), labels_(std::move(labels)) {
  std::vector<int> chain;
  std::function<void()> rec = [&]() {
    const int p = static_cast<int>(chain.size()) - 1;
    if (static_cast<int>(by_degree_.size()) <= p) by_degree_.resize(p + 1);
    by_degree_[p].push_back(chain);
    for (int w = 0; w < n_; ++w) {
      if (w == chain.back() || !leq_(chain.back(), w)) continue;
      chain.push_back(w);
      if (face_(chain)) rec();
      chain.pop_back();
    }
  };
  for (int v = 0; v < n_; ++v) {
    chain = {v};
    if (face_(chain)) rec();
  }
  max_degree_ = static_cast<int>(by_degree_.size()) - 1;
}

std::vector<Key> OrderedComplexModel::candidates(int p) const {
  if (p < 0 || p >= static_cast<int>(by_degree_.size())) return {};
  return by_degree_[p];
}

Key OrderedComplexModel::act(const OrdinalMap& theta, const Key& x) const {
  Key y(theta.source() + 1);
  for (int i = 0; i <= theta.source(); ++i) y[i] = x[theta(i)];
  return y;
}

std::string OrderedComplexModel::label(int, const Key& x) const {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += labels_.empty() ? std::to_string(x[i]) : labels_[x[i]];
  }
  return s + ")";
}

namespace {
std::vector<std::string> digit_labels(int n) {
  std::vector<std::string> l;
  for (int i = 0; i < n; ++i) l.push_back(std::to_string(i));
  return l;
}
}  // namespace

SSet std_simplex(int m) {
  if (m < 0) throw PreconditionError("simplex dimension must be non-negative");
  return realize(std::make_shared<OrderedComplexModel>(
      m + 1, [](int a, int b) { return a <= b; }, [](const std::vector<int>&) { return true; },
      digit_labels(m + 1)));
}

SSet boundary(int m) {
  if (m < 0) throw PreconditionError("simplex dimension must be non-negative");
  return realize(std::make_shared<OrderedComplexModel>(
      m + 1, [](int a, int b) { return a <= b; },
      [m](const std::vector<int>& s) { return static_cast<int>(s.size()) < m + 1; }, digit_labels(m + 1)));
}

SSet horn(int m, int k) {
  if (m < 0 || k < 0 || k > m) throw PreconditionError("horn index out of range");
  return realize(std::make_shared<OrderedComplexModel>(
      m + 1, [](int a, int b) { return a <= b; },
      [m, k](const std::vector<int>& s) {
        // drop simplices containing every vertex other than k
        std::vector<bool> in(m + 1, false);
        for (int v : s) in[v] = true;
        for (int v = 0; v <= m; ++v)
          if (v != k && !in[v]) return true;
        return false;
      },
      digit_labels(m + 1)));
}

SSet order_complex(int n, const OrderedComplexModel::Leq& leq, std::vector<std::string> labels) {
  return realize(std::make_shared<OrderedComplexModel>(
      n, leq, [](const std::vector<int>&) { return true; }, std::move(labels)));
}

std::string set_label(unsigned mask) {
  std::string s;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) s += std::to_string(i);
  return s;
}

}  // namespace nfold
