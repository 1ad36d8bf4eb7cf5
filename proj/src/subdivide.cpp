#include "nfold/subdivide.hpp"

#include <algorithm>
#include <set>

namespace nfold {

bool is_classical_complex(const SimplicialSet& X) {
  for (int q = 0; q <= X.dim(); ++q) {
    std::set<std::vector<int>> seen;
    for (int i = 0; i < X.count(q); ++i) {
      auto v = X.vertices(SimplicialSet::nd(q, i));
      auto s = v;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
      if (!seen.insert(s).second) return false;
    }
  }
  return true;
}

FinPoset poset_of_nondegenerate(const SimplicialSet& X) {
  if (!is_classical_complex(X))
    throw UnsupportedInput("poset of non-degenerate simplices needs a classical ordered complex");
  std::vector<std::vector<int>> vsets;
  std::vector<std::string> labels;
  for (int q = 0; q <= X.dim(); ++q)
    for (int i = 0; i < X.count(q); ++i) {
      auto v = X.vertices(SimplicialSet::nd(q, i));
      std::sort(v.begin(), v.end());
      vsets.push_back(std::move(v));
      labels.push_back(X.label(q, i));
    }
  const int n = static_cast<int>(vsets.size());
  return FinPoset::from_relation(
      n, [&](int a, int b) { return std::includes(vsets[b].begin(), vsets[b].end(), vsets[a].begin(), vsets[a].end()); },
      labels);
}

namespace {

// Simplices of Sd X as (t, y, S_0 <= ... <= S_p) with y a non-degenerate
// t-simplex and S_i subsets of [t]; normal when S_p = [t].
class SdColimitModel : public SimplicialModel {
 public:
  explicit SdColimitModel(SSet X) : X_(std::move(X)) {}

  int max_degree() const override { return X_->dim(); }
  bool candidates_nondegenerate() const override { return true; }

  std::vector<Key> candidates(int p) const override {
    std::vector<Key> out;
    for (int t = 0; t <= X_->dim(); ++t) {
      const unsigned full = (1u << (t + 1)) - 1;
      // strictly increasing chains of length p+1 ending at the full set
      std::vector<unsigned> chain;
      std::function<void(unsigned)> rec = [&](unsigned top) {
        if (static_cast<int>(chain.size()) == p + 1) {
          for (int y = 0; y < X_->count(t); ++y) {
            Key k{t, y};
            for (auto it = chain.rbegin(); it != chain.rend(); ++it) k.push_back(static_cast<int>(*it));
            out.push_back(std::move(k));
          }
          return;
        }
        // proper nonempty subsets of top
        for (unsigned s = (top - 1) & top; s; s = (s - 1) & top) {
          chain.push_back(s);
          rec(s);
          chain.pop_back();
        }
      };
      chain = {full};
      rec(full);
    }
    return out;
  }

  Key act(const OrdinalMap& theta, const Key& x) const override {
    const int t = x[0];
    std::vector<unsigned> masks;
    for (int i = 0; i <= theta.source(); ++i) masks.push_back(static_cast<unsigned>(x[2 + theta(i)]));
    const unsigned full = (1u << (t + 1)) - 1;
    if (masks.back() == full) {
      Key y{t, x[1]};
      for (unsigned s : masks) y.push_back(static_cast<int>(s));
      return y;
    }
    // restrict to the face spanned by the top set
    std::vector<int> mu, pos(t + 1, -1);
    for (int i = 0; i <= t; ++i)
      if (masks.back() >> i & 1u) {
        pos[i] = static_cast<int>(mu.size());
        mu.push_back(i);
      }
    const int r = static_cast<int>(mu.size()) - 1;
    Simplex f = X_->apply(OrdinalMap(t, mu), SimplicialSet::nd(t, x[1]));
    Key y{f.nd_degree(), f.index};
    for (unsigned s : masks) {
      unsigned img = 0;
      for (int i = 0; i <= t; ++i)
        if (s >> i & 1u) img |= 1u << f.eta(pos[i]);
      y.push_back(static_cast<int>(img));
    }
    (void)r;
    return y;
  }

  std::string label(int, const Key& x) const override {
    std::string s = X_->label(x[0], x[1]) + "[";
    for (std::size_t i = 2; i < x.size(); ++i) s += (i > 2 ? "," : "") + set_label(static_cast<unsigned>(x[i]));
    return s + "]";
  }

 private:
  SSet X_;
};

}  // namespace

Subdivision subdivide(SSet X, SdPath path) {
  bool poset = path == SdPath::Poset || (path == SdPath::Auto && is_classical_complex(*X));
  if (poset) return {poset_of_nondegenerate(*X).nerve(), true};
  return {realize(std::make_shared<SdColimitModel>(X)), false};
}

bool subdivision_paths_agree(SSet X, std::string* why) {
  SSet a = subdivide(X, SdPath::Colimit).sd;
  SSet b = subdivide(X, SdPath::Poset).sd;
  // poset elements are listed by degree then index
  std::vector<int> offset(X->dim() + 2, 0);
  for (int q = 0; q <= X->dim(); ++q) offset[q + 1] = offset[q] + X->count(q);
  std::vector<int> vmap;
  for (int v = 0; v < a->count(0); ++v) {
    const Key& k = a->key(0, v);
    vmap.push_back(offset[k[0]] + k[1]);
  }
  SimplicialMap f = map_by_vertices(a, b, vmap);
  return is_isomorphism(f, why);
}

FinPoset subsets_poset(int m) {
  std::vector<unsigned> masks;
  for (unsigned s = 1; s < (1u << (m + 1)); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<std::string> labels;
  for (unsigned s : masks) labels.push_back(set_label(s));
  return FinPoset::from_relation(
      static_cast<int>(masks.size()), [&](int a, int b) { return (masks[a] & masks[b]) == masks[a]; }, labels);
}

}  // namespace nfold
