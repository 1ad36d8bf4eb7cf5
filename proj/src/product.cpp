#include "nfold/product.hpp"

#include <algorithm>

#include "nfold/simplicial_map.hpp"

namespace nfold {

Key product_key(const std::vector<Simplex>& parts) {
  Key k;
  k.push_back(static_cast<int>(parts.size()));
  for (auto& s : parts) {
    k.push_back(s.nd_degree());
    k.push_back(s.index);
  }
  for (auto& s : parts)
    for (int v : s.eta.values()) k.push_back(v);
  return k;
}

std::vector<Simplex> product_parts(const Key& key) {
  const int n = key[0];
  const int p = (static_cast<int>(key.size()) - 1 - 2 * n) / n - 1;
  std::vector<Simplex> parts;
  for (int i = 0; i < n; ++i) {
    int q = key[1 + 2 * i], idx = key[2 + 2 * i];
    auto b = key.begin() + 1 + 2 * n + i * (p + 1);
    parts.push_back(Simplex{OrdinalMap(q, std::vector<int>(b, b + p + 1)), idx});
  }
  return parts;
}

namespace {

class ProductModel : public SimplicialModel {
 public:
  explicit ProductModel(std::vector<SSet> f) : f_(std::move(f)) {
    for (auto& x : f_) {
      max_ += std::max(x->dim(), 0);
      if (x->truncated_at()) trunc_ = trunc_ ? std::min(*trunc_, *x->truncated_at()) : *x->truncated_at();
      if (x->dim() < 0) empty_ = true;
    }
    if (trunc_) max_ = std::min(max_, *trunc_);
  }

  int max_degree() const override { return empty_ ? -1 : max_; }
  std::optional<int> truncation() const override { return trunc_; }
  bool candidates_nondegenerate() const override { return true; }

  std::vector<Key> candidates(int p) const override {
    std::vector<Key> out;
    const int n = static_cast<int>(f_.size());
    std::vector<int> q(n, 0);
    // every degree tuple with q_i <= min(p, dim_i) and sum >= p
    std::function<void(int)> over_q = [&](int i) {
      if (i == n) {
        auto etas = jointly_injective_surjections(p, q);
        if (etas.empty()) return;
        std::vector<int> idx(n, 0);
        std::function<void(int)> over_idx = [&](int j) {
          if (j == n) {
            std::vector<Simplex> parts;
            for (auto& e : etas) {
              parts.clear();
              for (int t = 0; t < n; ++t) parts.push_back(Simplex{e[t], idx[t]});
              out.push_back(product_key(parts));
            }
            return;
          }
          for (idx[j] = 0; idx[j] < f_[j]->count(q[j]); ++idx[j]) over_idx(j + 1);
        };
        over_idx(0);
        return;
      }
      for (q[i] = 0; q[i] <= std::min(p, f_[i]->dim()); ++q[i]) over_q(i + 1);
    };
    over_q(0);
    return out;
  }

  Key act(const OrdinalMap& theta, const Key& x) const override {
    auto parts = product_parts(x);
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = f_[i]->apply(theta, parts[i]);
    return product_key(parts);
  }

  std::string label(int, const Key& x) const override {
    auto parts = product_parts(x);
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += "|";
      s += f_[i]->label(parts[i].nd_degree(), parts[i].index);
      if (!parts[i].eta.is_identity()) s += parts[i].eta.str();
    }
    return s + ")";
  }

 private:
  std::vector<SSet> f_;
  int max_ = 0;
  bool empty_ = false;
  std::optional<int> trunc_;
};

}  // namespace

SSet product(const std::vector<SSet>& factors) { return realize(std::make_shared<ProductModel>(factors)); }

SimplicialMap projection(SSet prod, const std::vector<SSet>& factors, int i) {
  SimplicialMap f{prod, factors[i], {}};
  for (int q = 0; q <= prod->dim(); ++q) {
    f.image.emplace_back();
    for (int x = 0; x < prod->count(q); ++x) f.image[q].push_back(product_parts(prod->key(q, x))[i]);
  }
  return f;
}

SimplicialMap diagonal_map(SSet x, SSet prod, int n) {
  SimplicialMap f{x, prod, {}};
  for (int q = 0; q <= x->dim(); ++q) {
    f.image.emplace_back();
    for (int i = 0; i < x->count(q); ++i)
      f.image[q].push_back(prod->locate(q, product_key(std::vector<Simplex>(n, SimplicialSet::nd(q, i)))));
  }
  return f;
}

}  // namespace nfold
