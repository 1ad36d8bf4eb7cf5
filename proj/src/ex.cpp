#include "nfold/ex.hpp"

#include <algorithm>
#include <map>

namespace nfold {

namespace {

int top_bit(unsigned m) { return 31 - __builtin_clz(m); }

// Non-degenerate simplices of Sd Delta[m] as chains of subset masks, ordered
// so that all faces of a chain precede it.
struct SdChains {
  std::vector<std::vector<unsigned>> chains;
  std::map<std::vector<unsigned>, int> index;
  std::vector<std::vector<int>> faces;

  explicit SdChains(int m) {
    std::vector<unsigned> masks;
    for (unsigned s = 1; s < (1u << (m + 1)); ++s) masks.push_back(s);
    auto rank_key = [](unsigned s) { return std::make_tuple(top_bit(s), __builtin_popcount(s), s); };
    std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) { return rank_key(a) < rank_key(b); });
    std::map<unsigned, int> rank;
    for (std::size_t i = 0; i < masks.size(); ++i) rank[masks[i]] = static_cast<int>(i);
    std::vector<unsigned> cur;
    std::function<void()> rec = [&]() {
      chains.push_back(cur);
      for (unsigned s : masks)
        if (s != cur.back() && (s & cur.back()) == cur.back()) {
          cur.push_back(s);
          rec();
          cur.pop_back();
        }
    };
    for (unsigned s : masks) {
      cur = {s};
      rec();
    }
    std::stable_sort(chains.begin(), chains.end(), [&](const auto& a, const auto& b) {
      if (rank[a.back()] != rank[b.back()]) return rank[a.back()] < rank[b.back()];
      return a.size() < b.size();
    });
    for (std::size_t i = 0; i < chains.size(); ++i) index[chains[i]] = static_cast<int>(i);
    for (auto& c : chains) {
      std::vector<int> f;
      for (std::size_t j = 0; c.size() > 1 && j < c.size(); ++j) {
        auto d = c;
        d.erase(d.begin() + j);
        f.push_back(index.at(d));
      }
      faces.push_back(std::move(f));
    }
  }
};

class ExModel : public SimplicialModel {
 public:
  ExModel(SSet X, int cap, long long limit) : X_(std::move(X)), cap_(cap), limit_(limit) {
    gids_.resize(cap_ + 1);
    gid_index_.resize(cap_ + 1);
    for (int q = 0; q <= cap_; ++q) {
      for (int r = 0; r <= std::min(q, X_->dim()); ++r)
        for (auto& eta : surjections(q, r))
          for (int y = 0; y < X_->count(r); ++y) {
            gid_index_[q][gkey(Simplex{eta, y})] = static_cast<int>(gids_[q].size());
            gids_[q].push_back(Simplex{eta, y});
          }
    }
    face_gid_.resize(cap_ + 1);
    by_faces_.resize(cap_ + 1);
    for (int q = 1; q <= cap_; ++q) {
      for (int g = 0; g < static_cast<int>(gids_[q].size()); ++g) {
        std::vector<int> f;
        for (int i = 0; i <= q; ++i) f.push_back(gid(X_->face_of(gids_[q][g], i)));
        by_faces_[q][f].push_back(g);
        face_gid_[q].push_back(std::move(f));
      }
    }
    for (int m = 0; m <= cap_; ++m) sd_.emplace_back(m);
    levels_.resize(cap_ + 1);
    for (int m = 0; m <= cap_; ++m) enumerate(m);
  }

  int max_degree() const override { return cap_; }
  std::optional<int> truncation() const override { return cap_; }
  std::vector<Key> candidates(int p) const override { return levels_[p]; }

  Key act(const OrdinalMap& theta, const Key& x) const override {
    const int p = theta.source();
    const SdChains& src = sd_[p];
    const SdChains& tgt = sd_[theta.target()];
    Key y(src.chains.size());
    for (std::size_t c = 0; c < src.chains.size(); ++c) {
      std::vector<unsigned> img;
      std::vector<int> sigma;
      for (unsigned s : src.chains[c]) {
        unsigned t = 0;
        for (int i = 0; i <= p; ++i)
          if (s >> i & 1u) t |= 1u << theta(i);
        if (img.empty() || img.back() != t) img.push_back(t);
        sigma.push_back(static_cast<int>(img.size()) - 1);
      }
      int g = x[tgt.index.at(img)];
      int r = static_cast<int>(img.size()) - 1;
      Simplex s = X_->apply(OrdinalMap(r, sigma), gids_[r][g]);
      y[c] = gid(s);
    }
    return y;
  }

  int gid(const Simplex& s) const { return gid_index_[s.degree()].at(gkey(s)); }
  const SdChains& sd(int m) const { return sd_[m]; }

 private:
  static Key gkey(const Simplex& s) {
    Key k{s.nd_degree(), s.index};
    for (int v : s.eta.values()) k.push_back(v);
    return k;
  }

  void enumerate(int m) {
    const SdChains& sd = sd_[m];
    const int n = static_cast<int>(sd.chains.size());
    Key cur(n, -1);
    auto& out = levels_[m];
    std::size_t top_total = gids_[0].size(), top_done = 0;
    std::function<void(int)> rec = [&](int c) {
      budget_tick();
      if (c == n) {
        out.push_back(cur);
        if (static_cast<long long>(out.size()) > limit_) {
          double frac = top_total ? static_cast<double>(top_done + 1) / top_total : 1.0;
          throw ResourceError("Ex level " + std::to_string(m) + " exceeds " + std::to_string(limit_) +
                              " maps; estimated total ~" + std::to_string(static_cast<long long>(out.size() / frac)));
        }
        return;
      }
      const int q = static_cast<int>(sd.chains[c].size()) - 1;
      if (q == 0) {
        for (int g = 0; g < static_cast<int>(gids_[0].size()); ++g) {
          cur[c] = g;
          rec(c + 1);
          if (c == 0) ++top_done;
        }
      } else {
        std::vector<int> f;
        for (int d : sd.faces[c]) f.push_back(cur[d]);
        auto it = by_faces_[q].find(f);
        if (it == by_faces_[q].end()) return;
        for (int g : it->second) {
          cur[c] = g;
          rec(c + 1);
        }
      }
      cur[c] = -1;
    };
    rec(0);
  }

  SSet X_;
  int cap_;
  long long limit_;
  std::vector<std::vector<Simplex>> gids_;
  std::vector<std::unordered_map<Key, int, KeyHash>> gid_index_;
  std::vector<std::vector<std::vector<int>>> face_gid_;
  std::vector<std::map<std::vector<int>, std::vector<int>>> by_faces_;
  std::vector<SdChains> sd_;
  std::vector<std::vector<Key>> levels_;
};

}  // namespace

SSet ex(SSet X, int cap, long long limit) { return realize(std::make_shared<ExModel>(std::move(X), cap, limit)); }

SimplicialMap unit_to_ex(SSet X, SSet exX) {
  auto model = std::dynamic_pointer_cast<const ExModel>(exX->model());
  if (!model) throw Error("target is not an Ex construction");
  SimplicialMap f{X, exX, {}};
  const int top = std::min(X->dim(), exX->dim());
  for (int m = 0; m <= X->dim(); ++m) {
    f.image.emplace_back();
    if (m > top) throw PreconditionError("Ex cap below the dimension of X");
    const auto& sd = model->sd(m);
    for (int x = 0; x < X->count(m); ++x) {
      Key k;
      for (auto& c : sd.chains) {
        std::vector<int> theta;
        for (unsigned s : c) theta.push_back(top_bit(s));
        k.push_back(model->gid(X->apply(OrdinalMap(m, theta), SimplicialSet::nd(m, x))));
      }
      f.image[m].push_back(exX->locate(m, k));
    }
  }
  return f;
}

long long simplices_in_degree(const SimplicialSet& X, int p) {
  long long t = 0;
  for (int q = 0; q <= std::min(p, X.dim()); ++q) {
    long long binom = 1;
    for (int i = 0; i < q; ++i) binom = binom * (p - i) / (i + 1);
    t += binom * X.count(q);
  }
  return t;
}

long long monotone_maps_from_subsets(int p, const std::vector<std::vector<char>>& le) {
  const int n = static_cast<int>(le.size());
  std::vector<unsigned> masks;
  for (unsigned s = 1; s < (1u << (p + 1)); ++s) masks.push_back(s);
  std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return __builtin_popcount(a) != __builtin_popcount(b) ? __builtin_popcount(a) < __builtin_popcount(b) : a < b;
  });
  std::map<unsigned, int> val;
  long long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == masks.size()) {
      ++count;
      return;
    }
    unsigned s = masks[i];
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      // maximal proper subsets suffice
      for (int b = 0; b <= p && ok; ++b) {
        unsigned t = s & ~(1u << b);
        if ((s >> b & 1u) && t && !le[val[t]][v]) ok = false;
      }
      if (!ok) continue;
      val[s] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace nfold
