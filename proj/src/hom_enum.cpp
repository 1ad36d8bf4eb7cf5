#include "nfold/hom_enum.hpp"

#include <algorithm>
#include <map>

namespace nfold {

namespace {

int popcount(unsigned v) { return __builtin_popcount(v); }

}  // namespace

long long enumerate_nfunctors(NCat a, NCat b, const std::function<bool(const NFoldFunctor&)>& visit, long long limit) {
  if (a->n() != b->n()) throw PreconditionError("functors need equal arity");
  const int n = a->n();
  const unsigned full = a->full();
  std::vector<unsigned> levels;
  for (unsigned e = 0; e <= full; ++e) levels.push_back(e);
  std::stable_sort(levels.begin(), levels.end(), [](unsigned x, unsigned y) { return popcount(x) < popcount(y); });

  auto unit_dir = [&](unsigned eps, int x) {
    for (int i = 0; i < n; ++i)
      if ((eps >> i & 1u) && a->is_unit(eps, i, x)) return i;
    return -1;
  };

  // Static order: a cell joins once one of its faces is settled; its faces are
  // settled with it. Isolated objects start new components.
  std::vector<std::vector<char>> settled(full + 1), unit_cell(full + 1);
  for (unsigned e = 0; e <= full; ++e) {
    settled[e].assign(a->count(e), 0);
    unit_cell[e].assign(a->count(e), 0);
    for (int x = 0; x < a->count(e); ++x) unit_cell[e][x] = unit_dir(e, x) >= 0;
  }
  std::function<void(unsigned, int)> settle = [&](unsigned eps, int x) {
    if (settled[eps][x]) return;
    settled[eps][x] = 1;
    for (int i = 0; i < n; ++i)
      if (eps >> i & 1u) {
        settle(eps & ~(1u << i), a->src(eps, i, x));
        settle(eps & ~(1u << i), a->tgt(eps, i, x));
      }
  };
  std::vector<std::pair<unsigned, int>> order;
  for (;;) {
    bool found = false;
    for (auto it = levels.rbegin(); it != levels.rend() && !found; ++it) {
      unsigned e = *it;
      if (e == 0) continue;
      for (int x = 0; x < a->count(e) && !found; ++x) {
        if (settled[e][x] || unit_cell[e][x]) continue;
        for (int i = 0; i < n && !found; ++i)
          if ((e >> i & 1u) && (settled[e & ~(1u << i)][a->src(e, i, x)] || settled[e & ~(1u << i)][a->tgt(e, i, x)]))
            found = true;
        if (found) {
          order.emplace_back(e, x);
          settle(e, x);
        }
      }
    }
    if (found) continue;
    int obj = -1;
    for (int x = 0; x < a->count(0); ++x)
      if (!settled[0][x]) {
        obj = x;
        break;
      }
    if (obj < 0) break;
    order.emplace_back(0u, obj);
    settle(0, obj);
  }
  // Cells left are units (their bases may be units themselves).

  std::vector<std::vector<int>> img(full + 1);
  for (unsigned e = 0; e <= full; ++e) img[e].assign(a->count(e), -1);
  std::vector<std::pair<unsigned, int>> trail;
  std::function<bool(unsigned, int, int)> assign = [&](unsigned eps, int x, int y) -> bool {
    if (img[eps][x] >= 0) return img[eps][x] == y;
    img[eps][x] = y;
    trail.emplace_back(eps, x);
    for (int i = 0; i < n; ++i)
      if (eps >> i & 1u) {
        unsigned lo = eps & ~(1u << i);
        if (!assign(lo, a->src(eps, i, x), b->src(eps, i, y))) return false;
        if (!assign(lo, a->tgt(eps, i, x), b->tgt(eps, i, y))) return false;
      }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      img[trail.back().first][trail.back().second] = -1;
      trail.pop_back();
    }
  };

  long long count = 0;
  bool stop = false;
  std::vector<int> all;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    budget_tick();
    if (k == order.size()) {
      std::size_t mark = trail.size();
      bool ok = true;
      for (unsigned e : levels) {
        for (int x = 0; x < a->count(e) && ok; ++x) {
          if (!unit_cell[e][x]) continue;
          int i = unit_dir(e, x);
          unsigned lo = e & ~(1u << i);
          int base = img[lo][a->src(e, i, x)];
          ok = base >= 0 && assign(e, x, b->unit(lo, i, base));
        }
        if (!ok) break;
      }
      if (ok) {
        NFoldFunctor f{a, b, img};
        if (f.check()) {
          ++count;
          if (count > limit) throw ResourceError("more than " + std::to_string(limit) + " functors");
          if (visit && !visit(f)) stop = true;
        }
      }
      undo(mark);
      return;
    }
    auto [eps, x] = order[k];
    if (img[eps][x] >= 0) {
      rec(k + 1);
      return;
    }
    const std::vector<int>* pool = nullptr;
    for (int i = 0; i < n && !pool; ++i)
      if (eps >> i & 1u) {
        int s = img[eps & ~(1u << i)][a->src(eps, i, x)];
        if (s >= 0) pool = &b->starting_at(eps, i, s);
      }
    std::vector<int> every;
    if (!pool) {
      every.resize(b->count(eps));
      for (int y = 0; y < b->count(eps); ++y) every[y] = y;
      pool = &every;
    }
    for (int y : *pool) {
      std::size_t mark = trail.size();
      if (assign(eps, x, y)) rec(k + 1);
      undo(mark);
      if (stop) return;
    }
  };
  rec(0);
  return count;
}

long long enumerate_simplicial_maps(SSet x, SSet y, const std::function<bool(const SimplicialMap&)>& visit, long long limit) {
  const int top = x->dim();
  // All p-simplices of Y, indexed by their 0-th face.
  std::vector<std::vector<Simplex>> all(top + 1);
  std::vector<std::map<Simplex, std::vector<int>>> by_face0(top + 1);
  for (int p = 0; p <= top; ++p)
    for (int q = 0; q <= std::min(p, y->dim()); ++q)
      for (const OrdinalMap& s : surjections(p, q))
        for (int i = 0; i < y->count(q); ++i) {
          Simplex z{s, i};
          if (p > 0) by_face0[p][y->face_of(z, 0)].push_back(static_cast<int>(all[p].size()));
          all[p].push_back(z);
        }
  std::vector<std::pair<int, int>> order;
  for (int p = 0; p <= top; ++p)
    for (int i = 0; i < x->count(p); ++i) order.emplace_back(p, i);

  SimplicialMap f{x, y, {}};
  f.image.resize(top + 1);
  for (int p = 0; p <= top; ++p) f.image[p].resize(x->count(p));
  auto image_of = [&](const Simplex& s) {
    const Simplex& t = f.image[s.nd_degree()][s.index];
    return y->apply(s.eta, t);
  };
  long long count = 0;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    budget_tick();
    if (k == order.size()) {
      if (++count > limit) throw ResourceError("more than " + std::to_string(limit) + " simplicial maps");
      if (visit && !visit(f)) stop = true;
      return;
    }
    auto [p, i] = order[k];
    if (p == 0) {
      for (int v = 0; v < y->count(0); ++v) {
        f.image[0][i] = SimplicialSet::nd(0, v);
        rec(k + 1);
        if (stop) return;
      }
      return;
    }
    std::vector<Simplex> faces(p + 1);
    for (int j = 0; j <= p; ++j) faces[j] = image_of(x->face(p, i, j));
    auto it = by_face0[p].find(faces[0]);
    if (it == by_face0[p].end()) return;
    for (int c : it->second) {
      const Simplex& z = all[p][c];
      bool ok = true;
      for (int j = 1; j <= p && ok; ++j) ok = y->face_of(z, j) == faces[j];
      if (!ok) continue;
      f.image[p][i] = z;
      rec(k + 1);
      if (stop) return;
    }
  };
  rec(0);
  return count;
}

}  // namespace nfold
