#include "nfold/saturation.hpp"

#include <algorithm>
#include <bit>

namespace nfold {

namespace {
constexpr unsigned bit(int i) { return 1u << i; }
}  // namespace

Saturator::Saturator(int n, SaturationLimits lim) : n_(n), lim_(lim), lv_(1u << n) {
  for (auto& l : lv_) {
    l.src.resize(n);
    l.tgt.resize(n);
    l.unit_tab.resize(n);
    l.unit_of.resize(n);
    l.comp_tab.resize(n);
  }
}

int Saturator::new_node(unsigned eps, Derivation d, int len) {
  if (++nodes_ > lim_.node_cap) throw GuardTripped("saturation exceeded the node cap of " + std::to_string(lim_.node_cap));
  Level& l = lv_[eps];
  int x = static_cast<int>(l.parent.size());
  l.der.push_back(d);
  l.gen_label.emplace_back();
  l.parent.push_back(x);
  l.len.push_back(len);
  l.gen_rep.push_back(-1);
  for (int i = 0; i < n_; ++i) {
    l.src[i].push_back(-1);
    l.tgt[i].push_back(-1);
  }
  return x;
}

int Saturator::add_generator(unsigned eps, std::string label) {
  int x = new_node(eps, Derivation{}, 1);
  lv_[eps].gen_label[x] = std::move(label);
  lv_[eps].gen_rep[x] = x;
  return x;
}

void Saturator::set_src(unsigned eps, int i, int x, int s) { lv_[eps].src[i][x] = s; }
void Saturator::set_tgt(unsigned eps, int i, int x, int t) { lv_[eps].tgt[i][x] = t; }

int Saturator::root(unsigned eps, int x) const {
  const auto& p = lv_[eps].parent;
  while (p[x] != x) x = p[x];
  return x;
}

int Saturator::find(unsigned eps, int x) const { return root(eps, x); }

std::optional<int> Saturator::lookup_unit(unsigned eps, int i, int x) const {
  const auto& t = lv_[eps].unit_tab[i];
  auto it = t.find(root(eps, x));
  if (it == t.end()) return std::nullopt;
  return root(eps | bit(i), it->second);
}

bool Saturator::unit_root(unsigned eps, int i, int x) const { return lv_[eps].unit_of[i].count(root(eps, x)) > 0; }

std::optional<int> Saturator::lookup_comp(unsigned eps, int i, int a, int b) const {
  a = root(eps, a);
  b = root(eps, b);
  const auto& t = lv_[eps].comp_tab[i];
  auto it = t.find(pair_key(a, b));
  if (it != t.end()) return root(eps, it->second);
  if (unit_root(eps, i, a)) return b;
  if (unit_root(eps, i, b)) return a;
  return std::nullopt;
}

int Saturator::unit(unsigned eps, int i, int x) {
  x = root(eps, x);
  if (auto u = lookup_unit(eps, i, x)) return *u;
  const unsigned up = eps | bit(i);
  int y = new_node(up, Derivation{Derivation::Unit, i, x, -1}, lv_[eps].len[x]);
  lv_[up].src[i][y] = x;
  lv_[up].tgt[i][y] = x;
  lv_[eps].unit_tab[i][x] = y;
  lv_[up].unit_of[i][y] = x;
  for (int j = 0; j < n_; ++j) {
    if (!(eps & bit(j))) continue;
    const unsigned lo = eps & ~bit(j);
    int s = unit(lo, i, lv_[eps].src[j][x]);
    int t = unit(lo, i, lv_[eps].tgt[j][x]);
    lv_[up].src[j][y] = s;
    lv_[up].tgt[j][y] = t;
  }
  return y;
}

int Saturator::comp(unsigned eps, int i, int a, int b) {
  a = root(eps, a);
  b = root(eps, b);
  const unsigned lo = eps & ~bit(i);
  if (root(lo, lv_[eps].tgt[i][a]) != root(lo, lv_[eps].src[i][b]))
    throw Error("formal composite of non-composable cells in direction " + std::to_string(i));
  if (auto c = lookup_comp(eps, i, a, b)) return *c;
  int len = lv_[eps].len[a] + lv_[eps].len[b];
  if (len > lim_.word_guard)
    throw GuardTripped("formal composite longer than the word guard " + std::to_string(lim_.word_guard));
  int c = new_node(eps, Derivation{Derivation::Comp, i, a, b}, len);
  lv_[eps].src[i][c] = lv_[eps].src[i][a];
  lv_[eps].tgt[i][c] = lv_[eps].tgt[i][b];
  lv_[eps].comp_tab[i][pair_key(a, b)] = c;
  for (int j = 0; j < n_; ++j) {
    if (j == i || !(eps & bit(j))) continue;
    const unsigned lj = eps & ~bit(j);
    int s = comp(lj, i, lv_[eps].src[j][a], lv_[eps].src[j][b]);
    int t = comp(lj, i, lv_[eps].tgt[j][a], lv_[eps].tgt[j][b]);
    lv_[eps].src[j][c] = s;
    lv_[eps].tgt[j][c] = t;
  }
  return c;
}

void Saturator::seed_unit(unsigned eps, int i, int x, int u) {
  const unsigned up = eps | bit(i);
  x = root(eps, x);
  u = root(up, u);
  auto [it, fresh] = lv_[eps].unit_tab[i].emplace(x, u);
  if (!fresh) merge(up, it->second, u);
  auto [jt, fresh2] = lv_[up].unit_of[i].emplace(u, x);
  if (!fresh2) merge(eps, jt->second, x);
}

void Saturator::seed_comp(unsigned eps, int i, int first, int second, int result) {
  first = root(eps, first);
  second = root(eps, second);
  auto [it, fresh] = lv_[eps].comp_tab[i].emplace(pair_key(first, second), result);
  if (!fresh) merge(eps, it->second, result);
}

void Saturator::merge(unsigned eps, int a, int b) { pending_.emplace_back(eps, a, b); }

void Saturator::flush() {
  while (!pending_.empty()) {
    auto [eps, a, b] = pending_.back();
    pending_.pop_back();
    Level& l = lv_[eps];
    int ra = root(eps, a), rb = root(eps, b);
    if (ra == rb) continue;
    if (ra > rb) std::swap(ra, rb);
    l.parent[rb] = ra;
    l.len[ra] = std::min(l.len[ra], l.len[rb]);
    if (l.gen_rep[ra] < 0 || (l.gen_rep[rb] >= 0 && l.gen_rep[rb] < l.gen_rep[ra])) l.gen_rep[ra] = l.gen_rep[rb];
    ++merges_;
    for (int i = 0; i < n_; ++i) {
      if (!(eps & bit(i))) continue;
      const unsigned lo = eps & ~bit(i);
      pending_.emplace_back(lo, l.src[i][ra], l.src[i][rb]);
      pending_.emplace_back(lo, l.tgt[i][ra], l.tgt[i][rb]);
    }
  }
}

void Saturator::canonicalize() {
  do {
    flush();
    for (unsigned eps = 0; eps < lv_.size(); ++eps) {
      auto& p = lv_[eps].parent;
      for (std::size_t x = 0; x < p.size(); ++x) p[x] = p[p[x]];
      for (std::size_t x = 0; x < p.size(); ++x) p[x] = root(eps, static_cast<int>(x));
    }
    for (unsigned eps = 0; eps < lv_.size(); ++eps) {
      Level& l = lv_[eps];
      for (int i = 0; i < n_; ++i) {
        if (!(eps & bit(i))) {
          const unsigned up = eps | bit(i);
          std::unordered_map<int, int> t;
          for (auto [x, u] : l.unit_tab[i]) {
            auto [it, fresh] = t.emplace(root(eps, x), root(up, u));
            if (!fresh && it->second != root(up, u)) pending_.emplace_back(up, it->second, u);
          }
          l.unit_tab[i] = std::move(t);
        } else {
          const unsigned lo = eps & ~bit(i);
          std::unordered_map<int, int> t;
          for (auto [y, x] : l.unit_of[i]) {
            auto [it, fresh] = t.emplace(root(eps, y), root(lo, x));
            if (!fresh && it->second != root(lo, x)) pending_.emplace_back(lo, it->second, x);
          }
          l.unit_of[i] = std::move(t);
          std::unordered_map<std::uint64_t, int> c;
          c.reserve(l.comp_tab[i].size());
          for (auto [k, v] : l.comp_tab[i]) {
            int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffffu);
            auto [it, fresh] = c.emplace(pair_key(root(eps, a), root(eps, b)), root(eps, v));
            if (!fresh && it->second != root(eps, v)) pending_.emplace_back(eps, it->second, v);
          }
          l.comp_tab[i] = std::move(c);
        }
      }
    }
  } while (!pending_.empty());
}

std::vector<std::vector<std::vector<int>>> Saturator::index_by_src(unsigned eps) const {
  const Level& l = lv_[eps];
  std::vector<std::vector<std::vector<int>>> idx(n_);
  for (int i = 0; i < n_; ++i) {
    if (!(eps & bit(i))) continue;
    const unsigned lo = eps & ~bit(i);
    idx[i].resize(lv_[lo].parent.size());
    for (int x = 0; x < static_cast<int>(l.parent.size()); ++x)
      if (l.parent[x] == x) idx[i][root(lo, l.src[i][x])].push_back(x);
  }
  return idx;
}

long long Saturator::live_classes() const {
  long long c = 0;
  for (auto& l : lv_)
    for (int x = 0; x < static_cast<int>(l.parent.size()); ++x) c += l.parent[x] == x;
  return c;
}

void Saturator::enforce_axioms() {
  for (unsigned eps = 0; eps < lv_.size(); ++eps) {
    Level& l = lv_[eps];
    auto idx = index_by_src(eps);
    for (int i = 0; i < n_; ++i) {
      if (eps & bit(i)) {
        const unsigned lo = eps & ~bit(i);
        std::vector<std::pair<std::uint64_t, int>> entries(l.comp_tab[i].begin(), l.comp_tab[i].end());
        for (auto [k, c] : entries) {
          budget_tick();
          int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffffu);
          if (unit_root(eps, i, a)) merge(eps, c, b);
          if (unit_root(eps, i, b)) merge(eps, c, a);
          for (int d : idx[i][root(lo, l.tgt[i][b])]) {
            auto bd = lookup_comp(eps, i, b, d);
            if (!bd) continue;
            auto left = lookup_comp(eps, i, c, d), right = lookup_comp(eps, i, a, *bd);
            if (left && right) merge(eps, *left, *right);
          }
          for (int j = 0; j < n_; ++j) {
            if (j == i) continue;
            if (eps & bit(j)) {
              const unsigned lj = eps & ~bit(j);
              if (auto s = lookup_comp(lj, i, l.src[j][a], l.src[j][b])) merge(lj, *s, l.src[j][c]);
              if (auto t = lookup_comp(lj, i, l.tgt[j][a], l.tgt[j][b])) merge(lj, *t, l.tgt[j][c]);
            } else {
              const unsigned uj = eps | bit(j);
              auto ua = lookup_unit(eps, j, a), ub = lookup_unit(eps, j, b), uc = lookup_unit(eps, j, c);
              if (!ua || !ub || !uc) continue;
              if (auto r = lookup_comp(uj, i, *ua, *ub)) merge(uj, *r, *uc);
            }
          }
        }
      } else {
        const unsigned up = eps | bit(i);
        std::vector<std::pair<int, int>> entries(l.unit_tab[i].begin(), l.unit_tab[i].end());
        for (auto [x, y] : entries) {
          merge(eps, lv_[up].src[i][y], x);
          merge(eps, lv_[up].tgt[i][y], x);
          for (int j = 0; j < n_; ++j) {
            if (j == i) continue;
            if (eps & bit(j)) {
              const unsigned lj = eps & ~bit(j);
              if (auto s = lookup_unit(lj, i, l.src[j][x])) merge(lj | bit(i), *s, lv_[up].src[j][y]);
              if (auto t = lookup_unit(lj, i, l.tgt[j][x])) merge(lj | bit(i), *t, lv_[up].tgt[j][y]);
            } else {
              auto uy = lookup_unit(up, j, y);
              auto ux = lookup_unit(eps, j, x);
              if (!uy || !ux) continue;
              if (auto other = lookup_unit(eps | bit(j), i, *ux)) merge(up | bit(j), *uy, *other);
            }
          }
        }
      }
    }
    // interchange: w -> x in direction i, w -> y in direction j, z closing the square
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        if (!(eps & bit(i)) || !(eps & bit(j))) continue;
        const unsigned li = eps & ~bit(i), lj = eps & ~bit(j);
        for (int w = 0; w < static_cast<int>(l.parent.size()); ++w) {
          if (l.parent[w] != w) continue;
          for (int x : idx[i][root(li, l.tgt[i][w])]) {
            auto wx = lookup_comp(eps, i, w, x);
            if (!wx) continue;
            for (int y : idx[j][root(lj, l.tgt[j][w])]) {
              budget_tick();
              auto wy = lookup_comp(eps, j, w, y);
              if (!wy) continue;
              for (int z : idx[i][root(li, l.tgt[i][y])]) {
                if (root(lj, l.src[j][z]) != root(lj, l.tgt[j][x])) continue;
                auto xz = lookup_comp(eps, j, x, z), yz = lookup_comp(eps, i, y, z);
                if (!xz || !yz) continue;
                auto left = lookup_comp(eps, i, *wy, *xz), right = lookup_comp(eps, j, *wx, *yz);
                if (left && right) merge(eps, *left, *right);
              }
            }
          }
        }
      }
  }
}

std::string Saturator::word(unsigned eps, int x, std::vector<std::unordered_map<int, std::string>>& memo) const {
  x = root(eps, x);
  auto it = memo[eps].find(x);
  if (it != memo[eps].end()) return it->second;
  const Level& l = lv_[eps];
  std::string w;
  if (l.gen_rep[x] >= 0) {
    w = l.gen_label[l.gen_rep[x]];
  } else {
    const Derivation& d = l.der[x];
    if (d.kind == Derivation::Unit)
      w = "1^" + std::to_string(d.dir) + "(" + word(eps & ~bit(d.dir), d.a, memo) + ")";
    else
      w = "(" + word(eps, d.b, memo) + " o" + std::to_string(d.dir) + " " + word(eps, d.a, memo) + ")";
  }
  memo[eps][x] = w;
  return w;
}

Saturated Saturator::run() {
  Saturated out;
  for (int round = 1;; ++round) {
    budget_tick();
    const long long n0 = nodes_, m0 = merges_;
    canonicalize();
    for (int pc = 0; pc <= n_; ++pc)
      for (unsigned eps = 0; eps < lv_.size(); ++eps) {
        if (std::popcount(eps) != pc) continue;
        const int size = static_cast<int>(lv_[eps].parent.size());
        for (int x = 0; x < size; ++x) {
          if (root(eps, x) != x) continue;
          for (int i = 0; i < n_; ++i)
            if (!(eps & bit(i))) unit(eps, i, x);
        }
      }
    canonicalize();
    for (int pc = 1; pc <= n_; ++pc)
      for (unsigned eps = 0; eps < lv_.size(); ++eps) {
        if (std::popcount(eps) != pc) continue;
        auto idx = index_by_src(eps);
        const int size = static_cast<int>(lv_[eps].parent.size());
        for (int i = 0; i < n_; ++i) {
          if (!(eps & bit(i))) continue;
          const unsigned lo = eps & ~bit(i);
          for (int a = 0; a < size; ++a) {
            if (lv_[eps].parent[a] != a) continue;
            for (int b : idx[i][root(lo, lv_[eps].tgt[i][a])]) comp(eps, i, a, b);
          }
        }
      }
    canonicalize();
    if (live_classes() > lim_.cell_cap)
      throw GuardTripped("saturation exceeded the cell cap of " + std::to_string(lim_.cell_cap));
    enforce_axioms();
    canonicalize();
    if (nodes_ == n0 && merges_ == m0) {
      out.rounds = round;
      break;
    }
  }

  auto d = std::make_shared<NFoldCategory>(n_);
  std::vector<std::vector<int>> cell(lv_.size());
  std::vector<std::unordered_map<int, std::string>> memo(lv_.size());
  out.generator_of.resize(lv_.size());
  for (unsigned eps = 0; eps < lv_.size(); ++eps) {
    const Level& l = lv_[eps];
    cell[eps].assign(l.parent.size(), -1);
    for (int x = 0; x < static_cast<int>(l.parent.size()); ++x) {
      if (l.parent[x] != x) continue;
      cell[eps][x] = d->add(eps, word(eps, x, memo));
      out.generator_of[eps].push_back(l.gen_rep[x]);
    }
  }
  for (unsigned eps = 0; eps < lv_.size(); ++eps) {
    const Level& l = lv_[eps];
    for (int x = 0; x < static_cast<int>(l.parent.size()); ++x) {
      if (l.parent[x] != x) continue;
      for (int i = 0; i < n_; ++i) {
        if (eps & bit(i)) {
          const unsigned lo = eps & ~bit(i);
          d->set_src(eps, i, cell[eps][x], cell[lo][root(lo, l.src[i][x])]);
          d->set_tgt(eps, i, cell[eps][x], cell[lo][root(lo, l.tgt[i][x])]);
        } else {
          auto u = lookup_unit(eps, i, x);
          if (!u) throw Error("saturation left a unit undefined");
          d->set_unit(eps, i, cell[eps][x], cell[eps | bit(i)][*u]);
        }
      }
    }
  }
  d->finalize();
  std::vector<std::vector<int>> root_of_cell(lv_.size());
  for (unsigned eps = 0; eps < lv_.size(); ++eps) {
    root_of_cell[eps].resize(d->count(eps));
    for (int x = 0; x < static_cast<int>(cell[eps].size()); ++x)
      if (cell[eps][x] >= 0) root_of_cell[eps][cell[eps][x]] = x;
  }
  for (unsigned eps = 0; eps < lv_.size(); ++eps)
    for (int i = 0; i < n_; ++i) {
      if (!(eps & bit(i))) continue;
      for (int cx = 0; cx < d->count(eps); ++cx)
        for (int cy : d->starting_at(eps, i, d->tgt(eps, i, cx))) {
          auto c = lookup_comp(eps, i, root_of_cell[eps][cx], root_of_cell[eps][cy]);
          if (!c) throw Error("saturation left a composite undefined");
          d->set_compose(eps, i, cx, cy, cell[eps][*c]);
        }
    }
  out.cat = d;
  out.nodes.resize(lv_.size());
  out.cell_of.resize(lv_.size());
  for (unsigned eps = 0; eps < lv_.size(); ++eps) {
    const Level& l = lv_[eps];
    out.nodes[eps] = l.der;
    for (int x = 0; x < static_cast<int>(l.parent.size()); ++x) out.cell_of[eps].push_back(cell[eps][root(eps, x)]);
  }
  return out;
}

std::optional<NFoldFunctor> Saturated::extend(NCat E, const std::function<int(unsigned, int)>& generator_value) const {
  std::vector<std::vector<int>> val(nodes.size());
  for (unsigned eps = 0; eps < nodes.size(); ++eps) {
    val[eps].assign(nodes[eps].size(), -1);
    for (int x = 0; x < static_cast<int>(nodes[eps].size()); ++x) {
      const Derivation& d = nodes[eps][x];
      int v = -1;
      if (d.kind == Derivation::Gen) {
        v = generator_value(eps, x);
      } else if (d.kind == Derivation::Unit) {
        const unsigned lo = eps & ~bit(d.dir);
        if (val[lo][d.a] >= 0) v = E->unit(lo, d.dir, val[lo][d.a]);
      } else if (val[eps][d.a] >= 0 && val[eps][d.b] >= 0) {
        auto c = E->compose(eps, d.dir, val[eps][d.a], val[eps][d.b]);
        if (c) v = *c;
      }
      if (v < 0 || v >= E->count(eps)) return std::nullopt;
      val[eps][x] = v;
    }
  }
  NFoldFunctor f{cat, E, {}};
  for (unsigned eps = 0; eps < nodes.size(); ++eps) {
    f.map.emplace_back(cat->count(eps), -1);
    for (int x = 0; x < static_cast<int>(nodes[eps].size()); ++x) {
      int& slot = f.map[eps][cell_of[eps][x]];
      if (slot >= 0 && slot != val[eps][x]) return std::nullopt;
      slot = val[eps][x];
    }
  }
  if (!f.check()) return std::nullopt;
  return f;
}

Cat categorify(const SimplicialSet& X, int word_guard) {
  SaturationLimits lim;
  lim.word_guard = word_guard;
  Saturator s(1, lim);
  for (int v = 0; v < X.count(0); ++v) s.add_generator(0, X.label(0, v));
  std::vector<int> edge(X.count(1));
  for (int e = 0; e < X.count(1); ++e) {
    edge[e] = s.add_generator(1, X.label(1, e));
    s.set_src(1, 0, edge[e], X.face(1, e, 1).index);
    s.set_tgt(1, 0, edge[e], X.face(1, e, 0).index);
  }
  auto term = [&](const Simplex& f) { return f.nondegenerate() ? edge[f.index] : s.unit(0, 0, f.index); };
  for (int t = 0; t < X.count(2); ++t) {
    int d2 = term(X.face(2, t, 2)), d0 = term(X.face(2, t, 0)), d1 = term(X.face(2, t, 1));
    s.merge(1, s.comp(1, 0, d2, d0), d1);
  }
  return to_category(*s.run().cat);
}

NFoldFunctor as_nfold(const Functor& f) {
  return NFoldFunctor{from_category(*f.dom), from_category(*f.cod), {f.obj, f.mor}};
}

namespace {
void require_injective(const NFoldFunctor& f, const char* which) {
  for (unsigned eps = 0; eps < f.map.size(); ++eps) {
    std::vector<char> hit(f.cod->count(eps), 0);
    for (int v : f.map[eps]) {
      if (hit[v]) throw UnsupportedInput(std::string("pushout leg into ") + which + " is not injective");
      hit[v] = 1;
    }
  }
}
}  // namespace

NFoldPushout nfold_pushout(const NFoldFunctor& s_to_q, const NFoldFunctor& s_to_r, SaturationLimits lim) {
  const NFoldCategory& S = *s_to_q.dom;
  const NFoldCategory& Q = *s_to_q.cod;
  const NFoldCategory& R = *s_to_r.cod;
  const int n = S.n();
  if (Q.n() != n || R.n() != n || s_to_r.dom->n() != n) throw PreconditionError("pushout legs have different arity");
  for (unsigned eps = 0; eps <= S.full(); ++eps)
    if (s_to_r.dom->count(eps) != S.count(eps)) throw PreconditionError("pushout legs have different domains");
  // only the R leg is inverted below; S may be collapsed in Q
  require_injective(s_to_r, "R");

  Saturator sat(n, lim);
  NFoldPushout out;
  const unsigned cubes = 1u << n;
  out.q_node.resize(cubes);
  out.r_node.resize(cubes);
  for (unsigned eps = 0; eps < cubes; ++eps) {
    for (int x = 0; x < Q.count(eps); ++x) out.q_node[eps].push_back(sat.add_generator(eps, Q.label(eps, x)));
    std::vector<int> from_s(R.count(eps), -1);
    for (int s = 0; s < S.count(eps); ++s) from_s[s_to_r.map[eps][s]] = s;
    for (int y = 0; y < R.count(eps); ++y)
      out.r_node[eps].push_back(from_s[y] >= 0 ? out.q_node[eps][s_to_q.map[eps][from_s[y]]]
                                               : sat.add_generator(eps, R.label(eps, y)));
  }
  // cells of S get the same boundary from both sides
  auto boundaries = [&](const NFoldCategory& C, const std::vector<std::vector<int>>& node) {
    for (unsigned eps = 0; eps < cubes; ++eps)
      for (int x = 0; x < C.count(eps); ++x) {
        for (int i = 0; i < n; ++i) {
          if (!(eps & bit(i))) continue;
          const unsigned lo = eps & ~bit(i);
          sat.set_src(eps, i, node[eps][x], node[lo][C.src(eps, i, x)]);
          sat.set_tgt(eps, i, node[eps][x], node[lo][C.tgt(eps, i, x)]);
        }
      }
  };
  boundaries(Q, out.q_node);
  boundaries(R, out.r_node);
  auto seed = [&](const NFoldCategory& C, const std::vector<std::vector<int>>& node) {
    for (unsigned eps = 0; eps < cubes; ++eps)
      for (int i = 0; i < n; ++i) {
        if (!(eps & bit(i))) {
          for (int x = 0; x < C.count(eps); ++x)
            sat.seed_unit(eps, i, node[eps][x], node[eps | bit(i)][C.unit(eps, i, x)]);
          continue;
        }
        for (int a = 0; a < C.count(eps); ++a)
          for (int b : C.starting_at(eps, i, C.tgt(eps, i, a)))
            sat.seed_comp(eps, i, node[eps][a], node[eps][b], node[eps][C.comp(eps, i, a, b)]);
      }
  };
  seed(Q, out.q_node);
  seed(R, out.r_node);
  out.sat = sat.run();
  out.P = out.sat.cat;
  out.from_q = NFoldFunctor{s_to_q.cod, out.P, {}};
  out.from_r = NFoldFunctor{s_to_r.cod, out.P, {}};
  out.free_cells.resize(cubes);
  for (unsigned eps = 0; eps < cubes; ++eps) {
    out.from_q.map.emplace_back();
    for (int q : out.q_node[eps]) out.from_q.map[eps].push_back(out.sat.cell_of[eps][q]);
    out.from_r.map.emplace_back();
    for (int r : out.r_node[eps]) out.from_r.map[eps].push_back(out.sat.cell_of[eps][r]);
    for (int c = 0; c < out.P->count(eps); ++c)
      if (out.sat.is_free(eps, c)) out.free_cells[eps].push_back(c);
  }
  return out;
}

std::optional<NFoldFunctor> NFoldPushout::induced(const NFoldFunctor& f, const NFoldFunctor& g) const {
  if (f.cod != g.cod) throw PreconditionError("induced map needs a common codomain");
  std::vector<std::vector<int>> value(q_node.size());
  for (unsigned eps = 0; eps < q_node.size(); ++eps) {
    value[eps].assign(sat.nodes[eps].size(), -1);
    for (std::size_t x = 0; x < q_node[eps].size(); ++x) value[eps][q_node[eps][x]] = f.map[eps][x];
    for (std::size_t y = 0; y < r_node[eps].size(); ++y) {
      int& v = value[eps][r_node[eps][y]];
      if (v >= 0 && v != g.map[eps][y]) return std::nullopt;
      v = g.map[eps][y];
    }
  }
  return sat.extend(f.cod, [&](unsigned eps, int node) { return value[eps][node]; });
}

CatPushout pushout_cat(const Functor& s_to_q, const Functor& s_to_r, int word_guard) {
  SaturationLimits lim;
  lim.word_guard = word_guard;
  NFoldFunctor fq = as_nfold(s_to_q), fr = as_nfold(s_to_r);
  fr.dom = fq.dom;
  auto r = nfold_pushout(fq, fr, lim);
  CatPushout out;
  std::vector<int> mm;
  out.P = to_category(*r.P, &mm);
  out.from_q = Functor{s_to_q.cod, out.P, r.from_q.map[0], {}};
  out.from_r = Functor{s_to_r.cod, out.P, r.from_r.map[0], {}};
  for (int f : r.from_q.map[1]) out.from_q.mor.push_back(mm[f]);
  for (int f : r.from_r.map[1]) out.from_r.mor.push_back(mm[f]);
  for (int f : r.free_cells[1]) out.free_morphisms.push_back(mm[f]);
  out.sat = std::move(r.sat);
  return out;
}

}  // namespace nfold
