#include "nfold/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace nfold {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

inline long long mul_sub(long long a, long long f, long long b) {
  long long prod, res;
  if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &res)) throw Overflow{};
  if (res > (1LL << 61) || res < -(1LL << 61)) throw Overflow{};
  return res;
}
inline BigInt mul_sub(const BigInt& a, const BigInt& f, const BigInt& b) { return a - f * b; }

inline bool is_unit(long long v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

// Eliminates unit pivots sparsely; what remains goes to a dense Smith form.
template <class T>
class Eliminator {
 public:
  Eliminator(int rows, const std::vector<SparseColumn>& cols) : rows_(rows), row_cols_(rows), row_dead_(rows, false) {
    cols_.resize(cols.size());
    col_dead_.assign(cols.size(), false);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (auto& [r, v] : cols[c]) {
        if (v == 0) continue;
        cols_[c].emplace_back(r, T(v));
        row_cols_[r].push_back(static_cast<int>(c));
      }
    }
  }

  SmithInvariants run() {
    int rank = 0;
    bool progress = true;
    while (progress) {
      progress = false;
      std::vector<int> order;
      for (std::size_t c = 0; c < cols_.size(); ++c)
        if (!col_dead_[c] && !cols_[c].empty()) order.push_back(static_cast<int>(c));
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return cols_[a].size() < cols_[b].size(); });
      for (int c : order) {
        budget_tick();
        if (col_dead_[c] || cols_[c].empty()) continue;
        int best = -1;
        std::size_t best_len = 0;
        for (auto& [r, v] : cols_[c]) {
          if (!is_unit(v)) continue;
          if (best < 0 || row_cols_[r].size() < best_len) {
            best = r;
            best_len = row_cols_[r].size();
          }
        }
        if (best < 0) continue;
        pivot(best, c);
        ++rank;
        progress = true;
      }
    }
    // Dense residual.
    std::vector<int> live_cols, live_rows;
    std::vector<int> row_pos(rows_, -1);
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (col_dead_[c] || cols_[c].empty()) continue;
      live_cols.push_back(static_cast<int>(c));
      for (auto& [r, v] : cols_[c])
        if (row_pos[r] < 0) {
          row_pos[r] = static_cast<int>(live_rows.size());
          live_rows.push_back(r);
        }
    }
    SmithInvariants out;
    out.rank = rank;
    if (live_cols.empty()) return out;
    std::vector<std::vector<BigInt>> a(live_rows.size(), std::vector<BigInt>(live_cols.size()));
    for (std::size_t j = 0; j < live_cols.size(); ++j)
      for (auto& [r, v] : cols_[live_cols[j]]) a[row_pos[r]][j] = BigInt(v);
    auto diag = dense_diagonal(a);
    out.rank += static_cast<int>(diag.size());
    for (auto& d : diag)
      if (d != 1) out.torsion.push_back(d.str());
    return out;
  }

 private:
  void pivot(int r, int c) {
    const T a = value(cols_[c], r);
    for (int c2 : std::vector<int>(row_cols_[r])) {
      if (c2 == c || col_dead_[c2]) continue;
      auto it = std::lower_bound(cols_[c2].begin(), cols_[c2].end(), r,
                                 [](const std::pair<int, T>& e, int row) { return e.first < row; });
      if (it == cols_[c2].end() || it->first != r) continue;
      T f = it->second * a;  // a is a unit, a^{-1} = a
      cols_[c2] = combine(cols_[c2], f, cols_[c], c2);
    }
    col_dead_[c] = true;
    row_dead_[r] = true;
    row_cols_[r].clear();
  }

  static T value(const std::vector<std::pair<int, T>>& col, int r) {
    for (auto& [row, v] : col)
      if (row == r) return v;
    return T(0);
  }

  // x - f*y, recording new fill-in in the row index.
  std::vector<std::pair<int, T>> combine(const std::vector<std::pair<int, T>>& x, const T& f,
                                         const std::vector<std::pair<int, T>>& y, int cx) {
    std::vector<std::pair<int, T>> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        T v = mul_sub(T(0), f, y[j].second);
        if (v != 0) {
          out.emplace_back(y[j].first, v);
          row_cols_[y[j].first].push_back(cx);
        }
        ++j;
      } else {
        T v = mul_sub(x[i].second, f, y[j].second);
        if (v != 0) out.emplace_back(x[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  static std::vector<BigInt> dense_diagonal(std::vector<std::vector<BigInt>>& a) {
    const std::size_t R = a.size(), C = R ? a[0].size() : 0;
    std::vector<BigInt> diag;
    std::size_t t = 0;
    while (t < R && t < C) {
      budget_tick();
      // smallest nonzero entry of the remaining block
      std::size_t pr = R, pc = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (a[i][j] != 0 && (pr == R || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == R) break;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = false;
      while (!clean) {
        clean = true;
        for (std::size_t i = t + 1; i < R; ++i) {
          if (a[i][t] == 0) continue;
          BigInt q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < C; ++j) a[i][j] -= q * a[t][j];
          if (a[i][t] != 0) {
            std::swap(a[t], a[i]);
            clean = false;
          }
        }
        for (std::size_t j = t + 1; j < C; ++j) {
          if (a[t][j] == 0) continue;
          BigInt q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < R; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] != 0) {
            for (auto& row : a) std::swap(row[t], row[j]);
            clean = false;
          }
        }
      }
      diag.push_back(abs(a[t][t]));
      ++t;
    }
    // diag(d_i) to invariant factors by gcd/lcm exchange
    for (std::size_t i = 0; i < diag.size(); ++i)
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        BigInt g = gcd(diag[i], diag[j]);
        BigInt l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    return diag;
  }

  int rows_;
  std::vector<std::vector<std::pair<int, T>>> cols_;
  std::vector<std::vector<int>> row_cols_;
  std::vector<bool> row_dead_;
  std::vector<bool> col_dead_;
};

}  // namespace

SmithInvariants smith_invariants(int rows, const std::vector<SparseColumn>& cols) {
  try {
    return Eliminator<long long>(rows, cols).run();
  } catch (const Overflow&) {
    return Eliminator<BigInt>(rows, cols).run();
  }
}

long long HomologyResult::euler_from_cells() const {
  long long e = 0;
  for (std::size_t p = 0; p < cells.size(); ++p) e += (p % 2 ? -1 : 1) * static_cast<long long>(cells[p]);
  return e;
}

long long HomologyResult::euler_from_betti() const {
  long long e = 0;
  for (std::size_t p = 0; p < betti.size(); ++p) e += (p % 2 ? -1 : 1) * static_cast<long long>(betti[p]);
  return e;
}

bool HomologyResult::euler_consistent() const {
  if (valid_below >= 0) return true;
  return euler_from_cells() == euler_from_betti();
}

bool HomologyResult::trivial() const {
  for (std::size_t p = 0; p < betti.size(); ++p) {
    if (betti[p] != (p == 0 ? 1 : 0)) return false;
    if (!torsion[p].empty()) return false;
  }
  return !betti.empty();
}

std::string HomologyResult::str() const {
  std::ostringstream os;
  for (std::size_t p = 0; p < betti.size(); ++p) {
    os << (p ? " " : "") << "H" << p << "=Z^" << betti[p];
    for (auto& t : torsion[p]) os << "+Z/" << t;
  }
  if (valid_below >= 0) os << " (valid below " << valid_below << ")";
  return os.str();
}

bool HomologyResult::same_groups(const HomologyResult& o) const {
  std::size_t n = std::min(betti.size(), o.betti.size());
  if (valid_below < 0 && o.valid_below < 0 && betti.size() != o.betti.size()) {
    // trailing zero groups are allowed to differ in length
    auto zero_from = [](const HomologyResult& h, std::size_t k) {
      for (std::size_t p = k; p < h.betti.size(); ++p)
        if (h.betti[p] || !h.torsion[p].empty()) return false;
      return true;
    };
    if (!zero_from(*this, n) || !zero_from(o, n)) return false;
  }
  for (std::size_t p = 0; p < n; ++p)
    if (betti[p] != o.betti[p] || torsion[p] != o.torsion[p]) return false;
  return true;
}

HomologyResult homology(const ChainComplex& c) {
  const int top = static_cast<int>(c.dims.size()) - 1;
  std::vector<SmithInvariants> inv(top + 2);
  for (int p = 1; p <= top; ++p) inv[p] = smith_invariants(c.dims[p - 1], c.boundary[p]);
  HomologyResult h;
  h.valid_below = c.valid_below;
  h.cells = c.dims;
  int last = c.valid_below >= 0 ? std::min(top, c.valid_below - 1) : top;
  for (int p = 0; p <= last; ++p) {
    int r_in = p >= 1 ? inv[p].rank : 0;
    int r_out = p + 1 <= top ? inv[p + 1].rank : 0;
    h.betti.push_back(c.dims[p] - r_in - r_out);
    h.torsion.push_back(p + 1 <= top ? inv[p + 1].torsion : std::vector<std::string>{});
  }
  return h;
}

ChainComplex normalized_chains(const SimplicialSet& x) {
  ChainComplex c;
  const int top = x.dim();
  c.dims = x.counts();
  c.boundary.resize(top + 1);
  for (int p = 1; p <= top; ++p) {
    c.boundary[p].resize(x.count(p));
    for (int i = 0; i < x.count(p); ++i) {
      std::vector<std::pair<int, long long>> col;
      for (int j = 0; j <= p; ++j) {
        const Simplex& f = x.face(p, i, j);
        if (!f.nondegenerate()) continue;
        col.emplace_back(f.index, j % 2 ? -1 : 1);
      }
      std::sort(col.begin(), col.end());
      SparseColumn merged;
      for (auto& e : col) {
        if (!merged.empty() && merged.back().first == e.first)
          merged.back().second += e.second;
        else
          merged.push_back(e);
      }
      merged.erase(std::remove_if(merged.begin(), merged.end(), [](auto& e) { return e.second == 0; }),
                   merged.end());
      c.boundary[p][i] = std::move(merged);
    }
  }
  if (x.truncated_at()) c.valid_below = *x.truncated_at();
  return c;
}

HomologyResult homology(const SimplicialSet& x) { return homology(normalized_chains(x)); }

std::vector<int> components(const SimplicialSet& x, int* count) {
  const int n = x.count(0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };
  for (int e = 0; e < x.count(1); ++e) {
    int a = root(x.face(1, e, 0).index), b = root(x.face(1, e, 1).index);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> comp(n), id(n, -1);
  int k = 0;
  for (int v = 0; v < n; ++v) {
    int r = root(v);
    if (id[r] < 0) id[r] = k++;
    comp[v] = id[r];
  }
  if (count) *count = k;
  return comp;
}

}  // namespace nfold
