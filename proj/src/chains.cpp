#include "nfold/chains.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace nfold {

std::vector<Chain> maximal_chains(const FinPoset& t) {
  const int n = t.size();
  std::vector<std::vector<int>> up(n);
  std::vector<char> has_below(n, 0);
  for (auto [a, b] : t.covers()) {
    up[a].push_back(b);
    has_below[b] = 1;
  }
  std::vector<Chain> out;
  Chain cur;
  std::function<void(int)> rec = [&](int a) {
    cur.push_back(a);
    if (up[a].empty()) out.push_back(cur);
    for (int b : up[a]) rec(b);
    cur.pop_back();
  };
  for (int a = 0; a < n; ++a)
    if (!has_below[a]) rec(a);
  return out;
}

std::vector<Chain> chains_of_size(const FinPoset& t, int size) {
  std::vector<Chain> out;
  if (size <= 0) return {Chain{}};
  Chain cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b < t.size(); ++b)
      if (cur.empty() || t.less(cur.back(), b)) {
        cur.push_back(b);
        rec();
        cur.pop_back();
      }
  };
  rec();
  return out;
}

bool is_chain(const FinPoset& t, const std::vector<int>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!t.comparable(elems[i], elems[j])) return false;
  return true;
}

ChainCondition chain_condition(const FinPoset& t, int level, bool walk_check) {
  ChainCondition r;
  const int size = level + 1;
  r.extends = true;
  for (const Chain& c : maximal_chains(t))
    if (static_cast<int>(c.size()) != size) {
      r.extends = false;
      std::string s;
      for (int x : c) s += (s.empty() ? "" : "<") + t.labels[x];
      r.detail = "maximal chain " + s + " has " + std::to_string(c.size()) + " elements";
      break;
    }
  if (t.size() == 0) r.extends = size == 0;
  const std::vector<Chain> chains = chains_of_size(t, size);
  r.chains = static_cast<long long>(chains.size());

  // neighbours: chains sharing all but one element
  std::unordered_map<Key, std::vector<int>, KeyHash> by_drop;
  for (int c = 0; c < static_cast<int>(chains.size()); ++c)
    for (int j = 0; j < size; ++j) {
      Key k = chains[c];
      k.erase(k.begin() + j);
      by_drop[k].push_back(c);
    }
  std::vector<std::vector<int>> adj(chains.size());
  for (auto& [k, ids] : by_drop)
    for (int a : ids)
      for (int b : ids)
        if (a != b) adj[a].push_back(b);

  std::unordered_map<Key, std::vector<int>, KeyHash> groups;
  for (int c = 0; c < static_cast<int>(chains.size()); ++c)
    for (unsigned mask = 0; mask < (1u << size); ++mask) {
      Key sub;
      for (int j = 0; j < size; ++j)
        if (mask >> j & 1u) sub.push_back(chains[c][j]);
      groups[sub].push_back(c);
    }
  r.groups = static_cast<long long>(groups.size());
  r.connected = true;
  auto contains = [&](int c, const Key& sub) {
    return std::includes(chains[c].begin(), chains[c].end(), sub.begin(), sub.end());
  };
  auto overlap = [&](int a, int b) {
    int k = 0;
    for (int x : chains[a])
      if (std::binary_search(chains[b].begin(), chains[b].end(), x)) ++k;
    return k;
  };
  for (auto& [sub, ids] : groups) {
    budget_tick();
    std::unordered_set<int> seen{ids[0]};
    std::deque<int> queue{ids[0]};
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      for (int d : adj[c])
        if (!seen.count(d) && contains(d, sub)) {
          seen.insert(d);
          queue.push_back(d);
        }
    }
    if (seen.size() != ids.size() && r.connected) {
      r.connected = false;
      std::string s;
      for (int x : sub) s += (s.empty() ? "" : "<") + t.labels[x];
      r.detail = "chains through {" + s + "} are not connected";
    }
    if (!walk_check) continue;
    for (std::size_t g = 1; g < ids.size(); ++g) {
      ++r.walks;
      const int goal = ids[g];
      // depth-first, most overlap with the goal first
      std::vector<int> path{ids[0]};
      std::unordered_set<int> visited{ids[0]};
      std::function<bool()> walk = [&]() {
        int cur = path.back();
        if (cur == goal) return true;
        std::vector<int> next;
        for (int d : adj[cur])
          if (!visited.count(d) && contains(d, sub)) next.push_back(d);
        std::stable_sort(next.begin(), next.end(), [&](int a, int b) { return overlap(a, goal) > overlap(b, goal); });
        for (int d : next) {
          if (visited.count(d)) continue;
          visited.insert(d);
          path.push_back(d);
          if (walk()) return true;
          path.pop_back();
        }
        return false;
      };
      if (!walk()) continue;
      // each step swaps exactly one element and keeps the fixed chain
      bool valid = true;
      for (std::size_t s = 1; s < path.size() && valid; ++s)
        valid = overlap(path[s - 1], path[s]) == size - 1 && contains(path[s], sub);
      if (valid) ++r.walks_found;
    }
  }
  return r;
}

}  // namespace nfold
