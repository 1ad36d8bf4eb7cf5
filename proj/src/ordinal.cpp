#include "nfold/ordinal.hpp"

#include <sstream>

namespace nfold {

OrdinalMap::OrdinalMap(int target, std::vector<int> values)
    : target_(target), values_(std::move(values)) {
  if (values_.empty() || target_ < 0) throw Error("ordinal map needs a nonempty source and target");
  std::vector<bool> hit(target_ + 1, false);
  injective_ = true;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    int v = values_[i];
    if (v < 0 || v > target_) throw Error("ordinal map value out of range");
    if (i > 0) {
      if (v < values_[i - 1]) throw Error("ordinal map is not monotone");
      if (v == values_[i - 1]) injective_ = false;
    }
    hit[v] = true;
  }
  surjective_ = true;
  for (bool h : hit) surjective_ = surjective_ && h;
}

OrdinalMap OrdinalMap::identity(int p) {
  std::vector<int> v(p + 1);
  for (int i = 0; i <= p; ++i) v[i] = i;
  return OrdinalMap(p, std::move(v));
}

OrdinalMap OrdinalMap::coface(int q, int i) {
  std::vector<int> v;
  v.reserve(q);
  for (int a = 0; a <= q; ++a)
    if (a != i) v.push_back(a);
  return OrdinalMap(q, std::move(v));
}

OrdinalMap OrdinalMap::codegeneracy(int q, int i) {
  std::vector<int> v;
  v.reserve(q + 2);
  for (int a = 0; a <= q + 1; ++a) v.push_back(a <= i ? a : a - 1);
  return OrdinalMap(q, std::move(v));
}

OrdinalMap OrdinalMap::constant(int p, int q, int value) {
  return OrdinalMap(q, std::vector<int>(p + 1, value));
}

OrdinalMap OrdinalMap::after(const OrdinalMap& g) const {
  if (g.target_ != source()) throw Error("ordinal maps not composable");
  std::vector<int> v(g.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[g.values_[i]];
  return OrdinalMap(target_, std::move(v));
}

std::pair<OrdinalMap, OrdinalMap> OrdinalMap::epi_mono() const {
  std::vector<int> image;
  std::vector<int> sigma(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (image.empty() || image.back() != values_[i]) image.push_back(values_[i]);
    sigma[i] = static_cast<int>(image.size()) - 1;
  }
  int s = static_cast<int>(image.size()) - 1;
  return {OrdinalMap(s, std::move(sigma)), OrdinalMap(target_, std::move(image))};
}

std::string OrdinalMap::str() const {
  std::ostringstream os;
  os << "[" << source() << "->" << target_ << ":";
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << "]";
  return os.str();
}

namespace {
void monotone_rec(int p, int q, int lo, std::vector<int>& cur, std::vector<OrdinalMap>& out) {
  if (static_cast<int>(cur.size()) == p + 1) {
    out.emplace_back(q, cur);
    return;
  }
  for (int v = lo; v <= q; ++v) {
    cur.push_back(v);
    monotone_rec(p, q, v, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<OrdinalMap> monotone_maps(int p, int q) {
  std::vector<OrdinalMap> out;
  std::vector<int> cur;
  monotone_rec(p, q, 0, cur, out);
  return out;
}

std::vector<OrdinalMap> surjections(int p, int q) {
  std::vector<OrdinalMap> out;
  if (q > p) return out;
  // choose which q of the p steps increase
  std::vector<int> steps;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      std::vector<int> v(p + 1, 0);
      std::size_t s = 0;
      for (int i = 1; i <= p; ++i) {
        v[i] = v[i - 1];
        if (s < steps.size() && steps[s] == i) {
          ++v[i];
          ++s;
        }
      }
      out.emplace_back(q, std::move(v));
      return;
    }
    for (int i = start; i <= p - left + 1; ++i) {
      steps.push_back(i);
      rec(i + 1, left - 1);
      steps.pop_back();
    }
  };
  rec(1, q);
  return out;
}

std::vector<OrdinalMap> injections(int p, int q) {
  std::vector<OrdinalMap> out;
  for (auto& f : monotone_maps(p, q))
    if (f.injective()) out.push_back(f);
  return out;
}

std::vector<std::vector<OrdinalMap>> jointly_injective_surjections(int p, const std::vector<int>& q) {
  const int n = static_cast<int>(q.size());
  std::vector<std::vector<OrdinalMap>> out;
  std::vector<std::vector<int>> vals(n, std::vector<int>(p + 1, 0));
  std::vector<int> remaining(q);
  int total = 0;
  for (int x : q) total += x;
  if (total < p) return out;
  for (int x : q)
    if (x > p) return out;
  // step s chooses a nonempty subset of axes that increase
  std::function<void(int)> rec = [&](int step) {
    if (step > p) {
      for (int i = 0; i < n; ++i)
        if (remaining[i] != 0) return;
      std::vector<OrdinalMap> tuple;
      tuple.reserve(n);
      for (int i = 0; i < n; ++i) tuple.emplace_back(q[i], vals[i]);
      out.push_back(std::move(tuple));
      return;
    }
    int steps_left = p - step + 1;
    for (int i = 0; i < n; ++i)
      if (remaining[i] > steps_left) return;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        if ((mask >> i & 1u) && remaining[i] == 0) ok = false;
      if (!ok) continue;
      for (int i = 0; i < n; ++i) {
        int inc = (mask >> i) & 1u;
        vals[i][step] = vals[i][step - 1] + inc;
        remaining[i] -= inc;
      }
      rec(step + 1);
      for (int i = 0; i < n; ++i) remaining[i] += (mask >> i) & 1u;
    }
  };
  if (p == 0) {
    for (int x : q)
      if (x != 0) return out;
    std::vector<OrdinalMap> tuple;
    for (int i = 0; i < n; ++i) tuple.push_back(OrdinalMap::identity(0));
    out.push_back(std::move(tuple));
    return out;
  }
  rec(1);
  return out;
}

MultiOrdinalMap MultiOrdinalMap::identity(const MultiIndex& p) {
  MultiOrdinalMap f;
  for (int x : p) f.parts.push_back(OrdinalMap::identity(x));
  return f;
}

MultiOrdinalMap MultiOrdinalMap::diagonal(const OrdinalMap& f, int n) {
  MultiOrdinalMap g;
  g.parts.assign(n, f);
  return g;
}

MultiIndex MultiOrdinalMap::source() const {
  MultiIndex p;
  for (auto& f : parts) p.push_back(f.source());
  return p;
}

MultiIndex MultiOrdinalMap::target() const {
  MultiIndex p;
  for (auto& f : parts) p.push_back(f.target());
  return p;
}

bool MultiOrdinalMap::is_identity() const {
  for (auto& f : parts)
    if (!f.is_identity()) return false;
  return true;
}

MultiOrdinalMap MultiOrdinalMap::after(const MultiOrdinalMap& g) const {
  if (g.parts.size() != parts.size()) throw Error("multi ordinal maps of different arity");
  MultiOrdinalMap h;
  for (std::size_t i = 0; i < parts.size(); ++i) h.parts.push_back(parts[i].after(g.parts[i]));
  return h;
}

std::string MultiOrdinalMap::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i].str();
  return s + ")";
}

MultiOrdinalMap on_axis(const MultiIndex& p, int axis, const OrdinalMap& f) {
  MultiOrdinalMap g = MultiOrdinalMap::identity(p);
  g.parts[axis] = f;
  return g;
}

}  // namespace nfold
