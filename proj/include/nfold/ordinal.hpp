#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nfold/common.hpp"

namespace nfold {

// Monotone map [p] -> [q] between finite ordinals, stored by its values.
class OrdinalMap {
 public:
  OrdinalMap() = default;
  OrdinalMap(int target, std::vector<int> values);

  static OrdinalMap identity(int p);
  // d^i : [q-1] -> [q], the injection skipping i.
  static OrdinalMap coface(int q, int i);
  // s^i : [q+1] -> [q], the surjection hitting i twice.
  static OrdinalMap codegeneracy(int q, int i);
  static OrdinalMap constant(int p, int q, int value);

  int source() const { return static_cast<int>(values_.size()) - 1; }
  int target() const { return target_; }
  int operator()(int i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }
  bool injective() const { return injective_; }
  bool surjective() const { return surjective_; }
  bool is_identity() const { return injective_ && surjective_; }

  // this ∘ g
  OrdinalMap after(const OrdinalMap& g) const;
  // Returns (sigma, mu) with sigma surjective, mu injective, *this = mu ∘ sigma.
  std::pair<OrdinalMap, OrdinalMap> epi_mono() const;

  std::string str() const;

  friend bool operator==(const OrdinalMap& a, const OrdinalMap& b) {
    return a.target_ == b.target_ && a.values_ == b.values_;
  }
  friend bool operator!=(const OrdinalMap& a, const OrdinalMap& b) { return !(a == b); }
  friend bool operator<(const OrdinalMap& a, const OrdinalMap& b) {
    if (a.target_ != b.target_) return a.target_ < b.target_;
    return a.values_ < b.values_;
  }

 private:
  int target_ = 0;
  std::vector<int> values_{0};
  bool injective_ = true;
  bool surjective_ = true;
};

// All monotone maps [p] -> [q], in lexicographic order of values.
std::vector<OrdinalMap> monotone_maps(int p, int q);
std::vector<OrdinalMap> surjections(int p, int q);
std::vector<OrdinalMap> injections(int p, int q);

// Tuples of surjections [p] ->> [q_i] that are jointly injective, i.e. every
// step i -> i+1 moves in at least one component. These index the
// non-degenerate p-simplices of a diagonal built on cells of degrees q.
std::vector<std::vector<OrdinalMap>> jointly_injective_surjections(int p, const std::vector<int>& q);

using MultiIndex = std::vector<int>;

// Componentwise ordinal maps f = (f_1, ..., f_n).
struct MultiOrdinalMap {
  std::vector<OrdinalMap> parts;

  static MultiOrdinalMap identity(const MultiIndex& p);
  static MultiOrdinalMap diagonal(const OrdinalMap& f, int n);
  MultiIndex source() const;
  MultiIndex target() const;
  bool is_identity() const;
  MultiOrdinalMap after(const MultiOrdinalMap& g) const;
  std::string str() const;

  friend bool operator==(const MultiOrdinalMap& a, const MultiOrdinalMap& b) { return a.parts == b.parts; }
  friend bool operator<(const MultiOrdinalMap& a, const MultiOrdinalMap& b) { return a.parts < b.parts; }
};

// Replaces axis `axis` of the identity on p by f.
MultiOrdinalMap on_axis(const MultiIndex& p, int axis, const OrdinalMap& f);

}  // namespace nfold
