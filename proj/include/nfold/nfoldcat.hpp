#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nfold/catcore.hpp"
#include "nfold/common.hpp"

namespace nfold {

// n-fold category in cube form: a set D_eps for every eps in {0,1}^n (eps is a
// bitmask, bit i = direction i), with sources, targets and compositions in
// the directions set in eps and units in the directions not set.
class NFoldCategory {
 public:
  explicit NFoldCategory(int n = 1);

  int n() const { return n_; }
  unsigned full() const { return (1u << n_) - 1; }
  int count(unsigned eps) const { return static_cast<int>(cells_[eps].label.size()); }
  long long total_cells() const;
  const std::string& label(unsigned eps, int x) const { return cells_[eps].label[x]; }

  int add(unsigned eps, std::string label, Key key = {});
  // Optional structural key of a cell (the component tuple for external
  // products); lookup is valid after finalize().
  const Key& key(unsigned eps, int x) const { return cells_[eps].key[x]; }
  std::optional<int> find_key(unsigned eps, const Key& k) const;
  void set_src(unsigned eps, int i, int x, int s) { cells_[eps].src[i][x] = s; }
  void set_tgt(unsigned eps, int i, int x, int t) { cells_[eps].tgt[i][x] = t; }
  void set_unit(unsigned eps, int i, int x, int u) { cells_[eps].unit[i][x] = u; }
  // second ∘^i first
  void set_compose(unsigned eps, int i, int first, int second, int result);

  int src(unsigned eps, int i, int x) const { return cells_[eps].src[i][x]; }
  int tgt(unsigned eps, int i, int x) const { return cells_[eps].tgt[i][x]; }
  int unit(unsigned eps, int i, int x) const { return cells_[eps].unit[i][x]; }
  std::optional<int> compose(unsigned eps, int i, int first, int second) const;
  int comp(unsigned eps, int i, int first, int second) const;
  bool is_unit(unsigned eps, int i, int x) const;

  // Cubes of D_eps whose i-source is s. Valid after finalize().
  const std::vector<int>& starting_at(unsigned eps, int i, int s) const;
  void finalize();

  // Object at a corner of a cube: direction i contributes its target when
  // bit i of `which` is set, its source otherwise.
  int corner(unsigned eps, int x, unsigned which) const;
  // Face of a cube obtained by taking s or t in every direction of `dirs`.
  int face(unsigned eps, int x, unsigned dirs, unsigned which) const;
  // Iterated unit of a cube into the directions of `dirs` (disjoint from eps).
  int units(unsigned eps, int x, unsigned dirs) const;

  bool check(std::string* why = nullptr) const;

 private:
  struct Level {
    std::vector<std::string> label;
    std::vector<Key> key;
    std::unordered_map<Key, int, KeyHash> by_key;
    std::vector<std::vector<int>> src, tgt, unit;  // per direction
    std::vector<std::unordered_map<std::uint64_t, int>> comp;
    std::vector<std::vector<std::vector<int>>> by_src;
  };
  int n_;
  std::vector<Level> cells_;
};

using NCat = std::shared_ptr<const NFoldCategory>;

struct NFoldFunctor {
  NCat dom, cod;
  std::vector<std::vector<int>> map;  // per eps
  bool check(std::string* why = nullptr) const;
  NFoldFunctor then(const NFoldFunctor& g) const;
};

NFoldFunctor identity_nfunctor(NCat d);

NCat from_category(const FinCat& c);
// Object labels are made unique by priming repeats. mor_map receives the
// morphism id of each 1-cube.
Cat to_category(const NFoldCategory& d, std::vector<int>* mor_map = nullptr);
// A 1-fold functor between categories obtained from to_category of its ends.
Functor to_functor(const NFoldFunctor& f, Cat dom, Cat cod);

// External product C_1 ⊠ ... ⊠ C_n. A cube in direction set eps is a tuple
// with a morphism of C_i for i in eps and an object of C_i otherwise. The
// optional filter sees the endpoint objects (src_1, tgt_1, ..., src_n, tgt_n)
// and must describe a sub-n-fold category.
NCat external_product(const std::vector<Cat>& cats,
                      const std::function<bool(const std::vector<int>&)>& filter = nullptr);

// Componentwise functor between external products (filtered or not) whose
// factors are the domains and codomains of fs.
NFoldFunctor external_functor(const std::vector<Functor>& fs, NCat dom, NCat cod);

// Cartesian product of two n-fold categories.
NCat cartesian_product(const NFoldCategory& a, const NFoldCategory& b);

// [1] ⊠ ... ⊠ [1]
NCat unit_cube(int n);

std::string eps_str(unsigned eps, int n);

}  // namespace nfold
