#pragma once

#include <optional>
#include <vector>

#include "nfold/multisimplicial.hpp"
#include "nfold/nfoldcat.hpp"

namespace nfold {

// Multisimplices of N^n D as composable arrays of cubes. A p-array has one
// cube of shape eps(p) = {a : p_a > 0} per grid cell c (0 <= c_a < p_a, or
// c_a = 0 when p_a = 0); keys list the cube ids in lexicographic grid order.
class NFoldNerveModel : public MultiModel {
 public:
  NFoldNerveModel(NCat d, MultiIndex extent, bool nondegenerate_only = true);

  int n() const override { return d_->n(); }
  MultiIndex extent() const override { return extent_; }
  std::vector<Key> candidates(const MultiIndex& p) const override;
  bool candidates_nondegenerate() const override { return nd_only_; }
  Key act(const MultiOrdinalMap& theta, const Key& x) const override;
  std::string label(const MultiIndex& p, const Key& x) const override;
  // Drops slabs of unit cubes directly.
  std::pair<MultiOrdinalMap, Key> normalize(const MultiIndex& p, const Key& x) const override;

  // Image of the box lo <= c <= hi of a p-array: the composite cube of shape
  // {a : lo_a < hi_a}.
  int box(const MultiIndex& p, const Key& x, const MultiIndex& lo, const MultiIndex& hi) const;
  const NCat& category() const { return d_; }

 private:
  NCat d_;
  MultiIndex extent_;
  bool nd_only_;
};

unsigned shape_of(const MultiIndex& p);
MultiIndex grid_dims(const MultiIndex& p);

// All p-arrays, degenerate ones included.
std::vector<Key> composable_arrays(NCat d, const MultiIndex& p);

// Longest chain of non-unit 1-cubes in each direction. Throws UnsupportedInput
// when some direction has a cycle.
MultiIndex longest_chains(const NFoldCategory& d);

// N^n D. Without caps they start at longest_chains and grow while totally
// non-degenerate cells show up one step beyond; explicit caps that are
// exceeded raise DimensionOverflow.
SMSet nfold_nerve(NCat d, std::optional<MultiIndex> caps = std::nullopt);

MultiSimplicialMap nfold_nerve_map(const NFoldFunctor& f, SMSet dom_nerve, SMSet cod_nerve);

}  // namespace nfold
