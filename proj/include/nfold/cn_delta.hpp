#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "nfold/catcore.hpp"
#include "nfold/multisimplicial.hpp"
#include "nfold/nfoldcat.hpp"
#include "nfold/saturation.hpp"

namespace nfold {

// c^n δ_! X together with the image of the copy of [q]^{⊠n} belonging to
// each non-degenerate q-simplex of X.
struct CnDelta {
  NCat cat;
  SSet x;
  int n = 1;
  // Cell of shape eps in the copy of the non-degenerate simplex (q, idx),
  // given by endpoints lo_a <= hi_a in [q] (lo_a = hi_a outside eps).
  std::function<int(int q, int idx, unsigned eps, const std::vector<int>& lo, const std::vector<int>& hi)> cell;
};

// Union of U^{⊠n} inside T^{⊠n} over the (level+1)-chains U of T. Requires
// the chain condition at `level`; X is the nerve of T.
CnDelta cn_delta_union(const FinPoset& t, int level, int n);

// Inclusion c^n δ_! N S -> c^n δ_! N T of union formulas for a subposet S of
// T, with elem_map sending elements of S to elements of T.
NFoldFunctor union_inclusion(const CnDelta& small, const FinPoset& s, const CnDelta& big, const FinPoset& t,
                             const std::vector<int>& elem_map);

// Same cells, described by pairwise comparable endpoints.
bool union_is_comparability(const FinPoset& t, int level, int n, std::string* why = nullptr);

// c^n δ_! X presented by one copy of [q]^{⊠n} per non-degenerate q-simplex,
// glued along faces and completed by saturation. Cells of the copies are
// normalized first: a cell whose endpoints miss part of [q] lives in the face
// they span.
struct SaturatedCnDelta {
  CnDelta cn;
  Saturated sat;
  std::vector<std::vector<Key>> generator_key;  // per eps: (q, idx, lo..., hi...)
};
SaturatedCnDelta cn_delta_saturated(SSet x, int n, SaturationLimits lim = {});

// Key (q, idx, lo, hi) of the normalized form of a cell of the copy of (q, idx).
Key cn_normal_key(const SimplicialSet& x, int q, int idx, const std::vector<int>& lo, const std::vector<int>& hi);

// The diagonal p-array of a non-degenerate p-simplex of X inside N^n c^n δ_! X.
Key diagonal_array(const CnDelta& c, int p, int idx);

// Unit X -> δ*N^n c^n δ_! X.
SimplicialMap cn_unit(const CnDelta& c, SMSet nerve, SSet diag);

// δ*N^n of an n-fold functor between categories with realized nerves.
SimplicialMap diagonal_nerve_map(const NFoldFunctor& f, SMSet dom_nerve, SSet dom_diag, SMSet cod_nerve, SSet cod_diag);

// |Hom(c^n δ_! X, D)| against |Hom(X, δ*N^n D)|, with F |-> δ*N^n F ∘ unit as
// the comparison map.
struct AdjunctionOracle {
  long long functors = 0;
  long long simplicial_maps = 0;
  long long distinct_images = 0;
  bool images_are_maps = true;
  bool ok() const { return images_are_maps && functors == simplicial_maps && distinct_images == functors; }
};
AdjunctionOracle adjunction_oracle(const CnDelta& c, NCat d);

}  // namespace nfold
