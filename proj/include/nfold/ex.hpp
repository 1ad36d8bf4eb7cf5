#pragma once

#include "nfold/simplicial_map.hpp"
#include "nfold/simplicial_set.hpp"

namespace nfold {

// Kan's Ex up to degree cap: level m is the set of maps Sd Delta[m] -> X,
// enumerated by backtracking over the non-degenerate chains of P Delta[m].
// `limit` bounds the number of maps enumerated per level.
SSet ex(SSet X, int cap, long long limit = 2'000'000);

// Adjoint of the last-vertex map Sd Delta[m] -> Delta[m].
SimplicialMap unit_to_ex(SSet X, SSet exX);

// Number of all p-simplices (degenerate included) of X.
long long simplices_in_degree(const SimplicialSet& X, int p);

// |Hom(Sd Delta[p], N P)| counted as monotone maps P Delta[p] -> P.
long long monotone_maps_from_subsets(int p, const std::vector<std::vector<char>>& le);

}  // namespace nfold
