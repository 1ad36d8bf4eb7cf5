#pragma once

#include <functional>
#include <vector>

#include "nfold/nfoldcat.hpp"
#include "nfold/simplicial_map.hpp"

namespace nfold {

// Every n-fold functor A -> B, by backtracking over the non-unit cells of A
// with faces propagated and units filled in last. visit may stop the search
// by returning false. Returns the number of functors visited.
long long enumerate_nfunctors(NCat a, NCat b, const std::function<bool(const NFoldFunctor&)>& visit = nullptr,
                              long long limit = 10'000'000);

// Every simplicial map X -> Y, as the image of each non-degenerate simplex of X.
long long enumerate_simplicial_maps(SSet x, SSet y, const std::function<bool(const SimplicialMap&)>& visit = nullptr,
                                    long long limit = 10'000'000);

}  // namespace nfold
