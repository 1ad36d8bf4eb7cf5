#pragma once

#include <vector>

#include "nfold/simplicial_set.hpp"

namespace nfold {

// Cartesian product of finite simplicial sets. Non-degenerate p-simplices are
// tuples (eta_i^* y_i) with y_i non-degenerate and the surjections eta_i
// jointly injective. Truncated at the smallest truncation of the factors.
SSet product(const std::vector<SSet>& factors);

// Key of the product simplex with the given EZ components, and back.
Key product_key(const std::vector<Simplex>& parts);
std::vector<Simplex> product_parts(const Key& key);

// Projection to factor i as a map of simplicial sets, and the diagonal X -> X^n.
struct SimplicialMap;
SimplicialMap projection(SSet prod, const std::vector<SSet>& factors, int i);
SimplicialMap diagonal_map(SSet x, SSet prod, int n);

}  // namespace nfold
