#pragma once

#include <string>

#include "nfold/catcore.hpp"
#include "nfold/simplicial_map.hpp"
#include "nfold/simplicial_set.hpp"

namespace nfold {

// Every non-degenerate simplex has distinct vertices and is determined by its vertex set.
bool is_classical_complex(const SimplicialSet& X);

// Non-degenerate simplices of a classical complex ordered by the face relation.
// Elements are listed by degree, then by index; labels come from X.
FinPoset poset_of_nondegenerate(const SimplicialSet& X);

enum class SdPath { Auto, Poset, Colimit };

struct Subdivision {
  SSet sd;
  bool via_poset = false;
};

// Barycentric subdivision. The poset path takes the nerve of
// poset_of_nondegenerate; the colimit path glues copies of Sd Delta[t], one
// per non-degenerate t-simplex.
Subdivision subdivide(SSet X, SdPath path = SdPath::Auto);

// Both paths agree up to an isomorphism matching vertex to vertex.
bool subdivision_paths_agree(SSet X, std::string* why = nullptr);

// P Delta[m] with subsets labelled by their digits, e.g. "012".
FinPoset subsets_poset(int m);

}  // namespace nfold
