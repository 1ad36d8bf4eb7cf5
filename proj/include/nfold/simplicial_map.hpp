#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nfold/homology.hpp"
#include "nfold/simplicial_set.hpp"

namespace nfold {

// Map of simplicial sets, stored by the EZ image of each non-degenerate simplex.
struct SimplicialMap {
  SSet dom, cod;
  std::vector<std::vector<Simplex>> image;

  Simplex apply(const Simplex& s) const;
  // Faces commute with the map on every stored simplex.
  bool check(std::string* why = nullptr) const;
  // g ∘ this
  SimplicialMap then(const SimplicialMap& g) const;
  bool operator==(const SimplicialMap& o) const { return image == o.image; }
};

SimplicialMap identity_map(SSet x);
// Image of each non-degenerate simplex given as a key in cod's model.
SimplicialMap map_from_keys(SSet dom, SSet cod, const std::function<Key(int, const Key&)>& fn);
// For codomains whose simplices are determined by their vertex tuples.
SimplicialMap map_by_vertices(SSet dom, SSet cod, const std::vector<int>& vmap);
bool is_isomorphism(const SimplicialMap& f, std::string* why = nullptr);

struct ColimitArrow {
  int from, to;
  SimplicialMap map;
};

struct Colimit {
  SSet object;
  std::vector<SimplicialMap> legs;
};

// Colimit of a diagram whose arrows are injective and preserve
// non-degeneracy; simplices are glued by the equivalence the arrows generate.
Colimit colimit_of_monos(const std::vector<SSet>& objects, const std::vector<ColimitArrow>& arrows);

// The map out of a colimit induced by a cocone, one map per diagram object.
// Empty when the cocone does not agree with the legs' identifications.
std::optional<SimplicialMap> colimit_map(const Colimit& c, const std::vector<SimplicialMap>& cocone);

struct EquivalenceReport {
  bool ok = false;
  bool pi0 = false;
  // Isomorphism on homology established in degrees < iso_below (-1: all).
  int iso_below = -1;
  HomologyResult dom, cod, cone;
  std::string detail;
};

// pi_0 bijection and acyclic mapping cone.
EquivalenceReport homology_equivalence(const SimplicialMap& f);

}  // namespace nfold
