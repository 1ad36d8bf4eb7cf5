#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nfold/simplicial_set.hpp"

namespace nfold {

// Sparse integer column: (row, coefficient) pairs sorted by row.
using SparseColumn = std::vector<std::pair<int, long long>>;

struct ChainComplex {
  std::vector<int> dims;
  // boundary[p] : C_p -> C_{p-1}, one column per generator of C_p.
  std::vector<std::vector<SparseColumn>> boundary;
  // Homology is trustworthy in degrees < valid_below (-1: every degree).
  int valid_below = -1;
};

// Rank and torsion coefficients (> 1) of the Smith normal form.
struct SmithInvariants {
  int rank = 0;
  std::vector<std::string> torsion;
};

SmithInvariants smith_invariants(int rows, const std::vector<SparseColumn>& cols);

struct HomologyResult {
  std::vector<int> betti;
  std::vector<std::vector<std::string>> torsion;
  int valid_below = -1;
  std::vector<int> cells;

  long long euler_from_cells() const;
  long long euler_from_betti() const;
  bool euler_consistent() const;
  bool trivial() const;  // homology of a point
  std::string str() const;
  // Compares degrees valid in both results.
  bool same_groups(const HomologyResult& o) const;
};

HomologyResult homology(const ChainComplex& c);
ChainComplex normalized_chains(const SimplicialSet& x);
HomologyResult homology(const SimplicialSet& x);

// Connected components via vertices and edges; returns the component of each vertex.
std::vector<int> components(const SimplicialSet& x, int* count = nullptr);

}  // namespace nfold
