#pragma once

#include <string>
#include <vector>

#include "nfold/catcore.hpp"

namespace nfold {

using Chain = std::vector<int>;  // ascending in the order

std::vector<Chain> maximal_chains(const FinPoset& t);
std::vector<Chain> chains_of_size(const FinPoset& t, int size);
bool is_chain(const FinPoset& t, const std::vector<int>& elems);

// Hypotheses of the chain colimit decomposition at a level m:
//  (i)  every chain extends to an (m+1)-chain, i.e. all maximal chains have m+1 elements;
//  (ii) for every chain x_0 < ... < x_l, the (m+1)-chains through it are
//       connected by steps that change one element, decided by BFS.
// With walk_check, a greedy walk that swaps one element at a time towards the
// goal is run between chains of every group as an independent witness.
struct ChainCondition {
  bool extends = false;
  bool connected = false;
  long long chains = 0;   // (m+1)-chains
  long long groups = 0;   // chains x_0 < ... < x_l that lie in some (m+1)-chain
  long long walks = 0, walks_found = 0;
  std::string detail;
  bool ok() const { return extends && connected; }
};
ChainCondition chain_condition(const FinPoset& t, int level, bool walk_check = false);

}  // namespace nfold
