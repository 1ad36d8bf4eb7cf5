#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nfold/catcore.hpp"
#include "nfold/chains.hpp"
#include "nfold/simplicial_map.hpp"

namespace nfold {

// A non-degenerate simplex (v_0, ..., v_q) of Sd Δ[m]: strictly increasing
// nonempty subsets of [m] as bitmasks.
using SdSimplex = std::vector<unsigned>;

enum class Member { Full, Boundary, Horn };

// Sd Λ^k[m], Sd ∂Δ[m] or Sd Δ[m] membership of a simplex of Sd Δ[m].
bool membership(Member kind, const SdSimplex& s, int m, int k = 0);
std::string sd_label(const SdSimplex& s);

// P Sd Δ[m], ordered by inclusion of vertex sets. Elements are listed by
// length, then lexicographically by masks.
struct SdPoset {
  int m = 0;
  std::vector<SdSimplex> elems;
  FinPoset poset;
  std::optional<int> find(const SdSimplex& s) const;
  unsigned full_set() const { return (1u << (m + 1)) - 1; }
};
SdPoset sd_delta_poset(int m);

std::vector<int> members(const std::vector<char>& mask);
std::vector<char> up_closure(const FinPoset& t, const std::vector<int>& seeds);

// Horn part and the three up-closed pieces, each as a membership mask.
struct Pieces {
  int k = 0;
  std::vector<char> horn, out, cen, comp;
};
// By the membership formulas.
Pieces pieces(const SdPoset& sd, int k);

struct DecompositionReport {
  bool covers = false;             // Comp ∪ Cen ∪ Out is everything
  bool up_closed = false;          // each of the three
  bool horn_down_closed = false;
  bool formulas_match = false;     // formulas agree with the up-closures
  std::string detail;
  bool ok() const { return covers && up_closed && horn_down_closed && formulas_match; }
};
DecompositionReport check_decomposition(const SdPoset& sd, int k);

// r : Out -> P Sd Λ^k[m] keeping the largest sub-tuple in the horn, and
// α : inc ∘ r => 1_Out.
struct Retraction {
  std::vector<int> horn_elems, out_elems;  // ids in sd
  std::vector<SdSimplex> horn_cells, out_cells;
  Cat horn, out;
  Functor r, inc;
  NatTransf alpha;
  SdSimplex apply(const SdSimplex& s) const;
  int k = 0, m = 0;
  // Functors, r ∘ inc = 1, α natural and the identity on the horn, and r
  // against a search over all sub-tuples.
  bool check(std::string* why = nullptr) const;
};
Retraction retraction(const SdPoset& sd, int k);

// Non-degenerate m-simplices of Sd²Δ[m] as ascending chains of element ids.
using Sd2Simplex = std::vector<int>;
std::vector<Sd2Simplex> top_simplices(const SdPoset& sd);

// The other top simplex sharing face j of V, built by the two-element swap
// rule; empty when the face lies on Sd² ∂Δ[m].
std::optional<Sd2Simplex> glue_neighbor(const SdPoset& sd, const Sd2Simplex& V, int j);

struct GluingReport {
  long long simplices = 0, interior_faces = 0, boundary_faces = 0;
  bool shapes = false;     // |V_i| = i+1 and v^m_m = [m]
  bool rule = false;       // the swap rule names exactly the brute-force neighbour
  bool two_sided = false;  // interior faces lie in exactly two top simplices
  std::string detail;
  bool ok() const { return shapes && rule && two_sided; }
};
GluingReport check_gluing(const SdPoset& sd);

// ℓ with V in C^ℓ, or 0 when V is not in N Comp.
int comp_class(const SdPoset& sd, const Sd2Simplex& V, int k);

struct CompGluingReport {
  long long comp_simplices = 0;
  std::vector<long long> class_sizes;  // index ℓ
  bool partition = false;              // every simplex of N Comp has 1 <= ℓ <= m and fits the description
  bool criterion = false;              // face j shared inside C^ℓ iff j ∉ {0, ℓ-1, ℓ}
  std::string detail;
  bool ok() const { return partition && criterion; }
};
CompGluingReport check_compgluing(const SdPoset& sd, int k);

struct CentralReport {
  long long central = 0;
  bool shares_m = false;  // exactly the faces 1..m are shared with other central simplices
  bool contractible = false;
  std::string detail;
  bool ok() const { return shares_m && contractible; }
};
CentralReport check_central(const SdPoset& sd);

// Reconstruction of T from its chains of size level and level+1.
struct ColimitReport {
  long long objects = 0, arrows = 0;  // of the diagram
  bool ok = false;
  std::string detail;
};
// In Cat: the presented category is isomorphic to T with no free composites.
ColimitReport chain_colimit_cat(const FinPoset& t, int level);
// N T = colim N U.
ColimitReport chain_colimit_nerve(const FinPoset& t, int level);
// δ*N^n c^n δ_! N T = colim (N U)^{×n}.
ColimitReport chain_colimit_diagonal(const FinPoset& t, int level, int n);

// Homology equivalences of N S -> N(Comp ∪ Cen) for S = Out ∩ (Comp ∪ Cen),
// at the nerve level and for δ*N^n c^n δ_! N when n > 1.
struct RetractReport {
  EquivalenceReport nerve;
  std::optional<EquivalenceReport> diagonal;
  bool both_trivial = false;
  bool ok() const { return nerve.ok && both_trivial && (!diagonal || diagonal->ok); }
};
RetractReport retract_homology_suite(int m, int k, int n);

}  // namespace nfold
