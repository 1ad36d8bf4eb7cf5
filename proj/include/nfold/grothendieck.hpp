#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nfold/multisimplicial.hpp"
#include "nfold/nfoldcat.hpp"
#include "nfold/simplicial_map.hpp"

namespace nfold {

// A cube of Δ^{⊠n}/Y: f̄ : k̄ -> ℓ̄ and z ∈ Y_ℓ̄. The cube's directions are
// the axes where f̄ is allowed to differ from the identity; objects have f̄ = 1.
struct GrothCell {
  MultiOrdinalMap f;
  MultiSimplex z;  // EZ form, z.degree() == f.target()
};

// Δ^{⊠n}/Y restricted to multi-degrees k̄ <= caps (the full construction is
// infinite). The restriction is a full sub-n-fold category.
struct Grothendieck {
  SMSet Y;
  MultiIndex caps;
  NCat cat;

  GrothCell cell(unsigned eps, int x) const;
  std::optional<int> find(unsigned eps, const GrothCell& c) const;
  // Cell id of the object (y, k̄).
  std::optional<int> object(const MultiSimplex& y) const;
};

// Extent of Y plus one on every axis.
MultiIndex default_caps(const MultiSimplicialSet& Y);
Grothendieck grothendieck(SMSet Y, std::optional<MultiIndex> caps = std::nullopt);

// Every multisimplex of Y of degree p, degenerate ones included, in EZ form.
std::vector<MultiSimplex> multisimplices(const MultiSimplicialSet& Y, const MultiIndex& p);
Key multisimplex_key(const MultiSimplex& s);

// f̄*(z) = y on every cube, corners given by (f_1^{1-e_1}, ...)^*(z), and the
// n-fold category axioms.
bool check_grothendieck(const Grothendieck& g, std::string* why = nullptr);

// N^n(Δ^{⊠n}/Y) complete up to `extent`, with its diagonal truncated at the
// smallest entry of `extent`.
struct GrothNerve {
  SMSet nerve;
  SSet diag;
  int truncation = 0;
};
GrothNerve groth_nerve(const Grothendieck& g, const MultiIndex& extent);

// Size of the coproduct over n paths in Δ_{<=caps} of lengths p̄ of Y at the
// last degrees.
long long multisimplex_formula(const MultiSimplicialSet& Y, const MultiIndex& caps, const MultiIndex& p);
// All p̄-multisimplices of a realized multisimplicial set, degenerate included.
long long multisimplex_count(const MultiSimplicialSet& X, const MultiIndex& p);
long long simplex_count(const SimplicialSet& X, int p);

// The n paths of a p̄-array of Δ^{⊠n}/Y together with the last multisimplex.
struct ArrayPaths {
  MultiIndex start;  // k̄ at the first vertex
  std::vector<std::vector<OrdinalMap>> paths;
  MultiSimplex z;
};
ArrayPaths array_paths(const Grothendieck& g, const MultiIndex& p, const Key& array);
// [p] -> [k_p], i ↦ image of the last element of [k_i].
OrdinalMap last_vertex_map(int k0, const std::vector<OrdinalMap>& path);

// ρ_Y : N^n(Δ^{⊠n}/Y) -> Y.
MultiSimplicialMap rho(const Grothendieck& g, SMSet nerve);

// Δ^{⊠n}/φ for φ : Y -> Y'.
NFoldFunctor groth_map(const MultiSimplicialMap& phi, const Grothendieck& dom, const Grothendieck& cod);

// λ_D : Δ^{⊠n}/N^n D -> D, (y, k̄) ↦ last corner of y. g.Y must be an n-fold
// nerve of D.
NFoldFunctor lambda(const Grothendieck& g, NCat d);

struct LambdaRhoReport {
  long long cells = 0;  // compared multisimplices
  long long mismatches = 0;
  bool functor_ok = false;
  std::string detail;
  bool ok() const { return functor_ok && cells > 0 && mismatches == 0; }
};
// N^n λ_D = ρ_{N^n D} cellwise on N^n(Δ^{⊠n}/N^n D) up to `extent`.
LambdaRhoReport lambda_rho_check(NCat d, const MultiIndex& extent, std::optional<MultiIndex> caps = std::nullopt);

struct RhoReport {
  MultiIndex caps;
  int truncation = 0;
  bool category_ok = false;
  bool counts_ok = false;  // p̄-multisimplices and diagonal p-simplices against the formula
  bool natural = false;    // ρ commutes with faces
  EquivalenceReport equivalence;
  std::string detail;
  bool ok() const { return category_ok && counts_ok && natural && equivalence.ok; }
};
RhoReport rho_check(SMSet Y, const MultiIndex& extent, std::optional<MultiIndex> caps = std::nullopt);

// Homology of δ*N^n(Δ^{⊠n}/Y) at caps and at caps + 1 agree below the truncation.
struct CapStability {
  HomologyResult at_caps, at_next;
  bool stable = false;
};
CapStability cap_stability(SMSet Y, const MultiIndex& caps, const MultiIndex& extent);

// N^n(Δ^{⊠n}/(Y_1 ⊔_{Y_0} Y_2)) against the pushout of the N^n(Δ^{⊠n}/Y_i),
// for monomorphisms Y_0 -> Y_1, Y_0 -> Y_2.
struct ColimitPreservation {
  bool iso = false;
  std::vector<long long> counts;  // cells of the two sides, per side
  std::string detail;
};
ColimitPreservation groth_preserves_colimits_check(const MultiSimplicialMap& to1, const MultiSimplicialMap& to2,
                                                   const MultiIndex& caps, const MultiIndex& extent);

// δ*N^n(Δ^{⊠n}/δ_!X) -> δ*δ_!X <- X.
struct ZigzagReport {
  EquivalenceReport rho, unit;
  bool ends_disjoint = false;  // images of the two vertices of Δ[1] under δ*δ_!
  std::string detail;
  bool ok() const { return rho.ok && unit.ok && ends_disjoint; }
};
ZigzagReport zigzag_suite(SSet X, int n, const MultiIndex& extent, std::optional<MultiIndex> caps = std::nullopt);

// 1-fold multisimplicial set of a simplicial set.
SMSet as_multi(SSet X);

}  // namespace nfold
