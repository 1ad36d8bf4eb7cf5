#pragma once

#include <string>
#include <vector>

#include "nfold/catcore.hpp"
#include "nfold/multisimplicial.hpp"
#include "nfold/nfoldcat.hpp"

namespace nfold {

// An n-fold natural transformation: an n-fold functor D × [1]^{⊠n} -> E.
struct NFoldTransf {
  NCat dom, cod;
  NCat cube;      // unit_cube(n)
  NCat cylinder;  // cartesian_product(dom, cube)
  NFoldFunctor alpha;
  // Restriction to D × {0...0} and D × {1...1}.
  NFoldFunctor end(int e) const;
  bool check(std::string* why = nullptr) const;
};

// The cylinder D × [1]^{⊠n} with its corner functors attached.
NFoldTransf make_transf(NCat dom, NCat cod, std::vector<std::vector<int>> alpha_map);

// α_1 ⊠ ... ⊠ α_n between external products (filtered or not) of the ends.
NFoldTransf external_transf(const std::vector<NatTransf>& alphas, NCat dom, NCat cod);

// Simplicial homotopy δ*N^n D × Δ[1] -> δ*N^n E from δ*N^n F to δ*N^n G,
// obtained as δ*N^n α after the diagonal Δ[1] -> Δ[1]^{×n}.
struct NFoldHomotopy {
  SMSet dom_nerve, cod_nerve;
  SSet dom_diag, cod_diag;
  SSet cylinder;  // δ*N^n D × Δ[1]
  SimplicialMap h, end0, end1;
  bool ok = false;
  std::string detail;
};
NFoldHomotopy transf_to_homotopy(const NFoldTransf& a);

// p-array of N^n(C_1 ⊠ ... ⊠ C_n) built from one p-simplex of each N C_a.
Key external_array(const NFoldCategory& ext, const std::vector<Key>& chains, int p);

// N C_1 × ... × N C_n -> δ*N^n(C_1 ⊠ ... ⊠ C_n), with prod = product(nerves).
SimplicialMap product_to_diagonal(const NFoldCategory& ext, const std::vector<SSet>& nerves, SSet prod, SMSet ext_nerve,
                                  SSet diag);

}  // namespace nfold
