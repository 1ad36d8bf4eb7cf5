#pragma once

#include "nfold/nfoldcat.hpp"

namespace nfold {

// U_k: the k-fold category of cubes D_eps with eps <= k componentwise,
// directions of k renumbered in increasing order.
NCat forgetful_U(const NFoldCategory& d, unsigned k);
NFoldFunctor forgetful_U(const NFoldFunctor& f, unsigned k, NCat u_dom, NCat u_cod);

// R_k: right adjoint of U_k. Directions outside k are codiscrete: a cube of
// shape eps is a family, indexed by the corners {0,1}^(eps \ k), of cubes of E
// of shape eps ∩ k.
NCat right_adjoint_R(const NFoldCategory& e, unsigned k, int n);

// The adjunct D -> R_k E of G : U_k D -> E.
NFoldFunctor adjunct_R(const NFoldFunctor& g, unsigned k, NCat d, NCat re);

}  // namespace nfold
