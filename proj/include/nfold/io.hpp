#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nfold/catcore.hpp"
#include "nfold/homology.hpp"
#include "nfold/multisimplicial.hpp"
#include "nfold/nfoldcat.hpp"
#include "nfold/simplicial_set.hpp"
#include "nfold/subdivision.hpp"
#include "nfold/verification.hpp"

namespace nfold {

using Json = nlohmann::json;  // std::map objects, so keys come out sorted

// {"kind": "category", "objects": [labels], "morphisms": [{label, src, tgt}],
//  "compose": [[g, f, g∘f]]}. Morphisms and composites list non-identities
// only; a composite that is an identity is written as -1 - object.
Json to_json(const FinCat& c);
Cat category_from_json(const Json& j);

// {"kind": "poset", "elements": [labels], "covers": [[a, b]]}. Reading also
// accepts "leq" pairs; the order is their reflexive transitive closure.
Json to_json(const FinPoset& p);
FinPoset poset_from_json(const Json& j);

// {"kind": "simplicial_set", "nondeg": [[labels] per degree],
//  "faces": [[[d_0, ..., d_q] per simplex] per degree]}, each face an EZ pair
// [degree, index, eta values].
Json to_json(const SimplicialSet& x);
SSet simplicial_set_from_json(const Json& j);

// {"kind": "multisimplicial_set", "n", "extent", "cells": {"p_1,...,p_n":
//  {"labels": [...], "faces": [cell][axis][j]}}}, each face [degree, index,
// eta values per axis].
Json to_json(const MultiSimplicialSet& y);
SMSet multisimplicial_set_from_json(const Json& j);

// {"kind": "nfold_category", "n", "cubes": {eps bitstring: {"labels", "src",
//  "tgt", "unit" (per direction, -1 where undefined), "compose": per direction
//  [[first, second, result]]}}}.
Json to_json(const NFoldCategory& d);
NCat nfold_from_json(const Json& j);

Json to_json(const HomologyResult& h);
// Runtimes are left out unless asked for, so that reruns give identical bytes.
Json to_json(const CheckReport& r, bool timings = false);
// {"checks": [...], "failed": count, "passed": count, "skipped": count}
Json to_json(const std::vector<CheckReport>& rs, bool timings = false);

// Reads any of the kinds above from a file.
Json read_json_file(const std::string& path);
// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

// Hasse diagram: one edge per covering relation.
std::string poset_dot(const FinPoset& p, const std::string& name = "poset");
// P Sd Δ[m] with nodes and edges classed by the piece they lie in for the
// horn Λ^k[m]: Out edges solid, edges inside Cen or Comp dotted with a class
// attribute, horn nodes boxed.
std::string sd_dot(const SdPoset& sd, int k);

}  // namespace nfold
