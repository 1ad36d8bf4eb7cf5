#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nfold/common.hpp"
#include "nfold/ordinal.hpp"
#include "nfold/simplicial_map.hpp"
#include "nfold/simplicial_set.hpp"

namespace nfold {

// eta^* of the totally non-degenerate cell `index` of multi-degree eta.target().
struct MultiSimplex {
  MultiOrdinalMap eta;
  int index = 0;

  MultiIndex degree() const { return eta.source(); }
  MultiIndex nd_degree() const { return eta.target(); }
  bool nondegenerate() const { return eta.is_identity(); }

  friend bool operator==(const MultiSimplex& a, const MultiSimplex& b) { return a.index == b.index && a.eta == b.eta; }
  friend bool operator!=(const MultiSimplex& a, const MultiSimplex& b) { return !(a == b); }
};

class MultiModel;

// n-fold simplicial set stored by its totally non-degenerate cells, with the
// faces along every axis as EZ pairs.
class MultiSimplicialSet {
 public:
  class Builder;

  int n() const { return n_; }
  // Multi-degrees carrying at least one cell, ascending.
  std::vector<MultiIndex> degrees() const;
  int count(const MultiIndex& p) const;
  long long total() const;
  // Largest degree per axis.
  MultiIndex extent() const;

  const Key& key(const MultiIndex& p, int i) const { return levels_.at(p).keys[i]; }
  const std::string& label(const MultiIndex& p, int i) const { return levels_.at(p).labels[i]; }
  const MultiSimplex& face(const MultiIndex& p, int i, int axis, int j) const { return levels_.at(p).faces[i][axis][j]; }
  std::optional<int> find(const MultiIndex& p, const Key& k) const;

  MultiSimplex apply(const MultiOrdinalMap& theta, const MultiSimplex& s) const;
  static MultiSimplex nd(const MultiIndex& p, int i) { return MultiSimplex{MultiOrdinalMap::identity(p), i}; }

  const std::shared_ptr<const MultiModel>& model() const { return model_; }
  MultiSimplex locate(const MultiIndex& p, const Key& k) const;

  // Axiswise simplicial identities and commutation of faces along different axes.
  bool check_identities(std::string* why = nullptr) const;

 private:
  struct Level {
    std::vector<Key> keys;
    std::vector<std::string> labels;
    std::vector<std::vector<std::vector<MultiSimplex>>> faces;  // [cell][axis][j]
    std::unordered_map<Key, int, KeyHash> lookup;
  };
  int n_ = 1;
  std::map<MultiIndex, Level> levels_;
  std::shared_ptr<const MultiModel> model_;
  friend class Builder;
};

using SMSet = std::shared_ptr<const MultiSimplicialSet>;

class MultiSimplicialSet::Builder {
 public:
  explicit Builder(int n) { s_.n_ = n; }
  int add(const MultiIndex& p, Key key, std::string label = {});
  void set_faces(const MultiIndex& p, int i, int axis, std::vector<MultiSimplex> faces);
  std::optional<int> find(const MultiIndex& p, const Key& k) const { return s_.find(p, k); }
  int count(const MultiIndex& p) const { return s_.count(p); }
  const Key& key(const MultiIndex& p, int i) const { return s_.key(p, i); }
  void set_model(std::shared_ptr<const MultiModel> m) { s_.model_ = std::move(m); }
  SMSet build();

 private:
  MultiSimplicialSet s_;
};

// Implicit presentation by keys of all multisimplices.
class MultiModel {
 public:
  virtual ~MultiModel() = default;
  virtual int n() const = 0;
  // Multi-degrees to enumerate: every p with p <= extent() componentwise.
  virtual MultiIndex extent() const = 0;
  virtual std::vector<Key> candidates(const MultiIndex& p) const = 0;
  virtual bool candidates_nondegenerate() const { return false; }
  virtual Key act(const MultiOrdinalMap& theta, const Key& x) const = 0;
  virtual std::string label(const MultiIndex& p, const Key& x) const;

  bool degenerate_along(const MultiIndex& p, int axis, const Key& x) const;
  bool totally_nondegenerate(const MultiIndex& p, const Key& x) const;
  // Per-axis EZ reduction, axis 0 first. Returns (eta, y) with x = eta^* y.
  virtual std::pair<MultiOrdinalMap, Key> normalize(const MultiIndex& p, const Key& x) const;
};

SMSet realize(std::shared_ptr<const MultiModel> model);

struct MultiSimplicialMap {
  SMSet dom, cod;
  std::map<MultiIndex, std::vector<MultiSimplex>> image;
  MultiSimplex apply(const MultiSimplex& s) const;
  bool check(std::string* why = nullptr) const;
};

MultiSimplicialMap multi_map_from_keys(SMSet dom, SMSet cod, const std::function<Key(const MultiIndex&, const Key&)>& fn);
bool is_isomorphism(const MultiSimplicialMap& f, std::string* why = nullptr);

// X_1 ⊠ ... ⊠ X_n. Keys per axis: [q, index, eta values].
SMSet external_product(const std::vector<SSet>& factors);
std::vector<Simplex> external_parts(const MultiIndex& p, const Key& key);
Key external_key(const std::vector<Simplex>& parts);

// Delta[m_1, ..., m_n]
SMSet multi_simplex(const MultiIndex& m);

// δ*: p-simplices are the (p,...,p)-multisimplices. Keys: [q_1..q_n, index, eta values].
// When Y is only complete up to some multi-degree, pass the largest p with
// (p,...,p) inside it; the result is then truncated there.
SSet diagonal(SMSet Y, std::optional<int> truncation = std::nullopt);
Key diagonal_key(const MultiSimplex& s);
MultiSimplex diagonal_parts(const MultiSimplicialSet& Y, const Key& key);
SimplicialMap diagonal(const MultiSimplicialMap& f, SSet dom_diag, SSet cod_diag);

// δ_!: colimit of Delta[m,...,m] over the simplices of X. Cells are (x, f_1..f_n)
// with x non-degenerate of degree m and f_a : [p_a] -> [m] injective and jointly
// surjective. Keys: [m, index, f_1 values, ..., f_n values].
SMSet delta_shriek(SSet X, int n);
// δ_! on maps.
MultiSimplicialMap delta_shriek_map(const SimplicialMap& f, SMSet dom, SMSet cod);
// Unit X -> δ*δ_! X, x |-> (x, id, ..., id).
SimplicialMap unit_delta(SSet X, SSet diag_of_shriek);

struct MultiColimitArrow {
  int from, to;
  MultiSimplicialMap map;
};
struct MultiColimit {
  SMSet object;
  std::vector<MultiSimplicialMap> legs;
};
// Colimit of a diagram of monomorphisms (cells glued by the arrows).
MultiColimit colimit_of_monos(const std::vector<SMSet>& objects, const std::vector<MultiColimitArrow>& arrows);

// Result of the brute-force factorization search on a multisimplex of a
// product of standard simplices, given as its tuple of maps [p_a] -> [m_a].
struct FactorizationCensus {
  long long multisimplices = 0;
  long long unique = 0;         // exactly one factorization
  long long agree = 0;          // and it matches the normal form
  std::string first_failure;
};
FactorizationCensus multi_ez_census(const MultiIndex& m, int extra_degree);
// Random degeneracies of random cells, normalized and compared.
FactorizationCensus multi_ez_fuzz(SMSet Y, int trials, unsigned seed);

}  // namespace nfold
