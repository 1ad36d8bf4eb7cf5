#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nfold/common.hpp"
#include "nfold/ordinal.hpp"

namespace nfold {

// A simplex in Eilenberg-Zilber form: eta^* of the non-degenerate simplex
// `index` of degree eta.target().
struct Simplex {
  OrdinalMap eta;
  int index = 0;

  int degree() const { return eta.source(); }
  int nd_degree() const { return eta.target(); }
  bool nondegenerate() const { return eta.is_identity(); }

  friend bool operator==(const Simplex& a, const Simplex& b) { return a.index == b.index && a.eta == b.eta; }
  friend bool operator!=(const Simplex& a, const Simplex& b) { return !(a == b); }
  friend bool operator<(const Simplex& a, const Simplex& b) {
    if (a.eta.target() != b.eta.target()) return a.eta.target() < b.eta.target();
    if (a.index != b.index) return a.index < b.index;
    return a.eta < b.eta;
  }
};

class SimplicialModel;

// Finite simplicial set stored by its non-degenerate simplices. Each of them
// carries a key (unique within its degree), a label and its faces as EZ pairs.
class SimplicialSet {
 public:
  class Builder;

  int dim() const { return static_cast<int>(keys_.size()) - 1; }
  int count(int q) const { return q < 0 || q > dim() ? 0 : static_cast<int>(keys_[q].size()); }
  std::vector<int> counts() const;
  long long total() const;

  const Key& key(int q, int i) const { return keys_[q][i]; }
  const std::string& label(int q, int i) const { return labels_[q][i]; }
  const Simplex& face(int q, int i, int j) const { return faces_[q][i][j]; }
  std::optional<int> find(int q, const Key& k) const;

  // theta^* s for theta : [p] -> [s.degree()].
  Simplex apply(const OrdinalMap& theta, const Simplex& s) const;
  Simplex face_of(const Simplex& s, int j) const;
  Simplex degeneracy_of(const Simplex& s, int j) const;
  static Simplex nd(int q, int i) { return Simplex{OrdinalMap::identity(q), i}; }

  // Vertex indices v_0..v_p of a simplex.
  std::vector<int> vertices(const Simplex& s) const;

  // Simplices are complete in every degree <= truncated_at(); homology is
  // meaningful strictly below it.
  std::optional<int> truncated_at() const { return truncated_; }

  const std::shared_ptr<const SimplicialModel>& model() const { return model_; }
  // EZ form of an arbitrary p-simplex of the model this set was realized from.
  Simplex locate(int p, const Key& k) const;

  // Expands EZ pairs and checks d_i d_j = d_{j-1} d_i on all stored simplices.
  bool check_identities(std::string* why = nullptr) const;

 private:
  std::vector<std::vector<Key>> keys_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<std::vector<Simplex>>> faces_;
  std::vector<std::unordered_map<Key, int, KeyHash>> lookup_;
  std::optional<int> truncated_;
  std::shared_ptr<const SimplicialModel> model_;

  friend class Builder;
};

using SSet = std::shared_ptr<const SimplicialSet>;

class SimplicialSet::Builder {
 public:
  int add(int q, Key key, std::string label = {});
  void set_faces(int q, int i, std::vector<Simplex> faces);
  void set_truncated(std::optional<int> t) { s_.truncated_ = t; }
  int count(int q) const { return s_.count(q); }
  const Key& key(int q, int i) const { return s_.key(q, i); }
  void set_model(std::shared_ptr<const SimplicialModel> m) { s_.model_ = std::move(m); }
  std::optional<int> find(int q, const Key& k) const { return s_.find(q, k); }
  SSet build();

 private:
  void grow(int q);
  SimplicialSet s_;
};

// Implicit presentation of a simplicial set: keys for all simplices of each
// degree (degenerate ones included), with the operator action on keys.
class SimplicialModel {
 public:
  virtual ~SimplicialModel() = default;
  virtual int max_degree() const = 0;
  virtual std::optional<int> truncation() const { return std::nullopt; }
  // Superset of the non-degenerate p-simplices.
  virtual std::vector<Key> candidates(int p) const = 0;
  // True when every candidate is already known to be non-degenerate.
  virtual bool candidates_nondegenerate() const { return false; }
  // theta^* x for theta : [p'] -> [p] and x a p-simplex.
  virtual Key act(const OrdinalMap& theta, const Key& x) const = 0;
  virtual std::string label(int p, const Key& x) const;

  bool is_degenerate(int p, const Key& x) const;
  // Returns (eta, y) with x = eta^* y and y non-degenerate.
  virtual std::pair<OrdinalMap, Key> normalize(int p, const Key& x) const;
};

SSet realize(std::shared_ptr<const SimplicialModel> model);

// Ordered simplicial complex on vertices 0..n-1 with a partial order leq; the
// simplices are chains accepted by `face`. Keys are vertex sequences that are
// weakly increasing along leq. Covers standard simplices, boundaries, horns
// and nerves of posets.
class OrderedComplexModel : public SimplicialModel {
 public:
  using Leq = std::function<bool(int, int)>;
  using FacePred = std::function<bool(const std::vector<int>&)>;

  OrderedComplexModel(int n, Leq leq, FacePred face, std::vector<std::string> labels = {});

  int max_degree() const override { return max_degree_; }
  std::vector<Key> candidates(int p) const override;
  bool candidates_nondegenerate() const override { return true; }
  Key act(const OrdinalMap& theta, const Key& x) const override;
  std::string label(int p, const Key& x) const override;

 private:
  int n_;
  Leq leq_;
  FacePred face_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Key>> by_degree_;
  int max_degree_ = 0;
};

SSet std_simplex(int m);
SSet boundary(int m);
SSet horn(int m, int k);
// Nerve of a finite poset given by its order relation.
SSet order_complex(int n, const OrderedComplexModel::Leq& leq, std::vector<std::string> labels = {});

std::string set_label(unsigned mask);

}  // namespace nfold
