#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nfold/common.hpp"
#include "nfold/simplicial_map.hpp"
#include "nfold/simplicial_set.hpp"

namespace nfold {

struct Morphism {
  int src = 0, tgt = 0;
  std::string label;
};

// Finite category with an explicit composition table.
class FinCat {
 public:
  int add_object(std::string label);
  int add_morphism(int src, int tgt, std::string label);
  // Records g ∘ f = h.
  void set_compose(int g, int f, int h);

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_label(int a) const { return objects_[a]; }
  const Morphism& morphism(int f) const { return morphisms_[f]; }
  int src(int f) const { return morphisms_[f].src; }
  int tgt(int f) const { return morphisms_[f].tgt; }
  int identity(int a) const { return identity_[a]; }
  bool is_identity(int f) const { return identity_[morphisms_[f].src] == f; }

  std::optional<int> compose(int g, int f) const;
  int comp(int g, int f) const;
  // Non-identity morphisms out of / into an object.
  const std::vector<int>& out(int a) const { return out_[a]; }
  const std::vector<int>& in(int a) const { return in_[a]; }
  std::vector<int> hom(int a, int b) const;
  std::optional<int> find_object(const std::string& label) const;

  bool check(std::string* why = nullptr) const;
  // Longest chain of composable non-identity morphisms, or -1 if unbounded.
  int longest_chain() const;
  bool is_preorder() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identity_;
  std::unordered_map<std::uint64_t, int> compose_;
  std::vector<std::vector<int>> out_, in_;
  std::unordered_map<std::string, int> object_index_;
};

using Cat = std::shared_ptr<const FinCat>;

struct FinPoset {
  std::vector<std::string> labels;
  std::vector<std::vector<char>> le;

  static FinPoset from_relation(int n, const std::function<bool(int, int)>& leq, std::vector<std::string> labels);
  int size() const { return static_cast<int>(labels.size()); }
  bool leq(int a, int b) const { return le[a][b] != 0; }
  bool less(int a, int b) const { return a != b && le[a][b]; }
  bool comparable(int a, int b) const { return le[a][b] || le[b][a]; }
  bool check(std::string* why = nullptr) const;
  std::vector<std::pair<int, int>> covers() const;
  FinPoset induced(const std::vector<int>& elems) const;
  bool up_closed(const std::vector<char>& member) const;
  bool down_closed(const std::vector<char>& member) const;
  std::optional<int> find(const std::string& label) const;
  // One morphism a -> b per pair a <= b, labelled "a<=b".
  Cat to_category() const;
  SSet nerve() const;
};

// Morphism id of a <= b in a category produced by FinPoset::to_category.
int poset_arrow(const FinCat& c, int a, int b);

struct Functor {
  Cat dom, cod;
  std::vector<int> obj, mor;
  bool check(std::string* why = nullptr) const;
  Functor then(const Functor& g) const;
};

Functor identity_functor(Cat c);
// Functor between poset categories induced by an object map; throws if not monotone.
Functor poset_functor(Cat dom, Cat cod, const std::vector<int>& objmap);

struct NatTransf {
  Functor F, G;
  std::vector<int> component;
  bool check(std::string* why = nullptr) const;
};

// Category nerve. Keys are [obj_0, f_1, ..., f_p]. Loop-free categories need
// no cap; categories whose non-identity morphisms form a cycle need one and
// come back truncated at it.
SSet nerve(Cat c, std::optional<int> cap = std::nullopt);

// Nerve functor on maps.
SimplicialMap nerve_map(const Functor& f, SSet dom_nerve, SSet cod_nerve);

// Simplicial homotopy N(dom) x Delta[1] -> N(cod) from NF to NG.
struct NerveHomotopy {
  SSet cylinder;  // N(dom) x Delta[1]
  SimplicialMap h;
  SimplicialMap end0, end1;  // restrictions along the two ends, as maps N(dom) -> N(cod)
  bool ok = false;
  std::string detail;
};
NerveHomotopy nat_transf_to_homotopy(const NatTransf& a);

// S full in both Q and R, and every morphism of Q or R leaving an object of S lands in S.
bool nerve_pushout_hypotheses(const FinCat& Q, const std::vector<int>& s_in_q, const FinCat& R,
                              const std::vector<int>& s_in_r);

std::optional<Functor> find_isomorphism(Cat a, Cat b);

}  // namespace nfold
