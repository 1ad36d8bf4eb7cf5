#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nfold/catcore.hpp"
#include "nfold/nfoldcat.hpp"
#include "nfold/simplicial_set.hpp"

namespace nfold {

struct SaturationLimits {
  int word_guard = 64;          // longest formal composite, counted in generators
  long long cell_cap = 100000;  // live classes
  long long node_cap = 5000000;
};

// How a node of a presentation was produced.
struct Derivation {
  enum Kind { Gen, Unit, Comp } kind = Gen;
  int dir = -1;
  int a = -1, b = -1;  // Unit: a is the unit's base; Comp: b ∘^dir a
};

// Output of a saturation: the n-fold category of classes plus, per node, its
// derivation and class. A class without a generator node is a free composite.
struct Saturated {
  NCat cat;
  std::vector<std::vector<Derivation>> nodes;   // per eps
  std::vector<std::vector<int>> cell_of;        // per eps, node -> cell
  std::vector<std::vector<int>> generator_of;   // per eps, cell -> smallest generator node or -1
  int rounds = 0;

  bool is_free(unsigned eps, int cell) const { return generator_of[eps][cell] < 0; }
  // Extends an assignment of generator nodes to cells of E along the
  // derivations. Empty if two nodes of one class disagree or the result is
  // not an n-fold functor.
  std::optional<NFoldFunctor> extend(NCat E, const std::function<int(unsigned, int)>& generator_value) const;
};

// n-fold category presented by generators and relations, completed by
// saturation: close under units and composites of composable classes, merge
// classes forced equal by the axioms, repeat until nothing changes.
class Saturator {
 public:
  explicit Saturator(int n, SaturationLimits lim = {});

  int n() const { return n_; }
  int add_generator(unsigned eps, std::string label);
  void set_src(unsigned eps, int i, int x, int s);
  void set_tgt(unsigned eps, int i, int x, int t);

  int find(unsigned eps, int x) const;
  // Find or create.
  int unit(unsigned eps, int i, int x);
  int comp(unsigned eps, int i, int first, int second);
  // Declare table entries, for presentations that already know some composites.
  void seed_unit(unsigned eps, int i, int x, int u);
  void seed_comp(unsigned eps, int i, int first, int second, int result);
  void merge(unsigned eps, int a, int b);

  Saturated run();

 private:
  struct Level {
    std::vector<Derivation> der;
    std::vector<std::string> gen_label;
    std::vector<int> parent, len, gen_rep;
    std::vector<std::vector<int>> src, tgt;  // per direction
    std::vector<std::unordered_map<int, int>> unit_tab, unit_of;
    std::vector<std::unordered_map<std::uint64_t, int>> comp_tab;
  };

  int new_node(unsigned eps, Derivation d, int len);
  int root(unsigned eps, int x) const;
  std::optional<int> lookup_comp(unsigned eps, int i, int a, int b) const;
  std::optional<int> lookup_unit(unsigned eps, int i, int x) const;
  bool unit_root(unsigned eps, int i, int x) const;
  void flush();
  void canonicalize();
  std::vector<std::vector<std::vector<int>>> index_by_src(unsigned eps) const;
  void enforce_axioms();
  long long live_classes() const;
  std::string word(unsigned eps, int x, std::vector<std::unordered_map<int, std::string>>& memo) const;

  int n_;
  SaturationLimits lim_;
  std::vector<Level> lv_;
  std::vector<std::tuple<unsigned, int, int>> pending_;
  long long merges_ = 0, nodes_ = 0;
};

// Path category of the non-degenerate 1-skeleton modulo d1 σ = d0 σ ∘ d2 σ
// for every 2-simplex σ, degenerate edges read as identities.
Cat categorify(const SimplicialSet& X, int word_guard = 64);

struct CatPushout {
  Cat P;
  Functor from_q, from_r;
  std::vector<int> free_morphisms;  // morphisms of P that are formal composites
  Saturated sat;
};
// Pushout of Q <- S -> R. The leg into R must be injective on objects and
// morphisms; the leg into Q is arbitrary.
CatPushout pushout_cat(const Functor& s_to_q, const Functor& s_to_r, int word_guard = 64);

struct NFoldPushout {
  NCat P;
  NFoldFunctor from_q, from_r;
  std::vector<std::vector<int>> free_cells;  // per eps
  Saturated sat;
  // Generator nodes of the presentation: Q cells first, then R cells outside S.
  std::vector<std::vector<int>> q_node, r_node;
  // The map out of P induced by f: Q -> E and g: R -> E, if they agree on S.
  std::optional<NFoldFunctor> induced(const NFoldFunctor& f, const NFoldFunctor& g) const;
};
NFoldPushout nfold_pushout(const NFoldFunctor& s_to_q, const NFoldFunctor& s_to_r, SaturationLimits lim = {});

// The 1-fold functor F viewed as an n-fold functor between from_category images.
NFoldFunctor as_nfold(const Functor& f);

}  // namespace nfold
