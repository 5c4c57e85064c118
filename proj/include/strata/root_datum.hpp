#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "strata/rational.hpp"
#include "strata/smith.hpp"

namespace strata {

class RootDatum;
class Group;

// Finite Weyl group element, identified by its lattice action. `coch` acts on
// cocharacters, `chr` on characters; chr = (coch^T)^{-1} so no inversions are
// ever needed: v^{-1} on characters is coch^T.
struct WeylElt {
  IMat coch;
  IMat chr;

  bool operator==(const WeylElt& o) const { return coch == o.coch; }
  bool operator!=(const WeylElt& o) const { return coch != o.coch; }
  bool is_identity() const;

  IVec act(const IVec& x) const { return apply_mat(coch, x); }
  QVec act(const QVec& x) const { return apply_mat(coch, x); }
  IVec act_char(const IVec& a) const { return apply_mat(chr, a); }
  // v^{-1} acting on a character.
  IVec inv_act_char(const IVec& a) const;
};

WeylElt weyl_identity(int d);
WeylElt weyl_mul(const WeylElt& a, const WeylElt& b);
WeylElt weyl_inverse(const WeylElt& a);
// reflection with given root/coroot pair
WeylElt reflection(int d, const IVec& alpha, const IVec& coalpha);

// Element t^lambda * v of the extended affine Weyl group.
struct AffElt {
  IVec lambda;
  WeylElt v;

  bool operator==(const AffElt& o) const {
    return lambda == o.lambda && v == o.v;
  }
  bool operator!=(const AffElt& o) const { return !(*this == o); }
};

// Class in a pi1 quotient, stored as canonical coordinates plus an integral
// lift (an honest ambient cocharacter mapping to the class).
struct Pi1Element {
  IVec canon;
  IVec lift;

  bool operator==(const Pi1Element& o) const { return canon == o.canon; }
  bool operator!=(const Pi1Element& o) const { return canon != o.canon; }
  bool is_zero() const {
    for (Int x : canon)
      if (x) return false;
    return true;
  }
};

struct Root {
  IVec alpha;          // character vector
  IVec coalpha;        // cocharacter vector
  bool positive;
  int component;       // index into Group::components()
  int negative_index;  // index of -alpha in the root list
};

// A root datum together with a diagram automorphism delta. Everything is
// immutable after construction; levels (Levi subgroups M_J) are cached.
class RootDatum : public std::enable_shared_from_this<RootDatum> {
 public:
  struct Spec {
    std::string name;
    int ambient_rank = 0;
    std::vector<IVec> simple_roots;
    std::vector<IVec> simple_coroots;
    std::vector<IVec> cochar_basis;  // empty = all of Z^d
    std::vector<int> delta_perm;     // 0-based images; empty = identity
    IMat delta_matrix;               // action on cocharacters; empty = id
  };

  static std::shared_ptr<const RootDatum> build(const Spec& spec);
  // "GL:n", "SL:n", "SP:2n"
  static std::shared_ptr<const RootDatum> builtin(const std::string& name);

  const std::string& name() const { return name_; }
  int ambient_rank() const { return d_; }
  int num_simple() const { return static_cast<int>(simple_roots_.size()); }
  const std::vector<IVec>& simple_roots() const { return simple_roots_; }
  const std::vector<IVec>& simple_coroots() const { return simple_coroots_; }
  const std::vector<IVec>& cochar_basis() const { return cochar_basis_; }
  int cochar_rank() const { return static_cast<int>(cochar_basis_.size()); }

  const std::vector<int>& delta_perm() const { return delta_perm_; }
  const IMat& delta_coch() const { return delta_coch_; }
  const IMat& delta_chr() const { return delta_chr_; }
  int delta_order() const { return delta_order_; }
  bool delta_is_identity() const;

  IVec delta_lambda(const IVec& l) const { return apply_mat(delta_coch_, l); }
  QVec delta_q(const QVec& x) const { return apply_mat(delta_coch_, x); }
  WeylElt delta_conj(const WeylElt& v) const;
  AffElt delta_of(const AffElt& x) const;
  QVec delta_average(const QVec& x) const;

  const WeylElt& simple_reflection(int i) const { return refl_[i]; }

  // Is lambda in the cocharacter lattice? Coordinates in the lattice basis.
  std::optional<IVec> cochar_coords(const IVec& lambda) const;
  bool in_cochar_lattice(const IVec& lambda) const {
    return cochar_coords(lambda).has_value();
  }

  // Level for a subset J of simple indices (0-based, sorted). The full level
  // J = {0..r-1} is the group G itself.
  const Group& level(std::vector<int> j) const;
  const Group& full_level() const;

 private:
  friend class Group;
  RootDatum() = default;
  void validate_and_finish();

  std::string name_;
  int d_ = 0;
  std::vector<IVec> simple_roots_;
  std::vector<IVec> simple_coroots_;
  std::vector<IVec> cochar_basis_;
  std::vector<int> delta_perm_;
  IMat delta_coch_;
  IMat delta_chr_;
  int delta_order_ = 1;
  std::vector<WeylElt> refl_;

  mutable std::mutex level_mutex_;
  mutable std::map<std::vector<int>, std::unique_ptr<Group>> levels_;
};

// A level of the datum: the Levi subgroup M_J (J = all simple indices gives
// G). Holds the root subsystem Phi_J, its Weyl group, length data, and the
// pi1 quotient presentations.
class Group {
 public:
  Group(std::shared_ptr<const RootDatum> datum, std::vector<int> j);

  const RootDatum& datum() const { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return datum_; }
  const std::vector<int>& simple_set() const { return j_; }
  bool is_full() const {
    return static_cast<int>(j_.size()) == datum_->num_simple();
  }
  bool contains_level(const std::vector<int>& sub) const;
  bool is_delta_stable() const { return delta_stable_; }
  int ambient_rank() const { return datum_->ambient_rank(); }

  const std::vector<Root>& roots() const { return roots_; }
  int num_positive() const { return n_pos_; }
  // signed index lookup; -1 if not a root of this level
  int root_index(const IVec& alpha) const;

  const QVec& rho() const { return rho_; }
  const IVec& two_rho() const { return two_rho_; }
  const std::vector<std::vector<int>>& components() const {
    return components_;
  }
  // affine simple generators: one reflection per simple root of J plus
  // t^{-theta^vee} s_theta per irreducible component
  const std::vector<AffElt>& affine_gens() const { return affine_gens_; }

  // finite Weyl machinery (lengths etc. relative to Phi_J)
  Int finite_length(const WeylElt& v) const;
  std::vector<int> word(const WeylElt& v) const;  // lex-min reduced word
  WeylElt from_word(const std::vector<int>& w) const;
  const std::vector<WeylElt>& weyl_elements() const;
  size_t weyl_order() const { return weyl_elements().size(); }
  WeylElt longest_element() const;

  bool is_dominant(const QVec& x) const;
  bool is_dominant_regular(const QVec& x) const;
  // (dominant representative, v) with v * x = dominant
  std::pair<QVec, WeylElt> dominant_rep(const QVec& x) const;

  // x = sum_{i in jsub} c_i alpha_i^vee with exact rational c? jsub indexes
  // into the datum's simple roots and must be a subset of this level.
  std::optional<QVec> coroot_cone_coeffs(const QVec& x,
                                         const std::vector<int>& jsub) const;

  Pi1Element kappa_of_lambda(const IVec& lambda) const;
  IVec omega_component(const IVec& lambda) const;
  const IVec& pi1_invariant_factors() const {
    return kappa_quot_.invariant_factors();
  }

  // delta-stable subsets of this level's simple set, by cardinality then lex
  std::vector<std::vector<int>> delta_stable_subsets() const;

  // minimal-length representatives of the cosets W_J / W_{J'}, sorted by
  // (length, lex word)
  std::vector<WeylElt> min_coset_reps(const std::vector<int>& jsub) const;
  // minimal-length element of v * W_{J'}
  WeylElt min_in_coset(WeylElt v, const std::vector<int>& jsub) const;

  // fundamental weights for the simple roots of this level (zero paired with
  // the lattice-orthogonal complement), index parallel to simple_set()
  const std::vector<QVec>& fundamental_weights() const { return fw_; }

  // projection killing the coroot span of this level: <alpha_i, P x> = 0
  QVec central_projection(const QVec& x) const;

  // dimension over Q of the fixed space of (v . delta) on X_*(T)_Q
  int fixed_space_dim_twisted(const WeylElt& v) const;

  // integer basis (ambient coordinates) of the central sublattice
  // {lambda in X_* : <alpha_i, lambda> = 0 for i in J}
  const std::vector<IVec>& central_basis() const { return central_basis_; }

  // canonical coordinates of lambda modulo the drift lattice (1-delta)C,
  // C = central sublattice. Twisted conjugation by a central translation
  // shifts the translation part by exactly such a drift, preserving length
  // and class; plateau walks and memo tables key on this quotient.
  IVec drift_reduced(const IVec& lambda) const;

 private:
  void build_roots();
  void build_quotients();

  std::shared_ptr<const RootDatum> datum_;
  std::vector<int> j_;
  bool delta_stable_ = false;

  std::vector<Root> roots_;
  int n_pos_ = 0;
  std::map<IVec, int> root_index_;
  QVec rho_;
  IVec two_rho_;
  std::vector<std::vector<int>> components_;
  std::vector<AffElt> affine_gens_;
  std::vector<QVec> fw_;

  LatticeQuotient kappa_quot_;
  LatticeQuotient omega_quot_;
  LatticeQuotient drift_quot_;
  std::vector<IVec> central_basis_;

  mutable std::mutex weyl_mutex_;
  mutable std::vector<WeylElt> weyl_cache_;
};

}  // namespace strata
