#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strata/root_datum.hpp"

namespace strata {

constexpr size_t kDefaultBudget = 1000000;

AffElt aff_identity(const RootDatum& rd);
AffElt aff_translation(const RootDatum& rd, const IVec& lambda);
AffElt aff_mul(const AffElt& a, const AffElt& b);
AffElt aff_inv(const AffElt& a);

// Flattened key (lambda then the cocharacter matrix) for memo tables.
IVec aff_key(const AffElt& x);

// Key identifying x up to the central twisted-conjugation drift of the
// level; used by plateau walks so they stay finite for nontrivial delta.
IVec plateau_key(const Group& g, const AffElt& x);

struct IVecHash {
  size_t operator()(const IVec& v) const {
    size_t h = 1469598103934665603ull;
    for (Int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Iwahori offset: off(1, alpha) = 1 for alpha > 0 and 0 for alpha < 0;
// off(t^lambda v, alpha) = off(1, v^{-1} alpha) - <alpha, lambda>.
Int off1(const Group& g, int root_idx);
Int offset(const Group& g, const AffElt& x, int root_idx);
std::vector<Int> all_offsets(const Group& g, const AffElt& x);

Int length(const Group& g, const AffElt& x);

enum class ShrunkenStatus { not_shrunken, shrunken, regular_shrunken };
ShrunkenStatus shrunken_status(const Group& g, const AffElt& x);
const char* to_string(ShrunkenStatus s);

// eta(x) = delta^{-1}(w) v for the decomposition x = v t^mu w, mu dominant,
// w shortest in W_mu w.
WeylElt eta(const Group& g, const AffElt& x);

Pi1Element kappa(const Group& g, const AffElt& x);
IVec omega_component(const Group& g, const AffElt& x);

bool bruhat_leq(const Group& g, const AffElt& x, const AffElt& y);

// Reduced word in the affine generators (indices into g.affine_gens()) with
// the residual length-zero part: x = gens[w_0] * ... * gens[w_k] * omega.
std::pair<std::vector<int>, AffElt> reduced_word(const Group& g,
                                                 const AffElt& x);

// Walks the length-preserving delta-conjugation plateau of x. Either x is of
// minimal length in its class, or some plateau element `elt` and generator
// index `gen` satisfy len(s * elt * delta(s)) = len(elt) - 2.
struct PlateauResult {
  bool minimal = false;
  AffElt elt;
  int gen = -1;
};
PlateauResult plateau_search(const Group& g, const AffElt& x,
                             size_t budget = kDefaultBudget);

std::pair<bool, std::optional<AffElt>> min_length_in_class(
    const Group& g, const AffElt& x, size_t budget = kDefaultBudget);

// Descend to an actual minimal-length element of the class of x.
AffElt min_length_rep(const Group& g, const AffElt& x,
                      size_t budget = kDefaultBudget);

// The unique length-zero element of t^lambda W_a at this level.
AffElt omega_rep(const Group& g, const IVec& lambda);

// Canonical serialization "t[l1,...,ld]*s1*s2"; identity prints as "1".
std::string print_elt(const RootDatum& rd, const AffElt& x);
std::string print_weyl(const RootDatum& rd, const WeylElt& v);

}  // namespace strata
