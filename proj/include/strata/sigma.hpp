#pragma once

#include <optional>
#include <vector>

#include "strata/affine.hpp"
#include "strata/root_datum.hpp"

namespace strata {

// Element of B(G) (or B(M_J)): dominant Newton point plus Kottwitz point.
// Equality and ordering ignore the carried representative.
struct SigmaClass {
  QVec nu;
  Pi1Element kappa;
  std::vector<int> level;
  std::optional<AffElt> rep;

  bool operator==(const SigmaClass& o) const {
    return level == o.level && kappa == o.kappa && cmp_qvec(nu, o.nu) == 0;
  }
  bool operator!=(const SigmaClass& o) const { return !(*this == o); }
  bool operator<(const SigmaClass& o) const {
    if (level != o.level) return level < o.level;
    int c = cmp_qvec(nu, o.nu);
    if (c != 0) return c < 0;
    return kappa.canon < o.kappa.canon;
  }
};

// Newton point of t^lambda v at the given level: the level-dominant
// representative of Lambda/n where y delta(y) ... delta^{n-1}(y) = t^Lambda
// is the first pure-translation twisted power (extended, if necessary, until
// the dominant representative is delta-fixed).
QVec newton_point(const Group& g, const AffElt& y);

SigmaClass class_of(const Group& g, const AffElt& y);

bool leq(const Group& g, const SigmaClass& b, const SigmaClass& b2);

bool is_basic(const Group& g, const SigmaClass& b);
SigmaClass basic_class(const Group& g, const Pi1Element& k);

// def_G(b) = rk_F(G) - rk_F(J_b), computed from a length-zero representative
// of the basic class of b inside the centralizing Levi; requires a carried
// representative. Defined in alcove.cpp (uses the minimal-pair search).
int defect(const Group& g, const SigmaClass& b);

// Push a class at a sub-level into the bigger level (Newton point
// re-dominantized, Kottwitz point re-reduced).
SigmaClass levi_transfer(const Group& sub, const Group& g,
                         const SigmaClass& b);

// All classes of the level with the given Kottwitz point and nu preceq
// nu_max, each carrying a length-zero representative.
std::vector<SigmaClass> enumerate_segment(const Group& g,
                                          const Pi1Element& kappa,
                                          const QVec& nu_max);

}  // namespace strata
