#pragma once

#include <vector>

#include "strata/sigma.hpp"

namespace strata {

// Witness that x*base_alcove is a (J,w,delta)-alcove; tilde_x = w^{-1} x
// delta(w). When normalized, w is the minimal-length element of w W_J.
struct AlcoveCertificate {
  std::vector<int> j;
  WeylElt w;
  bool normalized = false;
  AffElt tilde_x;
};

bool weyl_in_level(const RootDatum& rd, const WeylElt& v,
                   const std::vector<int>& j);

bool is_alcove_element(const Group& g, const AffElt& x,
                       const std::vector<int>& j, const WeylElt& w);

AlcoveCertificate normalize_certificate(const Group& g, const AffElt& x,
                                        const std::vector<int>& j,
                                        const WeylElt& w);

// First certificate over delta-stable J by (cardinality, lex), w over
// minimal coset representatives of W/W_J by (length, lex word). Always
// succeeds (J = S, w = 1 certifies).
AlcoveCertificate find_minimal_pair(const Group& g, const AffElt& x);

// One normalized certificate per inclusion-minimal certified J.
std::vector<AlcoveCertificate> all_minimal_pairs(const Group& g,
                                                 const AffElt& x);

// Unique minimal element [m_x] of B(G)_x: basic class of kappa_{M_J}(tilde_x)
// pushed to this level.
SigmaClass minimal_newton(const Group& g, const AffElt& x);

bool basic_nonempty(const Group& g, const AffElt& x);

// d_x(b) = (len(x) + len(eta(x)) - def(b))/2 - <rho, nu_b>
Rat virtual_dimension(const Group& g, const AffElt& x, const SigmaClass& b);

}  // namespace strata
