#pragma once

#include <string>

#include "strata/root_datum.hpp"

namespace strata {

// Parses "t[1,0]*s1", "s0*s1*s0", "(t[1,1]*s2)^-1", "1". Whitespace is
// ignored; ParseError carries the 0-based column of the failure. s0 is the
// affine reflection t^{-theta^vee} s_theta (irreducible systems only).
AffElt parse_element(const std::string& text, const RootDatum& rd);

}  // namespace strata
