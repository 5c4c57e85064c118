#pragma once

#include "strata/rational.hpp"

namespace strata {

// Smith normal form of an integer matrix A (r x c): computes unimodular U
// (r x r) and V (c x c) with U*A*V = diag(d_1,...,d_k), d_i >= 0 and
// d_1 | d_2 | ... . Entries stay small for the Cartan-scale matrices used
// here; arithmetic is plain 64-bit.
struct SmithResult {
  IMat u;           // r x r unimodular
  IMat v;           // c x c unimodular
  IVec diag;        // length min(r,c), divisibility chain, >= 0
};
SmithResult smith_normal_form(IMat a);

// Presentation of the quotient Z^r / <columns of R> in invariant-factor
// coordinates. reduce() maps a vector to the canonical form of its class:
// torsion coordinates first (mod d_i, d_i > 1), then free coordinates
// (d_i = 0), with factors d_i = 1 dropped. Free coordinate rows of U are
// sign-normalized so canonical forms are reproducible.
class LatticeQuotient {
 public:
  LatticeQuotient() = default;
  // relations: generators of the subgroup, as vectors in Z^r.
  LatticeQuotient(int rank, const std::vector<IVec>& relations);

  IVec reduce(const IVec& v) const;
  // invariant factors with the 1s dropped: torsion moduli then 0s (free).
  const IVec& invariant_factors() const { return factors_; }
  int rank() const { return rank_; }

 private:
  int rank_ = 0;
  IMat u_;        // change of basis applied before per-coordinate reduction
  IVec moduli_;   // full list of moduli per new coordinate (0 = free)
  IVec factors_;  // moduli with the trivial (1) entries removed
};

}  // namespace strata
