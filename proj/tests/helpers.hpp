#pragma once

#include <random>

#include "strata/affine.hpp"
#include "strata/root_datum.hpp"

namespace strata::testing {

inline IVec random_lambda(const RootDatum& rd, std::mt19937_64& rng,
                          Int box = 3) {
  std::uniform_int_distribution<Int> coeff(-box, box);
  IVec lam(rd.ambient_rank(), 0);
  for (const auto& b : rd.cochar_basis()) {
    Int c = coeff(rng);
    for (int i = 0; i < rd.ambient_rank(); ++i) lam[i] += c * b[i];
  }
  return lam;
}

inline AffElt random_element_level(const Group& g, std::mt19937_64& rng,
                                   int max_word = 8, Int box = 3) {
  const RootDatum& rd = g.datum();
  AffElt x = aff_translation(rd, random_lambda(rd, rng, box));
  if (g.affine_gens().empty()) return x;
  std::uniform_int_distribution<int> len(0, max_word);
  std::uniform_int_distribution<size_t> pick(0, g.affine_gens().size() - 1);
  int n = len(rng);
  for (int i = 0; i < n; ++i) x = aff_mul(x, g.affine_gens()[pick(rng)]);
  return x;
}

inline AffElt random_element(const RootDatum& rd, std::mt19937_64& rng,
                             int max_word = 8, Int box = 3) {
  return random_element_level(rd.full_level(), rng, max_word, box);
}

// Independent geometric length oracle: the number of root hyperplane
// translates <alpha, .> = k separating the base alcove from its image. The
// base point is a generic interior point of the antidominant base alcove;
// the element acts by p -> v(p) + lambda.
inline Int crossing_length(const Group& g, const AffElt& x) {
  const RootDatum& rd = g.datum();
  // base point: <alpha_i, p0> = -(i+2)/D with D prime and large
  const Int D = 1009;
  std::vector<QVec> cols;
  for (int i : g.simple_set()) cols.push_back(to_q(rd.simple_roots()[i]));
  // p0 = sum c_a coroot_a, solve the pairing conditions
  std::vector<QVec> cart_cols;
  size_t r = g.simple_set().size();
  for (size_t a = 0; a < r; ++a) {
    QVec col(r);
    for (size_t b = 0; b < r; ++b)
      col[b] = dot(rd.simple_roots()[g.simple_set()[b]],
                   rd.simple_coroots()[g.simple_set()[a]]);
    cart_cols.push_back(col);
  }
  QVec rhs(r);
  for (size_t b = 0; b < r; ++b) rhs[b] = Rat(-(Int)(b + 2), D);
  auto sol = solve_columns(cart_cols, rhs);
  QVec p0(rd.ambient_rank(), 0);
  for (size_t a = 0; a < r; ++a)
    p0 = addq(p0, scaleq(sol.x[a],
                         to_q(rd.simple_coroots()[g.simple_set()[a]])));
  QVec p1 = x.v.act(p0);
  for (int i = 0; i < rd.ambient_rank(); ++i) p1[i] += Rat(x.lambda[i]);

  auto floor_q = [](const Rat& q) -> Int {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(),
               q.get_den().get_mpz_t());
    return fl.get_si();
  };
  Int total = 0;
  for (int k = 0; k < g.num_positive(); ++k) {
    Rat a = dotq(to_q(g.roots()[k].alpha), p0);
    Rat b = dotq(to_q(g.roots()[k].alpha), p1);
    if (a.get_den() == 1 || b.get_den() == 1)
      throw std::logic_error("crossing oracle hit a wall; not generic");
    Int fa = floor_q(a), fb = floor_q(b);
    total += fa > fb ? fa - fb : fb - fa;
  }
  return total;
}

}  // namespace strata::testing
