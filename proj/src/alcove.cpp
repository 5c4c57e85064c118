#include "strata/alcove.hpp"

#include <algorithm>

#include "strata/errors.hpp"

namespace strata {

bool weyl_in_level(const RootDatum& rd, const WeylElt& v,
                   const std::vector<int>& j) {
  const Group& full = rd.full_level();
  WeylElt cur = v;
  while (!cur.is_identity()) {
    bool found = false;
    for (int i : j) {
      int idx = full.root_index(cur.inv_act_char(rd.simple_roots()[i]));
      if (idx >= 0 && !full.roots()[idx].positive) {
        cur = weyl_mul(rd.simple_reflection(i), cur);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

AffElt twist(const Group& g, const AffElt& x, const WeylElt& w) {
  const RootDatum& rd = g.datum();
  AffElt winv{IVec(rd.ambient_rank(), 0), weyl_inverse(w)};
  AffElt dw{IVec(rd.ambient_rank(), 0), rd.delta_conj(w)};
  return aff_mul(aff_mul(winv, x), dw);
}

bool delta_stable(const RootDatum& rd, const std::vector<int>& j) {
  for (int i : j)
    if (!std::binary_search(j.begin(), j.end(), rd.delta_perm()[i]))
      return false;
  return true;
}

}  // namespace

bool is_alcove_element(const Group& g, const AffElt& x,
                       const std::vector<int>& j, const WeylElt& w) {
  const RootDatum& rd = g.datum();
  std::vector<int> js = j;
  std::sort(js.begin(), js.end());
  if (!delta_stable(rd, js)) throw NonStableJ("delta(J) != J");
  if (!g.contains_level(js))
    throw SemanticError("J is not a subset of the level");
  AffElt tx = twist(g, x, w);
  if (!weyl_in_level(rd, tx.v, js)) return false;
  const Group& m = rd.level(js);
  for (int k = 0; k < g.num_positive(); ++k) {
    const Root& rt = g.roots()[k];
    if (m.root_index(rt.alpha) >= 0) continue;  // in Phi_J
    int idx = g.root_index(w.act_char(rt.alpha));
    if (offset(g, x, idx) < off1(g, idx)) return false;
  }
  return true;
}

AlcoveCertificate normalize_certificate(const Group& g, const AffElt& x,
                                        const std::vector<int>& j,
                                        const WeylElt& w) {
  if (!is_alcove_element(g, x, j, w))
    throw NotAnAlcove("x is not a (J,w,delta)-alcove element");
  AlcoveCertificate cert;
  cert.j = j;
  std::sort(cert.j.begin(), cert.j.end());
  cert.w = g.min_in_coset(w, cert.j);
  cert.normalized = true;
  cert.tilde_x = twist(g, x, cert.w);
  if (!weyl_in_level(g.datum(), cert.tilde_x.v, cert.j))
    throw NotAnAlcove("normalized tilde_x left the Levi");
  return cert;
}

AlcoveCertificate find_minimal_pair(const Group& g, const AffElt& x) {
  for (const auto& j : g.delta_stable_subsets()) {
    for (const auto& w : g.min_coset_reps(j)) {
      if (is_alcove_element(g, x, j, w))
        return normalize_certificate(g, x, j, w);
    }
  }
  throw InvalidDatum("no alcove pair found; J = S must certify");
}

std::vector<AlcoveCertificate> all_minimal_pairs(const Group& g,
                                                 const AffElt& x) {
  std::vector<std::pair<std::vector<int>, WeylElt>> certified;
  for (const auto& j : g.delta_stable_subsets())
    for (const auto& w : g.min_coset_reps(j))
      if (is_alcove_element(g, x, j, w)) {
        certified.push_back({j, w});
        break;  // one witness per J is enough
      }
  std::vector<AlcoveCertificate> out;
  for (const auto& [j, w] : certified) {
    bool minimal = true;
    for (const auto& [j2, w2] : certified) {
      if (j2.size() >= j.size() || j2 == j) continue;
      if (std::includes(j.begin(), j.end(), j2.begin(), j2.end()))
        minimal = false;
    }
    if (minimal) out.push_back(normalize_certificate(g, x, j, w));
  }
  return out;
}

SigmaClass minimal_newton(const Group& g, const AffElt& x) {
  AlcoveCertificate cert = find_minimal_pair(g, x);
  const Group& m = g.datum().level(cert.j);
  Pi1Element k = m.kappa_of_lambda(cert.tilde_x.lambda);
  return levi_transfer(m, g, basic_class(m, k));
}

bool basic_nonempty(const Group& g, const AffElt& x) {
  return is_basic(g, minimal_newton(g, x));
}

int defect(const Group& g, const SigmaClass& b) {
  if (!b.rep) throw NoRepresentative("class carries no representative");
  if (b.level != g.simple_set())
    throw SemanticError("defect: class level mismatch");
  AffElt y = min_length_rep(g, *b.rep);
  AlcoveCertificate cert = find_minimal_pair(g, y);
  const Group& m = g.datum().level(cert.j);
  Pi1Element k = m.kappa_of_lambda(cert.tilde_x.lambda);
  SigmaClass check = levi_transfer(m, g, basic_class(m, k));
  if (check != b)
    throw InvalidDatum(
        "defect: minimal representative does not reproduce the class");
  AffElt tau = omega_rep(m, cert.tilde_x.lambda);
  int rk_f = g.fixed_space_dim_twisted(weyl_identity(g.ambient_rank()));
  return rk_f - g.fixed_space_dim_twisted(tau.v);
}

Rat virtual_dimension(const Group& g, const AffElt& x, const SigmaClass& b) {
  if (b.level != g.simple_set())
    throw SemanticError("virtual_dimension: class level mismatch");
  Rat l = length(g, x);
  Rat leta = g.finite_length(eta(g, x));
  Rat def = defect(g, b);
  return (l + leta - def) / 2 - dotq(g.rho(), b.nu);
}

}  // namespace strata
