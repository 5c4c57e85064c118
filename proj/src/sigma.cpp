#include "strata/sigma.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strata/errors.hpp"

namespace strata {

QVec newton_point(const Group& g, const AffElt& y) {
  const RootDatum& rd = g.datum();
  size_t cap = g.weyl_order() * rd.delta_order() * 2 + 8;
  AffElt z = y;
  AffElt dky = y;
  for (size_t n = 1; n <= cap; ++n) {
    if (z.v.is_identity()) {
      QVec nu(z.lambda.size());
      for (size_t i = 0; i < nu.size(); ++i) nu[i] = Rat(z.lambda[i], n);
      nu[0].canonicalize();
      for (auto& c : nu) c.canonicalize();
      QVec dom = g.dominant_rep(nu).first;
      if (cmp_qvec(rd.delta_q(dom), dom) == 0) return dom;
    }
    dky = rd.delta_of(dky);
    z = aff_mul(z, dky);
  }
  throw InvalidDatum("newton point iteration did not terminate");
}

SigmaClass class_of(const Group& g, const AffElt& y) {
  SigmaClass b;
  b.nu = newton_point(g, y);
  b.kappa = kappa(g, y);
  b.level = g.simple_set();
  b.rep = y;
  return b;
}

bool leq(const Group& g, const SigmaClass& b, const SigmaClass& b2) {
  if (b.level != b2.level)
    throw SemanticError("comparing classes at different levels");
  if (b.kappa != b2.kappa) return false;
  auto cc = g.coroot_cone_coeffs(subq(b2.nu, b.nu), g.simple_set());
  if (!cc) return false;
  for (const auto& c : *cc)
    if (c < 0) return false;
  return true;
}

bool is_basic(const Group& g, const SigmaClass& b) {
  for (int i : g.simple_set())
    if (dotq(g.datum().simple_roots()[i], b.nu) != 0) return false;
  return true;
}

SigmaClass basic_class(const Group& g, const Pi1Element& k) {
  SigmaClass b;
  b.nu = g.datum().delta_average(g.central_projection(to_q(k.lift)));
  b.kappa = k;
  b.level = g.simple_set();
  b.rep = omega_rep(g, k.lift);
  return b;
}

SigmaClass levi_transfer(const Group& sub, const Group& g,
                         const SigmaClass& b) {
  if (b.level != sub.simple_set())
    throw SemanticError("class level does not match the sub-level");
  if (!g.contains_level(sub.simple_set()))
    throw SemanticError("levi_transfer target does not contain the source");
  SigmaClass out;
  out.nu = g.dominant_rep(b.nu).first;
  out.kappa = g.kappa_of_lambda(b.kappa.lift);
  out.level = g.simple_set();
  out.rep = b.rep;
  return out;
}

std::vector<SigmaClass> enumerate_segment(const Group& g,
                                          const Pi1Element& kap,
                                          const QVec& nu_max) {
  const RootDatum& rd = g.datum();
  if (!g.is_dominant(nu_max))
    throw SemanticError("enumerate_segment: nu_max must be dominant");
  std::vector<SigmaClass> out;
  std::set<std::vector<std::string>> seen;

  // fundamental-weight bounds: e_i <= <omega_i, nu_max>
  std::vector<Rat> ei;
  const auto& fw = g.fundamental_weights();
  for (size_t a = 0; a < g.simple_set().size(); ++a)
    ei.push_back(dotq(fw[a], nu_max));

  for (const auto& jp : g.delta_stable_subsets()) {
    const Group& m = rd.level(jp);
    auto avgproj = [&](const QVec& x) {
      return rd.delta_average(m.central_projection(x));
    };
    QVec base = avgproj(to_q(kap.lift));

    // delta-orbits on the complement of jp inside g's simple set
    std::vector<int> complement;
    for (int i : g.simple_set())
      if (!std::binary_search(jp.begin(), jp.end(), i)) complement.push_back(i);
    std::vector<std::vector<int>> orbits;
    {
      std::set<int> left(complement.begin(), complement.end());
      while (!left.empty()) {
        int i = *left.begin();
        std::vector<int> orb;
        int cur = i;
        do {
          orb.push_back(cur);
          left.erase(cur);
          cur = rd.delta_perm()[cur];
        } while (cur != i);
        std::sort(orb.begin(), orb.end());
        orbits.push_back(orb);
      }
    }
    std::vector<QVec> u;
    for (const auto& orb : orbits)
      u.push_back(avgproj(to_q(rd.simple_coroots()[orb[0]])));

    // dual functionals via the Gram matrix of the u_O
    size_t no = orbits.size();
    std::vector<Int> bound(no, 0);
    if (no > 0) {
      std::vector<QVec> gram_cols(no, QVec(no));
      for (size_t a = 0; a < no; ++a)
        for (size_t c = 0; c < no; ++c) gram_cols[a][c] = dotq(u[c], u[a]);
      std::vector<QVec> phi(no, QVec(0));
      for (size_t a = 0; a < no; ++a) {
        QVec rhs(no, 0);
        rhs[a] = 1;
        auto sol = solve_columns(gram_cols, rhs);
        if (!sol.ok)
          throw InvalidDatum("segment projections are not independent");
        QVec f(nu_max.size(), 0);
        for (size_t c = 0; c < no; ++c) f = addq(f, scaleq(sol.x[c], u[c]));
        phi[a] = f;
      }
      for (size_t a = 0; a < no; ++a) {
        Rat bnd = abs(dotq(phi[a], subq(nu_max, base)));
        for (size_t s = 0; s < g.simple_set().size(); ++s) {
          int i = g.simple_set()[s];
          bnd += ei[s] * abs(dotq(phi[a], to_q(rd.simple_coroots()[i])));
        }
        Rat fl = bnd;
        fl.canonicalize();
        bound[a] = fl.get_num().get_si() / fl.get_den().get_si() + 1;
      }
    }

    // scan the integer box
    size_t total = 1;
    for (size_t a = 0; a < no; ++a) {
      total *= static_cast<size_t>(2 * bound[a] + 1);
      if (total > 20000000)
        throw SearchBudgetExceeded("segment box too large");
    }
    std::vector<Int> mvec(no, 0);
    for (size_t it = 0; it < total; ++it) {
      size_t rem = it;
      for (size_t a = 0; a < no; ++a) {
        mvec[a] = static_cast<Int>(rem % (2 * bound[a] + 1)) - bound[a];
        rem /= (2 * bound[a] + 1);
      }
      QVec nu = base;
      for (size_t a = 0; a < no; ++a)
        nu = addq(nu, scaleq(Rat(mvec[a]), u[a]));
      bool ok = true;
      for (int i : complement)
        if (dotq(rd.simple_roots()[i], nu) <= 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      auto cc = g.coroot_cone_coeffs(subq(nu_max, nu), g.simple_set());
      if (!cc) continue;
      for (const auto& c : *cc)
        if (c < 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (const auto& c : nu)
        if (c.get_den() > 60)
          throw SemanticError("segment denominator cap (60) exceeded");
      IVec lift = kap.lift;
      for (size_t a = 0; a < no; ++a)
        for (int rep = 0; rep < mvec[a]; ++rep)
          lift = add(lift, rd.simple_coroots()[orbits[a][0]]);
      for (size_t a = 0; a < no; ++a)
        for (int rep = 0; rep > mvec[a]; --rep)
          lift = sub(lift, rd.simple_coroots()[orbits[a][0]]);
      std::vector<std::string> nu_key;
      for (const auto& c : nu) nu_key.push_back(rat_to_string(c));
      if (!seen.insert(nu_key).second) continue;
      SigmaClass b;
      b.nu = nu;
      b.kappa = kap;
      b.level = g.simple_set();
      b.rep = omega_rep(m, lift);
      out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const SigmaClass& a, const SigmaClass& b) {
              Rat ha = dotq(g.two_rho(), a.nu), hb = dotq(g.two_rho(), b.nu);
              int c = cmp(ha, hb);
              if (c != 0) return c < 0;
              return cmp_qvec(a.nu, b.nu) < 0;
            });
  return out;
}

}  // namespace strata
