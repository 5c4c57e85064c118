#include "strata/affine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "strata/errors.hpp"

namespace strata {

AffElt aff_identity(const RootDatum& rd) {
  return {IVec(rd.ambient_rank(), 0), weyl_identity(rd.ambient_rank())};
}

AffElt aff_translation(const RootDatum& rd, const IVec& lambda) {
  return {lambda, weyl_identity(rd.ambient_rank())};
}

AffElt aff_mul(const AffElt& a, const AffElt& b) {
  return {add(a.lambda, a.v.act(b.lambda)), weyl_mul(a.v, b.v)};
}

AffElt aff_inv(const AffElt& a) {
  WeylElt vi = weyl_inverse(a.v);
  return {neg(vi.act(a.lambda)), vi};
}

IVec aff_key(const AffElt& x) {
  IVec k = x.lambda;
  for (const auto& row : x.v.coch) k.insert(k.end(), row.begin(), row.end());
  return k;
}

IVec plateau_key(const Group& g, const AffElt& x) {
  IVec k = g.drift_reduced(x.lambda);
  for (const auto& row : x.v.coch) k.insert(k.end(), row.begin(), row.end());
  return k;
}

Int off1(const Group& g, int root_idx) {
  return g.roots()[root_idx].positive ? 1 : 0;
}

Int offset(const Group& g, const AffElt& x, int root_idx) {
  const Root& rt = g.roots()[root_idx];
  int bidx = g.root_index(x.v.inv_act_char(rt.alpha));
  return off1(g, bidx) - dot(rt.alpha, x.lambda);
}

std::vector<Int> all_offsets(const Group& g, const AffElt& x) {
  std::vector<Int> out(g.roots().size());
  for (size_t k = 0; k < g.roots().size(); ++k)
    out[k] = offset(g, x, static_cast<int>(k));
  return out;
}

Int length(const Group& g, const AffElt& x) {
  Int len = 0;
  for (size_t k = 0; k < g.roots().size(); ++k) {
    Int d = offset(g, x, static_cast<int>(k)) - off1(g, static_cast<int>(k));
    if (d > 0) len += d;
  }
  return len;
}

ShrunkenStatus shrunken_status(const Group& g, const AffElt& x) {
  for (size_t k = 0; k < g.roots().size(); ++k)
    if (offset(g, x, static_cast<int>(k)) == off1(g, static_cast<int>(k)))
      return ShrunkenStatus::not_shrunken;
  QVec mu = g.dominant_rep(to_q(x.lambda)).first;
  if (g.is_dominant_regular(mu)) return ShrunkenStatus::regular_shrunken;
  return ShrunkenStatus::shrunken;
}

const char* to_string(ShrunkenStatus s) {
  switch (s) {
    case ShrunkenStatus::not_shrunken: return "not_shrunken";
    case ShrunkenStatus::shrunken: return "shrunken";
    case ShrunkenStatus::regular_shrunken: return "regular_shrunken";
  }
  return "?";
}

WeylElt eta(const Group& g, const AffElt& x) {
  const RootDatum& rd = g.datum();
  // x = v t^mu w with w minimal in W_mu w. Under the offset normalization
  // used here the base alcove sits in the antidominant chamber, so "t^mu w
  // maps the base alcove to the dominant chamber" pins mu to the
  // antidominant orbit representative.
  QVec mu = to_q(x.lambda);
  WeylElt v0 = weyl_identity(rd.ambient_rank());
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : g.simple_set()) {
      if (dotq(rd.simple_roots()[i], mu) > 0) {
        mu = rd.simple_reflection(i).act(mu);
        v0 = weyl_mul(rd.simple_reflection(i), v0);
        moved = true;
        break;
      }
    }
  }
  std::vector<int> jmu;
  for (int i : g.simple_set())
    if (dotq(rd.simple_roots()[i], mu) == 0) jmu.push_back(i);
  WeylElt w = weyl_mul(v0, x.v);
  moved = true;
  while (moved) {
    moved = false;
    for (int i : jmu) {
      int idx = g.root_index(w.inv_act_char(rd.simple_roots()[i]));
      if (idx >= 0 && !g.roots()[idx].positive) {
        w = weyl_mul(rd.simple_reflection(i), w);
        moved = true;
        break;
      }
    }
  }
  WeylElt v = weyl_mul(x.v, weyl_inverse(w));
  // delta^{-1}(w) v
  WeylElt dinvw = {matmul(matmul(transpose(rd.delta_chr()), w.coch),
                          rd.delta_coch()),
                   matmul(matmul(transpose(rd.delta_coch()), w.chr),
                          rd.delta_chr())};
  return weyl_mul(dinvw, v);
}

Pi1Element kappa(const Group& g, const AffElt& x) {
  return g.kappa_of_lambda(x.lambda);
}

IVec omega_component(const Group& g, const AffElt& x) {
  return g.omega_component(x.lambda);
}

bool bruhat_leq(const Group& g, const AffElt& x, const AffElt& y) {
  if (omega_component(g, x) != omega_component(g, y)) return false;
  AffElt a = x, b = y;
  Int la = length(g, a), lb = length(g, b);
  while (true) {
    if (la > lb) return false;
    if (a == b) return true;
    if (lb == 0) return false;
    // left descent of b
    const auto& gens = g.affine_gens();
    int pick = -1;
    AffElt sb;
    for (size_t k = 0; k < gens.size(); ++k) {
      AffElt cand = aff_mul(gens[k], b);
      if (length(g, cand) < lb) {
        pick = static_cast<int>(k);
        sb = cand;
        break;
      }
    }
    if (pick < 0) return false;  // cannot happen for lb > 0
    AffElt sa = aff_mul(gens[pick], a);
    Int lsa = length(g, sa);
    if (lsa < la) {
      a = sa;
      la = lsa;
    }
    b = sb;
    lb -= 1;
  }
}

std::pair<std::vector<int>, AffElt> reduced_word(const Group& g,
                                                 const AffElt& x) {
  std::vector<int> w;
  AffElt cur = x;
  Int l = length(g, cur);
  while (l > 0) {
    bool found = false;
    const auto& gens = g.affine_gens();
    for (size_t k = 0; k < gens.size(); ++k) {
      AffElt cand = aff_mul(gens[k], cur);
      Int lc = length(g, cand);
      if (lc < l) {
        w.push_back(static_cast<int>(k));
        cur = cand;
        l = lc;
        found = true;
        break;
      }
    }
    if (!found)
      throw InvalidDatum("no descent found; element not in this level");
  }
  // x = gens[w0] * gens[w1] * ... * omega
  return {w, cur};
}

PlateauResult plateau_search(const Group& g, const AffElt& x, size_t budget) {
  const RootDatum& rd = g.datum();
  Int l = length(g, x);
  std::unordered_set<IVec, IVecHash> visited;
  std::deque<AffElt> queue;
  visited.insert(plateau_key(g, x));
  queue.push_back(x);
  size_t nodes = 0;
  while (!queue.empty()) {
    AffElt y = queue.front();
    queue.pop_front();
    if (++nodes > budget)
      throw SearchBudgetExceeded("plateau search exceeded node budget");
    const auto& gens = g.affine_gens();
    for (size_t k = 0; k < gens.size(); ++k) {
      AffElt z = aff_mul(aff_mul(gens[k], y), rd.delta_of(gens[k]));
      Int lz = length(g, z);
      if (lz < l) {
        PlateauResult res;
        res.minimal = false;
        res.elt = y;
        res.gen = static_cast<int>(k);
        return res;
      }
      if (lz == l && visited.insert(plateau_key(g, z)).second)
        queue.push_back(z);
    }
  }
  PlateauResult res;
  res.minimal = true;
  return res;
}

std::pair<bool, std::optional<AffElt>> min_length_in_class(const Group& g,
                                                           const AffElt& x,
                                                           size_t budget) {
  PlateauResult pr = plateau_search(g, x, budget);
  if (pr.minimal) return {true, std::nullopt};
  const auto& s = g.affine_gens()[pr.gen];
  return {false, aff_mul(aff_mul(s, pr.elt), g.datum().delta_of(s))};
}

AffElt min_length_rep(const Group& g, const AffElt& x, size_t budget) {
  AffElt cur = x;
  while (true) {
    auto [minimal, witness] = min_length_in_class(g, cur, budget);
    if (minimal) return cur;
    cur = *witness;
  }
}

AffElt omega_rep(const Group& g, const IVec& lambda) {
  AffElt cur = aff_translation(g.datum(), lambda);
  Int l = length(g, cur);
  while (l > 0) {
    bool found = false;
    for (const auto& s : g.affine_gens()) {
      AffElt cand = aff_mul(s, cur);
      Int lc = length(g, cand);
      if (lc < l) {
        cur = cand;
        l = lc;
        found = true;
        break;
      }
    }
    if (!found) throw InvalidDatum("omega descent stalled");
  }
  return cur;
}

std::string print_weyl(const RootDatum& rd, const WeylElt& v) {
  if (v.is_identity()) return "1";
  std::vector<int> w = rd.full_level().word(v);
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += "*";
    out += "s" + std::to_string(w[k] + 1);
  }
  return out;
}

std::string print_elt(const RootDatum& rd, const AffElt& x) {
  bool lambda_zero = true;
  for (Int c : x.lambda)
    if (c) lambda_zero = false;
  std::string out;
  if (!lambda_zero) {
    out = "t[";
    for (size_t i = 0; i < x.lambda.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(x.lambda[i]);
    }
    out += "]";
  }
  if (!x.v.is_identity()) {
    if (!out.empty()) out += "*";
    out += print_weyl(rd, x.v);
  }
  if (out.empty()) out = "1";
  return out;
}

}  // namespace strata
