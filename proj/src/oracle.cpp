#include "strata/oracle.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

#include "strata/errors.hpp"

namespace strata {

IVec Oracle::memo_key(const Group& g, const AffElt& x) const {
  // keyed up to the central drift: drifted elements share their reduction
  IVec k;
  for (int i : g.simple_set()) k.push_back(i);
  k.push_back(-1);
  IVec xk = plateau_key(g, x);
  k.insert(k.end(), xk.begin(), xk.end());
  return k;
}

const ReductionResult& Oracle::reduce(const Group& g, const AffElt& x) {
  IVec key = memo_key(g, x);
  auto it = memo_.find(key);
  if (it != memo_.end()) return *it->second;

  const RootDatum& rd = g.datum();
  Int l = length(g, x);

  // walk the length-preserving plateau, collecting it for shared memoization
  std::unordered_set<IVec, IVecHash> visited;
  std::vector<AffElt> plateau;
  std::deque<AffElt> queue;
  visited.insert(plateau_key(g, x));
  queue.push_back(x);
  plateau.push_back(x);
  bool found_drop = false;
  AffElt drop_y;
  int drop_gen = -1;
  size_t nodes = 0;
  std::mt19937_64 rng(replay_seed_ ? *replay_seed_ + IVecHash{}(key) : 0);
  while (!queue.empty() && !found_drop) {
    AffElt y = queue.front();
    queue.pop_front();
    if (++nodes > budget_)
      throw SearchBudgetExceeded("reduction plateau exceeded node budget");
    const auto& gens = g.affine_gens();
    std::vector<size_t> order(gens.size());
    for (size_t k = 0; k < gens.size(); ++k) order[k] = k;
    if (replay_seed_) std::shuffle(order.begin(), order.end(), rng);
    for (size_t k : order) {
      AffElt z = aff_mul(aff_mul(gens[k], y), rd.delta_of(gens[k]));
      Int lz = length(g, z);
      if (lz < l) {
        found_drop = true;
        drop_y = y;
        drop_gen = static_cast<int>(k);
        break;
      }
      if (lz == l && visited.insert(plateau_key(g, z)).second) {
        queue.push_back(z);
        plateau.push_back(z);
      }
    }
  }

  std::shared_ptr<ReductionResult> result;
  if (!found_drop) {
    // base case: x is of minimal length in its class
    SigmaClass cls = class_of(g, x);
    Rat pair = dotq(g.two_rho(), cls.nu);
    if (pair.get_den() != 1)
      throw InvalidDatum("non-integral <2rho,nu> at a base case");
    Int dim = l - pair.get_num().get_si();
    if (dim < 0) throw InvalidDatum("negative base-case dimension");
    result = std::make_shared<ReductionResult>();
    result->emplace(cls, dim);
  } else {
    const auto& s = g.affine_gens()[drop_gen];
    AffElt child1 = aff_mul(aff_mul(s, drop_y), rd.delta_of(s));
    AffElt child2 = aff_mul(s, drop_y);
    const ReductionResult& r1 = reduce(g, child1);
    const ReductionResult& r2 = reduce(g, child2);
    result = std::make_shared<ReductionResult>();
    for (const auto& [cls, dim] : r1) {
      auto [pos, inserted] = result->emplace(cls, dim + 1);
      if (!inserted) pos->second = std::max(pos->second, dim + 1);
    }
    for (const auto& [cls, dim] : r2) {
      auto [pos, inserted] = result->emplace(cls, dim + 1);
      if (!inserted) pos->second = std::max(pos->second, dim + 1);
    }
  }

  std::shared_ptr<const ReductionResult> shared = result;
  for (const auto& y : plateau) memo_[memo_key(g, y)] = shared;
  auto it2 = memo_.find(key);
  return *it2->second;
}

std::optional<Int> Oracle::dim_adlv(const Group& g, const AffElt& x,
                                    const SigmaClass& b) {
  const ReductionResult& r = reduce(g, x);
  auto it = r.find(b);
  if (it == r.end()) return std::nullopt;
  return it->second;
}

StrataTable Oracle::strata_table(const Group& g, const AffElt& x) {
  StrataTable t;
  t.x = x;
  t.len = length(g, x);
  const ReductionResult& r = reduce(g, x);
  Pi1Element kx = kappa(g, x);
  for (const auto& [cls, dim] : r) {
    if (cls.kappa != kx)
      throw InvalidDatum("oracle produced a class with wrong kappa");
    StrataRow row;
    row.cls = cls;
    row.dim = dim;
    row.vdim = virtual_dimension(g, x, cls);
    {
      Rat two_d = row.vdim * 2;
      if (two_d.get_den() != 1)
        throw InvalidDatum("virtual dimension is not half-integral");
      if (row.vdim.get_den() != 1)
        throw InvalidDatum("virtual dimension not integral at matching kappa");
    }
    row.delta = row.vdim - Rat(dim);
    Rat pair = dotq(g.two_rho(), cls.nu);
    if (pair.get_den() != 1)
      throw InvalidDatum("non-integral <2rho,nu> in strata table");
    row.codim = t.len - pair.get_num().get_si() - dim;
    if (row.codim < 0) throw InvalidDatum("negative codimension");
    t.rows.push_back(row);
  }
  std::sort(t.rows.begin(), t.rows.end(),
            [&](const StrataRow& a, const StrataRow& b) {
              Rat ha = dotq(g.two_rho(), a.cls.nu);
              Rat hb = dotq(g.two_rho(), b.cls.nu);
              int c = cmp(ha, hb);
              if (c != 0) return c < 0;
              return cmp_qvec(a.cls.nu, b.cls.nu) < 0;
            });

  // unique minimum / maximum
  auto is_min = [&](const StrataRow& row) {
    for (const auto& other : t.rows)
      if (other.cls != row.cls && !leq(g, row.cls, other.cls)) return false;
    return true;
  };
  int n_min = 0;
  for (const auto& row : t.rows)
    if (is_min(row)) ++n_min;
  t.has_unique_min = (n_min == 1) && is_min(t.rows.front());

  const StrataRow& top = t.rows.back();
  bool top_is_max = true;
  for (const auto& row : t.rows)
    if (!leq(g, row.cls, top.cls)) top_is_max = false;
  t.cordial_candidate = top_is_max && top.delta == 0;

  t.saturated = true;
  if (top_is_max) {
    const SigmaClass& mx = t.rows.front().cls;
    for (const auto& seg : enumerate_segment(g, kx, top.cls.nu)) {
      if (!leq(g, mx, seg)) continue;
      if (r.find(seg) == r.end()) t.saturated = false;
    }
  }
  return t;
}

std::vector<AffElt> Oracle::omega_window(const Group& g) {
  const RootDatum& rd = g.datum();
  // One length-zero representative per class of X_* / (Q_J^vee + C), C the
  // central sublattice: twisting by a central pure translation relabels
  // everything, so this finite quotient indexes all distinct behavior.
  int xr = rd.cochar_rank();
  std::vector<IVec> rels;
  for (int i : g.simple_set())
    rels.push_back(*rd.cochar_coords(rd.simple_coroots()[i]));
  for (const auto& c : g.central_basis())
    rels.push_back(*rd.cochar_coords(c));
  LatticeQuotient quot(xr, rels);
  size_t total = 1;
  for (Int d : quot.invariant_factors()) {
    if (d == 0)
      throw InvalidDatum("omega window quotient is not finite");
    total *= static_cast<size_t>(d);
  }

  std::vector<AffElt> window;
  std::unordered_set<IVec, IVecHash> seen_class;
  std::deque<IVec> frontier;
  IVec zero(rd.ambient_rank(), 0);
  frontier.push_back(zero);
  seen_class.insert(quot.reduce(*rd.cochar_coords(zero)));
  window.push_back(omega_rep(g, zero));
  while (!frontier.empty() && seen_class.size() < total) {
    IVec lam = frontier.front();
    frontier.pop_front();
    for (const auto& b : rd.cochar_basis()) {
      for (int sgn : {1, -1}) {
        IVec nxt = sgn > 0 ? add(lam, b) : sub(lam, b);
        IVec cls = quot.reduce(*rd.cochar_coords(nxt));
        if (seen_class.insert(cls).second) {
          window.push_back(omega_rep(g, nxt));
          frontier.push_back(nxt);
        }
      }
    }
  }
  std::sort(window.begin(), window.end(),
            [](const AffElt& a, const AffElt& b) {
              return aff_key(a) < aff_key(b);
            });
  return window;
}

std::vector<AffElt> Oracle::ball(const Group& g, Int max_len) {
  std::vector<AffElt> out;
  std::unordered_set<IVec, IVecHash> seen;
  std::deque<AffElt> frontier;
  for (const auto& tau : omega_window(g)) {
    if (seen.insert(aff_key(tau)).second) {
      frontier.push_back(tau);
      out.push_back(tau);
    }
  }
  while (!frontier.empty()) {
    AffElt x = frontier.front();
    frontier.pop_front();
    Int lx = length(g, x);
    if (lx >= max_len) continue;
    for (const auto& s : g.affine_gens()) {
      AffElt nxt = aff_mul(x, s);
      if (length(g, nxt) != lx + 1) continue;
      if (seen.insert(aff_key(nxt)).second) {
        frontier.push_back(nxt);
        out.push_back(nxt);
      }
    }
  }
  return out;
}

std::vector<AffElt> Oracle::gap_search(const Group& g, Int max_len) {
  std::vector<AffElt> witnesses;
  for (const auto& x : ball(g, max_len)) {
    StrataTable t = strata_table(g, x);
    if (!t.saturated) witnesses.push_back(x);
  }
  return witnesses;
}

}  // namespace strata
