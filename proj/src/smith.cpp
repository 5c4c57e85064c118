#include "strata/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace strata {

namespace {

void swap_rows(IMat& a, IMat& u, size_t i, size_t j) {
  std::swap(a[i], a[j]);
  std::swap(u[i], u[j]);
}

void swap_cols(IMat& a, IMat& v, size_t i, size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
  for (auto& row : v) std::swap(row[i], row[j]);
}

// row_i -= f * row_j
void add_row(IMat& a, IMat& u, size_t i, size_t j, Int f) {
  for (size_t k = 0; k < a[i].size(); ++k) a[i][k] -= f * a[j][k];
  for (size_t k = 0; k < u[i].size(); ++k) u[i][k] -= f * u[j][k];
}

void add_col(IMat& a, IMat& v, size_t i, size_t j, Int f) {
  for (auto& row : a) row[i] -= f * row[j];
  for (auto& row : v) row[i] -= f * row[j];
}

void negate_row(IMat& a, IMat& u, size_t i) {
  for (auto& x : a[i]) x = -x;
  for (auto& x : u[i]) x = -x;
}

}  // namespace

SmithResult smith_normal_form(IMat a) {
  size_t r = a.size();
  size_t c = r ? a[0].size() : 0;
  SmithResult res;
  res.u = identity_mat(r);
  res.v = identity_mat(c);
  if (r == 0 || c == 0) return res;

  size_t t = 0;
  size_t steps = std::min(r, c);
  while (t < steps) {
    // find pivot: smallest nonzero |entry| in the remaining block
    size_t pi = t, pj = t;
    Int best = 0;
    for (size_t i = t; i < r; ++i)
      for (size_t j = t; j < c; ++j)
        if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < best)) {
          best = std::abs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;  // block is zero
    swap_rows(a, res.u, t, pi);
    swap_cols(a, res.v, t, pj);
    if (a[t][t] < 0) negate_row(a, res.u, t);

    bool clean = true;
    for (size_t i = t + 1; i < r; ++i) {
      if (a[i][t] == 0) continue;
      Int f = a[i][t] / a[t][t];
      add_row(a, res.u, i, t, f);
      if (a[i][t] != 0) clean = false;
    }
    for (size_t j = t + 1; j < c; ++j) {
      if (a[t][j] == 0) continue;
      Int f = a[t][j] / a[t][t];
      add_col(a, res.v, j, t, f);
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // remainders left, pick a new pivot

    // enforce divisibility: a[t][t] must divide every later entry
    bool fixed = false;
    for (size_t i = t + 1; i < r && !fixed; ++i)
      for (size_t j = t + 1; j < c && !fixed; ++j)
        if (a[i][j] % a[t][t] != 0) {
          // fold row i into row t and restart this step
          add_row(a, res.u, t, i, -1);
          fixed = true;
        }
    if (fixed) continue;
    ++t;
  }

  res.diag.assign(steps, 0);
  for (size_t i = 0; i < steps; ++i) res.diag[i] = a[i][i];
  return res;
}

LatticeQuotient::LatticeQuotient(int rank, const std::vector<IVec>& relations)
    : rank_(rank) {
  size_t m = relations.size();
  IMat rel(rank, IVec(std::max<size_t>(m, 1), 0));
  for (size_t j = 0; j < m; ++j) {
    if (static_cast<int>(relations[j].size()) != rank)
      throw std::invalid_argument("relation rank mismatch");
    for (int i = 0; i < rank; ++i) rel[i][j] = relations[j][i];
  }
  SmithResult s = smith_normal_form(rel);
  u_ = s.u;
  moduli_.assign(rank, 0);
  for (size_t i = 0; i < s.diag.size() && i < static_cast<size_t>(rank); ++i)
    moduli_[i] = s.diag[i];
  // sign-normalize the free-coordinate rows of U
  for (int i = 0; i < rank; ++i) {
    if (moduli_[i] != 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (u_[i][j] == 0) continue;
      if (u_[i][j] < 0)
        for (auto& x : u_[i]) x = -x;
      break;
    }
  }
  // canonical factor list: torsion (>1) first in divisibility order, then 0s
  for (Int d : moduli_)
    if (d > 1) factors_.push_back(d);
  for (Int d : moduli_)
    if (d == 0) factors_.push_back(0);
}

IVec LatticeQuotient::reduce(const IVec& v) const {
  if (static_cast<int>(v.size()) != rank_)
    throw std::invalid_argument("LatticeQuotient::reduce rank mismatch");
  IVec w = apply_mat(u_, v);
  IVec out;
  out.reserve(factors_.size());
  for (int i = 0; i < rank_; ++i) {
    Int d = moduli_[i];
    if (d == 1) continue;
    if (d == 0) continue;
    Int x = w[i] % d;
    if (x < 0) x += d;
    out.push_back(x);
  }
  for (int i = 0; i < rank_; ++i)
    if (moduli_[i] == 0) out.push_back(w[i]);
  return out;
}

}  // namespace strata
