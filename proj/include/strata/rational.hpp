#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace strata {

// Exact arithmetic throughout: lattice data in 64-bit integers, everything
// rational (Newton points, cone coefficients, virtual dimensions) in mpq.
using Int = long;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using IMat = std::vector<IVec>;  // row-major

inline Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dotq(const IVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline Rat dotq(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec to_q(const IVec& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = v[i];
  return q;
}

inline IVec add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec neg(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline QVec addq(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec subq(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec scaleq(const Rat& c, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

// matrix * column vector
inline IVec apply_mat(const IMat& m, const IVec& v) {
  IVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline QVec apply_mat(const IMat& m, const QVec& v) {
  QVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += Rat(m[i][j]) * v[j];
  return r;
}

inline IMat matmul(const IMat& a, const IMat& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  IMat r(n, IVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

inline IMat identity_mat(size_t n) {
  IMat r(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

inline IMat transpose(const IMat& a) {
  IMat r(a[0].size(), IVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

// Lexicographic compare for map keys.
inline int cmp_qvec(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// Solve A x = b exactly over Q, A given as columns. Returns empty optional
// encoded as a bool flag: second member false when the system is
// inconsistent. When the columns are linearly independent the solution is
// unique; dependent columns are rejected.
struct LinSolveResult {
  bool ok = false;
  QVec x;
};
LinSolveResult solve_columns(const std::vector<QVec>& cols, const QVec& rhs);

// Rank over Q of a set of rational vectors.
int rank_q(std::vector<QVec> rows);

}  // namespace strata
