#include "strata/rational.hpp"

#include <stdexcept>

namespace strata {

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

LinSolveResult solve_columns(const std::vector<QVec>& cols, const QVec& rhs) {
  size_t n = rhs.size(), m = cols.size();
  // augmented matrix [cols | rhs], n rows, m+1 columns
  std::vector<QVec> a(n, QVec(m + 1, 0));
  for (size_t j = 0; j < m; ++j)
    for (size_t i = 0; i < n; ++i) a[i][j] = cols[j][i];
  for (size_t i = 0; i < n; ++i) a[i][m] = rhs[i];

  std::vector<int> pivot_col_of_row;
  size_t row = 0;
  for (size_t col = 0; col < m && row < n; ++col) {
    size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    Rat inv = 1 / a[row][col];
    for (size_t j = col; j <= m; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = col; j <= m; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++row;
  }
  // inconsistent?
  for (size_t i = row; i < n; ++i)
    if (a[i][m] != 0) return {};
  if (pivot_col_of_row.size() < m) return {};  // dependent columns: reject
  LinSolveResult res;
  res.ok = true;
  res.x.assign(m, 0);
  for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
    res.x[pivot_col_of_row[i]] = a[i][m];
  return res;
}

int rank_q(std::vector<QVec> rows) {
  if (rows.empty()) return 0;
  size_t n = rows.size(), m = rows[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < m && row < n; ++col) {
    size_t p = row;
    while (p < n && rows[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(rows[p], rows[row]);
    for (size_t i = row + 1; i < n; ++i) {
      if (rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[row][col];
      for (size_t j = col; j < m; ++j) rows[i][j] -= f * rows[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace strata
