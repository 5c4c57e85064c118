#include "strata/lang.hpp"

#include <algorithm>
#include <stdexcept>

#include "strata/errors.hpp"

namespace strata {

namespace {

// polynomial helpers over F_p, little-endian coefficient vectors
std::vector<int> poly_mul_mod_p(const std::vector<int>& a,
                                const std::vector<int>& b, int p) {
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

// reduce a modulo a monic modulus
std::vector<int> poly_reduce(std::vector<int> a, const std::vector<int>& mod,
                             int p) {
  int k = static_cast<int>(mod.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= k; --d) {
    int c = a[d];
    if (c == 0) continue;
    for (int i = 0; i <= k; ++i) {
      int idx = d - k + i;
      a[idx] = ((a[idx] - c * mod[i]) % p + p) % p;
    }
  }
  a.resize(k);
  return a;
}

bool poly_is_zero(const std::vector<int>& a) {
  for (int c : a)
    if (c) return false;
  return true;
}

}  // namespace

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
  if (p < 2 || k < 1) throw std::invalid_argument("bad field parameters");
  // primality of p (small fields only)
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("p is not prime");
  size_ = 1;
  for (int i = 0; i < k; ++i) size_ *= p;

  if (k == 1) {
    modulus_ = {0, 1};  // x
    return;
  }
  // find a monic irreducible of degree k by trial division
  long count = size_;  // p^k monic candidates
  for (long idx = 0; idx < count; ++idx) {
    std::vector<int> cand(k + 1, 0);
    long r = idx;
    for (int i = 0; i < k; ++i) {
      cand[i] = static_cast<int>(r % p);
      r /= p;
    }
    cand[k] = 1;
    // divisibility by any monic polynomial of degree 1..k/2
    bool irreducible = cand[0] != 0;  // no root at 0
    for (int deg = 1; irreducible && deg <= k / 2; ++deg) {
      long dcount = 1;
      for (int i = 0; i < deg; ++i) dcount *= p;
      for (long didx = 0; didx < dcount && irreducible; ++didx) {
        std::vector<int> div(deg + 1, 0);
        long rr = didx;
        for (int i = 0; i < deg; ++i) {
          div[i] = static_cast<int>(rr % p);
          rr /= p;
        }
        div[deg] = 1;
        // remainder of cand by div
        std::vector<int> rem = cand;
        for (int d = static_cast<int>(rem.size()) - 1; d >= deg; --d) {
          int c = rem[d];
          if (c == 0) continue;
          for (int i = 0; i <= deg; ++i) {
            int j = d - deg + i;
            rem[j] = ((rem[j] - c * div[i]) % p + p) % p;
          }
        }
        rem.resize(deg);
        if (poly_is_zero(rem)) irreducible = false;
      }
    }
    if (irreducible) {
      modulus_ = cand;
      return;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

FiniteField::Elt FiniteField::one() const {
  Elt e(k_, 0);
  e[0] = 1;
  return e;
}

FiniteField::Elt FiniteField::from_int(long n) const {
  Elt e(k_, 0);
  n %= size_;
  if (n < 0) n += size_;
  for (int i = 0; i < k_; ++i) {
    e[i] = static_cast<int>(n % p_);
    n /= p_;
  }
  return e;
}

long FiniteField::to_index(const Elt& a) const {
  long n = 0;
  for (int i = k_ - 1; i >= 0; --i) n = n * p_ + a[i];
  return n;
}

FiniteField::Elt FiniteField::add(const Elt& a, const Elt& b) const {
  Elt c(k_);
  for (int i = 0; i < k_; ++i) c[i] = (a[i] + b[i]) % p_;
  return c;
}

FiniteField::Elt FiniteField::sub(const Elt& a, const Elt& b) const {
  Elt c(k_);
  for (int i = 0; i < k_; ++i) c[i] = ((a[i] - b[i]) % p_ + p_) % p_;
  return c;
}

FiniteField::Elt FiniteField::neg(const Elt& a) const {
  Elt c(k_);
  for (int i = 0; i < k_; ++i) c[i] = (p_ - a[i]) % p_;
  return c;
}

FiniteField::Elt FiniteField::mul(const Elt& a, const Elt& b) const {
  if (k_ == 1) return {(a[0] * b[0]) % p_};
  return poly_reduce(poly_mul_mod_p(a, b, p_), modulus_, p_);
}

FiniteField::Elt FiniteField::pow(Elt a, long e) const {
  Elt r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool FiniteField::is_zero(const Elt& a) const {
  for (int c : a)
    if (c) return false;
  return true;
}

FiniteField::Elt FiniteField::frobenius(const Elt& a, long q) const {
  // q must be a power of p
  long r = q;
  while (r > 1) {
    if (r % p_ != 0)
      throw std::invalid_argument("q is not a power of the characteristic");
    r /= p_;
  }
  return pow(a, q);
}

TruncatedSeries TruncatedSeries::zero(const FiniteField& f, int n) {
  TruncatedSeries s;
  s.field = &f;
  s.prec = n;
  s.coeffs.assign(n, f.zero());
  return s;
}

TruncatedSeries TruncatedSeries::constant(const FiniteField& f, int n,
                                          const FiniteField::Elt& c) {
  TruncatedSeries s = zero(f, n);
  if (n > 0) s.coeffs[0] = c;
  return s;
}

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries c = a;
  for (int i = 0; i < a.prec; ++i)
    c.coeffs[i] = a.field->add(a.coeffs[i], b.coeffs[i]);
  return c;
}

TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries c = a;
  for (int i = 0; i < a.prec; ++i)
    c.coeffs[i] = a.field->sub(a.coeffs[i], b.coeffs[i]);
  return c;
}

TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries c = TruncatedSeries::zero(*a.field, a.prec);
  for (int i = 0; i < a.prec; ++i)
    for (int j = 0; i + j < a.prec; ++j)
      c.coeffs[i + j] = a.field->add(c.coeffs[i + j],
                                     a.field->mul(a.coeffs[i], b.coeffs[j]));
  return c;
}

TruncatedSeries ts_frobenius(const TruncatedSeries& a, long q) {
  TruncatedSeries c = a;
  for (int i = 0; i < a.prec; ++i)
    c.coeffs[i] = a.field->frobenius(a.coeffs[i], q);
  return c;
}

bool ts_is_zero(const TruncatedSeries& a) {
  for (const auto& c : a.coeffs)
    if (!a.field->is_zero(c)) return false;
  return true;
}

TruncatedSeries ts_from_string(const FiniteField& f, int prec,
                               const std::string& text) {
  TruncatedSeries s = TruncatedSeries::zero(f, prec);
  size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  };
  auto parse_int = [&]() -> long {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (start == pos) throw std::invalid_argument("bad number in series");
    return std::stol(text.substr(start, pos - start));
  };

  while (true) {
    skip_ws();
    // term := coeff | coeff '*' tpow | tpow
    FiniteField::Elt c = f.one();
    bool have_coeff = false;
    if (pos < text.size() && text[pos] == '[') {
      ++pos;
      FiniteField::Elt e(f.k(), 0);
      for (int i = 0; i < f.k(); ++i) {
        skip_ws();
        long v = parse_int();
        e[i] = static_cast<int>(((v % f.p()) + f.p()) % f.p());
        skip_ws();
        if (i + 1 < f.k()) {
          if (pos >= text.size() || text[pos] != ',')
            throw std::invalid_argument("bad coefficient vector");
          ++pos;
        }
      }
      skip_ws();
      if (pos >= text.size() || text[pos] != ']')
        throw std::invalid_argument("unterminated coefficient vector");
      ++pos;
      c = e;
      have_coeff = true;
    } else if (pos < text.size() &&
               (std::isdigit((unsigned char)text[pos]) || text[pos] == '-')) {
      long v = parse_int();
      c = f.from_int(((v % f.p()) + f.p()) % f.p());
      have_coeff = true;
    }
    int deg = 0;
    skip_ws();
    if (have_coeff && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
    }
    if (pos < text.size() && text[pos] == 't') {
      ++pos;
      deg = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        deg = static_cast<int>(parse_int());
      }
    }
    if (!have_coeff && deg == 0)
      throw std::invalid_argument("empty term in series");
    if (deg >= 0 && deg < prec) s.coeffs[deg] = f.add(s.coeffs[deg], c);
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '+') throw std::invalid_argument("expected + in series");
    ++pos;
  }
  return s;
}

std::string ts_to_string(const TruncatedSeries& a) {
  const FiniteField& f = *a.field;
  std::string out;
  for (int d = 0; d < a.prec; ++d) {
    if (f.is_zero(a.coeffs[d])) continue;
    std::string coeff;
    if (f.k() == 1) {
      coeff = std::to_string(a.coeffs[d][0]);
    } else {
      coeff = "[";
      for (int i = 0; i < f.k(); ++i) {
        if (i) coeff += ",";
        coeff += std::to_string(a.coeffs[d][i]);
      }
      coeff += "]";
    }
    std::string term = coeff;
    if (d == 1) term += "*t";
    if (d > 1) term += "*t^" + std::to_string(d);
    if (!out.empty()) out += " + ";
    out += term;
  }
  if (out.empty()) out = "0";
  return out;
}

namespace {

// Solve x - A sigma(x) = r coefficientwise in the residue field: an
// F_p-linear system in the kn coordinates.
std::vector<FiniteField::Elt> residue_lang_solve(
    const FiniteField& f, const std::vector<std::vector<FiniteField::Elt>>& a,
    const std::vector<FiniteField::Elt>& r, long q) {
  int n = static_cast<int>(r.size());
  int k = f.k();
  int p = f.p();
  int dim = n * k;
  // columns of the F_p-linear map x -> x - A sigma(x)
  std::vector<std::vector<int>> mat(dim, std::vector<int>(dim + 1, 0));
  for (int col = 0; col < dim; ++col) {
    std::vector<FiniteField::Elt> basis(n, f.zero());
    basis[col / k][col % k] = 1;
    // image vector
    for (int i = 0; i < n; ++i) {
      FiniteField::Elt acc = basis[i];
      for (int j = 0; j < n; ++j)
        acc = f.sub(acc, f.mul(a[i][j], f.frobenius(basis[j], q)));
      for (int t = 0; t < k; ++t) mat[i * k + t][col] = acc[t];
    }
  }
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) mat[i * k + t][dim] = r[i][t];

  // Gaussian elimination over F_p
  std::vector<int> pivot_col(dim, -1);
  int rank = 0;
  for (int col = 0; col < dim && rank < dim; ++col) {
    int pr = -1;
    for (int i = rank; i < dim; ++i)
      if (mat[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(mat[pr], mat[rank]);
    // normalize pivot to 1 (invert mod p)
    int inv = 1;
    for (int e = 1; e < p - 1; ++e) inv = (inv * mat[rank][col]) % p;
    if (p == 2) inv = 1;
    for (int j = col; j <= dim; ++j) mat[rank][j] = (mat[rank][j] * inv) % p;
    for (int i = 0; i < dim; ++i) {
      if (i == rank || mat[i][col] == 0) continue;
      int fct = mat[i][col];
      for (int j = col; j <= dim; ++j)
        mat[i][j] = ((mat[i][j] - fct * mat[rank][j]) % p + p) % p;
    }
    pivot_col[rank] = col;
    ++rank;
  }
  for (int i = rank; i < dim; ++i)
    if (mat[i][dim] != 0)
      throw ResidueFieldTooSmall(
          "Lang equation has no solution over the configured residue field");
  std::vector<int> x(dim, 0);
  for (int i = 0; i < rank; ++i) x[pivot_col[i]] = mat[i][dim];
  std::vector<FiniteField::Elt> out(n, f.zero());
  for (int c = 0; c < dim; ++c) out[c / k][c % k] = x[c];
  return out;
}

}  // namespace

SeriesVec solve_lang(const SeriesMat& m, const SeriesVec& v, int prec,
                     long q) {
  if (prec < 1) throw std::invalid_argument("precision must be >= 1");
  const FiniteField& f = *v[0].field;
  int n = static_cast<int>(v.size());
  SeriesVec w(n, TruncatedSeries::zero(f, prec));
  // lift degree by degree: at step d the residual r = v - w + M sigma(w)
  // vanishes below t^d and the degree-d coefficient is corrected by a
  // residue-field Lang solve
  for (int d = 0; d < prec; ++d) {
    SeriesVec r = v;
    for (int i = 0; i < n; ++i) {
      TruncatedSeries acc = ts_sub(r[i], w[i]);
      for (int j = 0; j < n; ++j)
        acc = ts_add(acc, ts_mul(m[i][j], ts_frobenius(w[j], q)));
      r[i] = acc;
    }
    std::vector<FiniteField::Elt> rd(n);
    bool all_zero = true;
    for (int i = 0; i < n; ++i) {
      rd[i] = r[i].coeffs[d];
      if (!f.is_zero(rd[i])) all_zero = false;
    }
    if (all_zero) continue;
    std::vector<std::vector<FiniteField::Elt>> m0(
        n, std::vector<FiniteField::Elt>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m0[i][j] = m[i][j].coeffs[0];
    auto corr = residue_lang_solve(f, m0, rd, q);
    for (int i = 0; i < n; ++i)
      w[i].coeffs[d] = f.add(w[i].coeffs[d], corr[i]);
  }
  SeriesVec res = lang_residual(m, v, w, q);
  for (const auto& s : res)
    if (!ts_is_zero(s))
      throw ResidueFieldTooSmall("lifting failed to converge");
  return w;
}

SeriesVec lang_residual(const SeriesMat& m, const SeriesVec& v,
                        const SeriesVec& w, long q) {
  int n = static_cast<int>(v.size());
  SeriesVec r(n, TruncatedSeries::zero(*v[0].field, v[0].prec));
  for (int i = 0; i < n; ++i) {
    TruncatedSeries acc = w[i];
    for (int j = 0; j < n; ++j)
      acc = ts_sub(acc, ts_mul(m[i][j], ts_frobenius(w[j], q)));
    r[i] = ts_sub(acc, v[i]);
  }
  return r;
}

}  // namespace strata
