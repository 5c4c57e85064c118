#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace strata {

// F_{p^k} in a polynomial basis modulo a fixed irreducible polynomial. An
// element is its coefficient vector over F_p, packed little-endian.
class FiniteField {
 public:
  FiniteField(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  long size() const { return size_; }

  using Elt = std::vector<int>;  // length k, entries in [0, p)

  Elt zero() const { return Elt(k_, 0); }
  Elt one() const;
  Elt from_int(long n) const;  // n-th element in lexicographic order
  long to_index(const Elt& a) const;

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt pow(Elt a, long e) const;
  bool is_zero(const Elt& a) const;

  // Frobenius power x -> x^q; q must be a power of p.
  Elt frobenius(const Elt& a, long q) const;

  const std::vector<int>& modulus() const { return modulus_; }

 private:
  int p_, k_;
  long size_;
  std::vector<int> modulus_;  // monic, length k+1
};

// Element of F_{p^k}[t] / t^N. sigma acts coefficientwise by x -> x^q and
// fixes t.
struct TruncatedSeries {
  const FiniteField* field = nullptr;
  int prec = 0;
  std::vector<FiniteField::Elt> coeffs;  // length prec

  static TruncatedSeries zero(const FiniteField& f, int n);
  static TruncatedSeries constant(const FiniteField& f, int n,
                                  const FiniteField::Elt& c);
};

TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ts_frobenius(const TruncatedSeries& a, long q);
bool ts_is_zero(const TruncatedSeries& a);

// "c0 + c1*t + c2*t^2"; for k > 1 coefficients are bracketed basis vectors
// like [1,0]. Round-trips with ts_to_string.
TruncatedSeries ts_from_string(const FiniteField& f, int prec,
                               const std::string& text);
std::string ts_to_string(const TruncatedSeries& a);

using SeriesVec = std::vector<TruncatedSeries>;
using SeriesMat = std::vector<SeriesVec>;

// Solve w - M sigma(w) = v in (F_{p^k}[t]/t^N)^n, lifting degree by degree
// from a residue-field solution. Throws ResidueFieldTooSmall when some
// degree step has no solution over the configured field (the statement
// assumes an algebraically closed residue field). When v = 0 mod t the
// returned w is 0 mod t.
SeriesVec solve_lang(const SeriesMat& m, const SeriesVec& v, int prec, long q);

// w - M sigma(w) - v
SeriesVec lang_residual(const SeriesMat& m, const SeriesVec& v,
                        const SeriesVec& w, long q);

}  // namespace strata
