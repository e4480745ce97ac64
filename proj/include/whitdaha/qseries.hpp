#pragma once

#include "whitdaha/latticepoly.hpp"

#include <map>

namespace whitdaha {

// Series in v up to an inclusive cutoff; each coefficient is a
// LatticePolynomial (rank 0 for scalar series) whose RatCoeff entries are
// v-free.  Exponents may be negative.
class TruncatedQSeries {
 public:
  TruncatedQSeries() = default;
  TruncatedQSeries(int rank, int cutoff) : rank_(rank), cutoff_(cutoff) {}

  static TruncatedQSeries one(int rank, int cutoff);
  static TruncatedQSeries zero(int rank, int cutoff) { return TruncatedQSeries(rank, cutoff); }
  // Expansion of an exact rational coefficient as a scalar v-series.
  static TruncatedQSeries from_ratcoeff(const RatCoeff& c, int rank, int cutoff);

  int rank() const { return rank_; }
  int cutoff() const { return cutoff_; }
  void set_cutoff(int c);
  const std::map<int, LatticePolynomial>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

  const LatticePolynomial* coeff(int e) const;
  void add(int e, const LatticePolynomial& p);
  void add_term(int e, const LatticePolynomial::Exp& x, const RatCoeff& c);

  TruncatedQSeries operator-() const;
  TruncatedQSeries operator+(const TruncatedQSeries&) const;
  TruncatedQSeries operator-(const TruncatedQSeries&) const;
  TruncatedQSeries operator*(const TruncatedQSeries&) const;
  TruncatedQSeries& operator+=(const TruncatedQSeries& o) { return *this = *this + o; }
  TruncatedQSeries& operator-=(const TruncatedQSeries& o) { return *this = *this - o; }
  TruncatedQSeries& operator*=(const TruncatedQSeries& o) { return *this = *this * o; }

  TruncatedQSeries scale(const RatCoeff& c) const;            // c must be v-free
  TruncatedQSeries mul_ratcoeff(const RatCoeff& c) const;     // expands c in v
  TruncatedQSeries shift_v(int e) const;                      // multiply by v^e
  TruncatedQSeries mul_poly(const LatticePolynomial& p) const;  // v-free coeffs
  // Multiply by (1 + c v^e X_x)^{sign} for sign in {+1,-1}; e > 0 required
  // when sign = -1 unless the geometric tail is truncated away.
  TruncatedQSeries mul_one_plus(int e, const LatticePolynomial::Exp& x, const RatCoeff& c,
                                int sign) const;
  // Inverse of a series whose lowest term is an invertible monomial-free unit.
  TruncatedQSeries inverse() const;

  // Coefficient-wise transform.
  TruncatedQSeries map(const std::function<LatticePolynomial(const LatticePolynomial&)>& fn) const;

  bool equal_to_order(const TruncatedQSeries& o, int order) const;
  // First v-exponent <= order where the two differ, if any.
  std::optional<int> first_mismatch(const TruncatedQSeries& o, int order) const;

  std::string str(const VarNames& names) const;

 private:
  int rank_ = 0;
  int cutoff_ = 0;
  std::map<int, LatticePolynomial> coeffs_;
};

// v-grade a polynomial whose coefficients may carry v-powers; the result has
// v-free coefficients with the powers moved into the exponent.
TruncatedQSeries grade_by_v(const LatticePolynomial& p, int base, int cutoff);

}  // namespace whitdaha
