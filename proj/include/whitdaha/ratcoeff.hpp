#pragma once

#include "whitdaha/mpoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace whitdaha {

struct TZeroPole : std::runtime_error {
  explicit TZeroPole(const std::string& den)
      : std::runtime_error("value has a pole at t=0, denominator factor: " + den) {}
};

// Element of Q(v, s, u) in canonical form: numerator and denominator coprime,
// integer-content free, denominator leading coefficient positive.  Negative
// powers of v, ts, tl are represented through the denominator.
class RatCoeff {
 public:
  RatCoeff() : num_(), den_(1) {}
  RatCoeff(long n) : num_(n), den_(1) {}
  RatCoeff(const mpz_class& n) : num_(n), den_(1) {}
  RatCoeff(const mpq_class& r) : num_(r.get_num()), den_(r.get_den()) {}
  RatCoeff(MPoly num, MPoly den);
  explicit RatCoeff(const MPoly& p) : num_(p), den_(1) {}

  // q^k and the half-unit monomials; exponents may be negative.
  static RatCoeff v_power(int e);
  static RatCoeff ts_half_power(int e);
  static RatCoeff tl_half_power(int e);
  // Monomial v^ev * s^es * u^eu with arbitrary signs.
  static RatCoeff monomial(int ev, int es, int eu, const mpq_class& c = 1);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // Single-term numerator over single-term denominator.
  bool is_monomial() const {
    return num_.is_monomial() && den_.is_monomial();
  }

  RatCoeff operator-() const;
  RatCoeff operator+(const RatCoeff&) const;
  RatCoeff operator-(const RatCoeff&) const;
  RatCoeff operator*(const RatCoeff&) const;
  RatCoeff operator/(const RatCoeff&) const;
  RatCoeff& operator+=(const RatCoeff& o) { return *this = *this + o; }
  RatCoeff& operator-=(const RatCoeff& o) { return *this = *this - o; }
  RatCoeff& operator*=(const RatCoeff& o) { return *this = *this * o; }
  RatCoeff& operator/=(const RatCoeff& o) { return *this = *this / o; }
  friend bool operator==(const RatCoeff&, const RatCoeff&) = default;

  RatCoeff inverse() const;
  RatCoeff pow(int n) const;

  // True when the denominator does not vanish at ts = tl = 0.
  bool t_regular() const { return !den_.at_t_zero().is_zero(); }
  // ts = tl = 0 substitution; throws TZeroPole on a pole.
  RatCoeff at_t_zero() const;
  // q -> 1/q (v -> 1/v).
  RatCoeff subst_q_inverse() const;
  // t_nu -> 1/t_nu for both nu (s -> 1/s, u -> 1/u).
  RatCoeff subst_t_inverse() const;
  // X -> coefficient-level substitution helpers used for numeric bridges.
  double eval_double(double v, double s, double u) const;

  std::string str(const VarNames& names) const;

 private:
  void reduce();
  MPoly num_, den_;
};

}  // namespace whitdaha
