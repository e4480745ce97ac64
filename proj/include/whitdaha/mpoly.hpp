#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace whitdaha {

// Exponent vector for the three coefficient variables:
//   var 0: v            (v^(2*mt) = q for the ambient lattice constant mt)
//   var 1: s = ts^(1/2) (square root of the short-root parameter t_sht)
//   var 2: u = tl^(1/2) (square root of the long-root parameter t_lng)
// Exponents are nonnegative inside MPoly; negative powers live in fractions.
struct Mono {
  std::array<int, 3> e{0, 0, 0};

  friend bool operator==(const Mono&, const Mono&) = default;
  // Lexicographic, used as the global term order.
  friend bool operator<(const Mono& a, const Mono& b) {
    return a.e < b.e;
  }
  Mono operator*(const Mono& o) const {
    return Mono{{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}};
  }
  bool divides(const Mono& o) const {
    return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
  }
  Mono divide(const Mono& o) const {  // this / o, assumes o.divides(*this)
    return Mono{{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]}};
  }
};

// Sparse multivariate polynomial over Z in (v, s, u).
// Terms are kept sorted in strictly decreasing monomial order with no zeros.
class MPoly {
 public:
  struct Term {
    Mono m;
    mpz_class c;
    friend bool operator==(const Term& a, const Term& b) {
      return a.m == b.m && a.c == b.c;
    }
  };

  MPoly() = default;
  explicit MPoly(long n) {
    if (n != 0) terms_.push_back({Mono{}, mpz_class(n)});
  }
  explicit MPoly(const mpz_class& n) {
    if (n != 0) terms_.push_back({Mono{}, n});
  }
  static MPoly monomial(const mpz_class& c, const Mono& m) {
    MPoly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  static MPoly variable(int var, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].m == Mono{} && terms_[0].c == 1;
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m == Mono{});
  }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  int degree(int var) const;      // max exponent of var, -1 for zero poly
  int valuation(int var) const;   // min exponent of var, 0 for zero poly
  // Minimal combined (s,u) exponent over all terms; 0 for the zero poly.
  int t_valuation() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly&) const;
  MPoly operator-(const MPoly&) const;
  MPoly operator*(const MPoly&) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly mul_mono(const Mono& m, const mpz_class& c) const;
  MPoly pow(int n) const;

  mpz_class content() const;            // gcd of coefficients, sign of leading
  MPoly divide_exact(const MPoly& d) const;  // throws if not exact
  static MPoly gcd(const MPoly& a, const MPoly& b);

  // Substitute s = u = 0 (the t -> 0 specialization of the numerator layer).
  MPoly at_t_zero() const;
  // Substitute v = 0.
  MPoly at_v_zero() const;
  // Reverse a single variable: p(x) -> x^deg * p(1/x) for var.
  MPoly reversed(int var) const;
  // Extract the slice with exact exponent k of var (exponent of var set to 0).
  MPoly slice(int var, int k) const;

  // Evaluate at double point (v, s, u).
  double eval_double(double v, double s, double u) const;

  std::string str(const struct VarNames& names) const;
  static void normalize(std::vector<Term>& ts);
  static MPoly from_terms(std::vector<Term> ts) {
    normalize(ts);
    MPoly p;
    p.terms_ = std::move(ts);
    return p;
  }

 private:
  std::vector<Term> terms_;
};

// Display control: v is printed as a power of q using q = v^(2*mt);
// s,u print as t-powers (halved), with a single name when collapse_t is set.
struct VarNames {
  int two_mt = 2;            // v^(two_mt) = q
  bool collapse_t = false;   // simply-laced: one parameter "t"
  std::string q = "q";
  std::string ts = "t_sht";
  std::string tl = "t_lng";
  std::string t = "t";
};

std::string exponent_str(int num, int den);  // reduced "a" or "(a/b)"

}  // namespace whitdaha
