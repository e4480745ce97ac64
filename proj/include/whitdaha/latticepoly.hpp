#pragma once

#include "whitdaha/ratcoeff.hpp"
#include "whitdaha/rootdatum.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace whitdaha {

// Finitely supported map from a lattice (or a product of lattices) to
// RatCoeff.  Exponents are weight-coordinate vectors; for two-variable
// objects (X and Lambda) the exponent is the concatenation of both blocks.
class LatticePolynomial {
 public:
  using Exp = std::vector<int>;

  LatticePolynomial() = default;
  explicit LatticePolynomial(int rank) : rank_(rank) {}
  static LatticePolynomial constant(int rank, const RatCoeff& c);
  static LatticePolynomial monomial(const Exp& e, const RatCoeff& c = RatCoeff(1));

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exp, RatCoeff>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  RatCoeff coeff(const Exp& e) const;
  void set_coeff(const Exp& e, const RatCoeff& c);
  void add_term(const Exp& e, const RatCoeff& c);

  LatticePolynomial operator-() const;
  LatticePolynomial operator+(const LatticePolynomial&) const;
  LatticePolynomial operator-(const LatticePolynomial&) const;
  LatticePolynomial operator*(const LatticePolynomial&) const;
  LatticePolynomial& operator+=(const LatticePolynomial& o) { return *this = *this + o; }
  LatticePolynomial& operator-=(const LatticePolynomial& o) { return *this = *this - o; }
  LatticePolynomial& operator*=(const LatticePolynomial& o) { return *this = *this * o; }
  friend bool operator==(const LatticePolynomial&, const LatticePolynomial&) = default;

  LatticePolynomial scale(const RatCoeff& c) const;
  LatticePolynomial mul_monomial(const Exp& e, const RatCoeff& c = RatCoeff(1)) const;
  // X -> X^{-1} on a block [off, off+len); default whole exponent.
  LatticePolynomial invert_block(int off = 0, int len = -1) const;
  // Apply a map on exponents with a coefficient twist.
  LatticePolynomial map_terms(
      const std::function<std::pair<Exp, RatCoeff>(const Exp&, const RatCoeff&)>& fn) const;

  // Coefficient-wise operations.
  LatticePolynomial coeff_map(const std::function<RatCoeff(const RatCoeff&)>& fn) const;
  LatticePolynomial at_t_zero() const { return coeff_map([](const RatCoeff& c) { return c.at_t_zero(); }); }

  // Exact division by (v^p X_mu - 1); throws on inexact division.
  LatticePolynomial divide_monomial_minus_one(const Exp& mu, int vpow) const;

  std::string str(const VarNames& names) const;

 private:
  int rank_ = 0;
  std::map<Exp, RatCoeff> terms_;
};

// --- actions tied to a root datum (X variables live on datum's lattice) ---

// s_i(f) for 0 <= i <= n acting on the block starting at `off`.
LatticePolynomial act_simple(const RootDatum& d, int i, const LatticePolynomial& f, int off = 0);
// w given by a word (composition order; rightmost applied first).
LatticePolynomial act_word(const RootDatum& d, const std::vector<int>& word,
                           const LatticePolynomial& f, int off = 0);
// Evaluate the block at a point q^xi: X_a -> q^{(a,xi)} as an exact monomial.
RatCoeff evaluate_monomial_block(const RootDatum& d, const LatticePolynomial::Exp& e,
                                 const RootDatum::EvalPoint& pt, int off);
// Full evaluation of a one-block polynomial.
RatCoeff evaluate_at(const RootDatum& d, const LatticePolynomial& f,
                     const RootDatum::EvalPoint& pt);
// Substitute the block at `off` by the point, keeping remaining blocks.
LatticePolynomial specialize_block(const RootDatum& d, const LatticePolynomial& f,
                                   const RootDatum::EvalPoint& pt, int off);
// Multiply each X_c by the monomial value X_c(q^xi) (the X -> q^xi X shift).
LatticePolynomial shift_block(const RootDatum& d, const LatticePolynomial& f,
                              const RootDatum::EvalPoint& pt, int off = 0);
// Check W-invariance in the given block.
bool w_invariant(const RootDatum& d, const LatticePolynomial& f, int off = 0);

// Canonical ordering used by the text serialization: terms sorted by
// decreasing dominance height of the orbit representative, then by exponent.
std::string canonical_str(const RootDatum& d, const LatticePolynomial& f);

}  // namespace whitdaha
