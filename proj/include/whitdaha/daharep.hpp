#pragma once

#include "whitdaha/latticepoly.hpp"
#include "whitdaha/qseries.hpp"

#include <string>
#include <vector>

namespace whitdaha {

// Polynomial representation of the double affine Hecke algebra on the block
// [off, off+n) of the exponent vector (off > 0 serves Lambda-side operators).
class DahaRep {
 public:
  explicit DahaRep(const RootDatum& d, int off = 0) : d_(d), off_(off) {}

  const RootDatum& datum() const { return d_; }

  RatCoeff t_i(int i) const;  // t_{alpha_i}, i = 0..n

  LatticePolynomial apply_s(int i, const LatticePolynomial& f) const;
  LatticePolynomial apply_T(int i, const LatticePolynomial& f) const;
  LatticePolynomial apply_T_inverse(int i, const LatticePolynomial& f) const;
  // {t_i T_i^{-1}} = T_i - t_i + 1.
  LatticePolynomial apply_braced_T_inverse(int i, const LatticePolynomial& f) const;
  // t = 0 operators: Tbar_i(f) = (s_i(f) - f)/(1 - X_{alpha_i}).
  LatticePolynomial apply_Tbar(int i, const LatticePolynomial& f) const;

  // Multiplication by X_{alpha_i} (affine: X_0 = q X_theta^{-1}).
  LatticePolynomial mul_X_alpha(int i, const LatticePolynomial& f, int sign = 1) const;
  LatticePolynomial mul_X(const Wt& b, const LatticePolynomial& f) const;

  // pi_r as an operator: f(X) -> f(pi_r^{-1}(X)); X_b -> X_{pi_r([b,0])}.
  LatticePolynomial apply_pi(int r, const LatticePolynomial& f) const;
  // tau_+ images: tau(T_i) = T_i (i>0), tau(T_0) = X_0^{-1} {t_0 T_0^{-1}},
  // tau(pi_r) = q^{-(w_r,w_r)/2} X_r pi_r.
  LatticePolynomial apply_tau_T(int i, const LatticePolynomial& f, bool t_zero_mode = false) const;
  LatticePolynomial apply_tau_pi(int r, const LatticePolynomial& f) const;

  // Y_b with the q^{(b_+ - b, rho_k)} prefactor.
  LatticePolynomial apply_Y(const Wt& b, const LatticePolynomial& f) const;
  LatticePolynomial apply_Y_omega(int i, int power, const LatticePolynomial& f) const;

  // L_{a_+} = restriction of sum_{a' in W(a_+)} Y_{a'} to W-invariants.
  LatticePolynomial apply_L(const Wt& a_plus, const LatticePolynomial& f) const;

  // t-monomial q^{(b, rho_k)} (as exact coefficient).
  RatCoeff q_rho_k_pairing(const Wt& b) const;

 private:
  const RootDatum& d_;
  int off_ = 0;
};

// A finite difference operator sum_i coeff_i(X) * Gamma_{a_i} with rational
// lattice coefficients kept in factored form, used for the Macdonald
// operators in coefficient shape and their conjugated limits.
struct DiffOperator {
  struct Factor {  // (1 - c * X_mu)
    RatCoeff c;
    Wt mu;
  };
  struct Term {
    RatCoeff scalar;
    Wt scalar_x;               // extra monomial X_{scalar_x} on the scalar
    std::vector<Factor> num;
    std::vector<Factor> den;
    Wt shift;                  // Gamma_{shift}
  };
  std::vector<Term> terms;
};

// Classical coefficient form of the Macdonald operator for minuscule a_+:
//   sum_{a' in W(a_+)} prod_{alpha>0, (alpha^vee,a')>0} (1-t_a X_a)/(1-X_a) Gamma_{a'}.
DiffOperator macdonald_operator_minuscule(const RootDatum& d, const Wt& a_plus);

// Conjugated q-Toda limit: t -> 0 of
//   q^{-(a_+,rho_k)} q^{(x,rho_k)} Gamma_{rho_k}^{-1} L Gamma_{rho_k} q^{-(x,rho_k)}.
// Every term must normalize to a t-regular factored form.
DiffOperator toda_operator_minuscule(const RootDatum& d, const Wt& a_plus);
// Same with the opposite conjugation and t -> infinity.
DiffOperator toda_operator_minuscule_tinf(const RootDatum& d, const Wt& a_plus);

// Straight t = 0 limit of the Macdonald operator (denominators remain).
DiffOperator macdonald_operator_t_zero(const RootDatum& d, const Wt& a_plus);

// Apply a DiffOperator with polynomial coefficients (den must be empty after
// clearing) to a block of a series; shifts act on the block at `off`.
TruncatedQSeries apply_diff_operator(const RootDatum& d, const DiffOperator& op,
                                     const TruncatedQSeries& s, int off);

// Relation verification.
struct RelationReport {
  std::string relation_id;
  bool pass = true;
  std::string witness;         // offending monomial, empty when pass
  std::string mismatch;        // textual diff, empty when pass
};
std::vector<RelationReport> verify_daha_relations(const RootDatum& d, int degree_bound);

}  // namespace whitdaha
