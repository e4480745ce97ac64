#pragma once

#include "whitdaha/macpoly.hpp"
#include "whitdaha/report.hpp"
#include "whitdaha/theta.hpp"

namespace whitdaha {

// Truncated global series.  Both builders return a series over the product
// lattice: block [0,n) carries the X variables, block [n,2n) the Lambda
// variables.  Coefficients are v-free; all q-powers live in the grading.
//
// Whittaker kind: sum_{b in B_-} q^{(b,b)/2} X_{b_+} Pbar_b(La^{-1})
//                   / prod_i prod_{j=1}^{-(a_i^vee,b)} (1 - q_i^j).
TruncatedQSeries build_psi_whittaker(MacCalc& M, int cutoff);
// q,t kind: sum q^{(b,b)/2 - (rho_k,b)} P_b(X) P_b(La^{-1}) / <P_b P_b(X^-1) mu_o>.
TruncatedQSeries build_psi_qt(MacCalc& M, int cutoff);

// Term data used by the specialized assemblers.
struct WhittakerTerm {
  Wt b;                     // antidominant label
  int base;                 // v-exponent m~ (b,b)
  LatticePolynomial pbar_inv;  // Pbar_b(La^{-1}), rank n
  RatCoeff denom;           // prod (1 - q_i^j)
};
std::vector<WhittakerTerm> whittaker_terms(MacCalc& M, int cutoff);

// Whittaker series with X specialized to the lattice point q^{xpt}.
TruncatedQSeries psi_whittaker_at_x(MacCalc& M, const Wt& xpt, int cutoff);

// --- identity checks ---

// <gauss mu_o> against the closed product (and the constant term itself).
CheckResult mehta_macdonald_check(MacCalc& M, int cutoff, bool t_zero);
CheckResult constant_term_check(MacCalc& M, int cutoff, bool t_zero);
// <P_b P_c gauss mu_o> = q^{((b,b)+(c,c))/2 - (b+c,rho_k)} P_c(q^{b-rho_k}) P_b(q^{-rho_k}) <gauss mu_o>.
CheckResult gauss_integral_check(MacCalc& M, const Wt& b, const Wt& c, int cutoff, bool t_zero);
// sum_b q^{(c-b,c-b)/2} Pbar_b(La)/prod = gauss(La) Pbar_c(La) prod 1/(1-q_i^j).
CheckResult shintani_check(MacCalc& M, const Wt& c, int cutoff);
// Psi(X, q^{c-rho_k}) * gauss(rho_k) * P_c(q^{-rho_k}) * Den = gauss_X * gauss(q^{c-rho_k}) * P_c(X) * Num.
CheckResult spherical_shintani_check(MacCalc& M, const Wt& c, int cutoff, bool swap_roles);
// termwise Whittaker limit of the q,t series.
CheckResult whittaker_limit_check(MacCalc& M, int cutoff);
// X <-> Lambda symmetry of the q,t series, termwise.
CheckResult psi_qt_symmetry_check(MacCalc& M, int cutoff);

enum class TodaKind { Rank1X, Rank1Lambda, MinusculeX, LambdaGeneral };
CheckResult toda_eigencheck(MacCalc& M, TodaKind kind, const Wt& a_plus, int cutoff);

// Jackson summation at the Whittaker point, coefficientwise in (La, La').
CheckResult jackson_whittaker_check(MacCalc& M, int cutoff);
// Extreme q-exponential limit of the shifted Whittaker series.
CheckResult q_exponential_limit_check(MacCalc& M, int cutoff);
// term-by-term |q|>1 correspondence via t -> infinity.
CheckResult star_correspondence_check(MacCalc& M, int max_norm);

}  // namespace whitdaha
