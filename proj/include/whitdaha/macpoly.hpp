#pragma once

#include "whitdaha/cterm.hpp"
#include "whitdaha/daharep.hpp"

#include <map>
#include <mutex>

namespace whitdaha {

// Construction of the nonsymmetric E and symmetric P polynomials by the
// intertwiner recursion, their t = 0 limits, and the closed evaluation, norm
// and mu-value products they are tested against.
class MacCalc {
 public:
  explicit MacCalc(const RootDatum& d) : d_(d), H_(d) {}

  const RootDatum& datum() const { return d_; }
  DahaRep& rep() { return H_; }

  // Nonsymmetric Macdonald polynomial, monic on X_b (intertwiner route).
  LatticePolynomial E(const Wt& b);
  // t = 0 polynomial built by the nil intertwiner chain, monic on X_b.
  LatticePolynomial Ebar(const Wt& b);
  // Observed v-exponent r_b: the chain output equals q^{r_b} * Ebar_b.
  int Ebar_r(const Wt& b);

  // Symmetric Macdonald polynomial for antidominant b (orbit-monic).
  LatticePolynomial P(const Wt& b_minus);
  // t = 0 symmetric polynomial; equals Ebar at antidominant labels.
  LatticePolynomial Pbar(const Wt& b_minus) { return Ebar(b_minus); }
  // t = 0 specialization of the coefficients of P (the other route).
  LatticePolynomial P_at_t_zero(const Wt& b_minus);

  // --- closed products ---
  RatCoeff E_eval_closed(const Wt& b);    // E_b(q^{-rho_k})
  RatCoeff P_eval_closed(const Wt& b_minus);
  RatCoeff norm_closed(const Wt& b_minus);     // <P P(X^-1) mu_o>
  RatCoeff normbar_closed(const Wt& b_minus);  // t = 0 norm
  RatCoeff mu_bullet_value(const Wt& b);       // mu(q^{b_#})/mu(q^{-rho_k})

  // --- evaluations ---
  RatCoeff eval(const LatticePolynomial& f, const RootDatum::EvalPoint& pt) const;
  RatCoeff E_at_spectral(const Wt& b, const Wt& c);  // E_b(q^{c_#})
  RatCoeff y_eigenvalue(const Wt& a, const Wt& b);   // q^{(a_+,rho_k) - (a,b_#)}
  RatCoeff l_eigenvalue(const Wt& a_plus, const Wt& b_minus);

  // --- identity checks (exact) ---
  bool check_evaluation_E(const Wt& b);
  bool check_evaluation_P(const Wt& b_minus);
  bool check_duality_E(const Wt& b, const Wt& c);
  bool check_duality_P(const Wt& b_minus, const Wt& c_minus);
  bool check_y_eigen(const Wt& b);
  bool check_l_eigen(const Wt& a_plus, const Wt& b_minus);
  // P(q^{-rho_k})^2 / norm = sum_{a in W(b)} mu(q^{a_#})/mu(q^{-rho_k})
  bool check_norm_spherical(const Wt& b_minus);
  // series norm check against the closed product, to a given v-order
  bool check_norm_series(const Wt& b_minus, const Wt& c_minus, int order, bool t_zero);
  // coefficients of Ebar lie in Z>=0[q]
  bool check_bar_positive(const Wt& b);
  // the two bar routes agree (specialized P vs nil chain)
  bool check_bar_routes(const Wt& b_minus);
  // P_b(X^{-1}) = P_{varsigma(b)}(X)
  bool check_p_inversion(const Wt& b_minus);
  // lim_{t->inf} P_b(X;q,t) = Pbar_b(X^{-1}; q^{-1})
  bool check_t_infinity(const Wt& b_minus);
  // q -> 0 limit of Pbar is the classical character of the dominant weight
  bool check_classical_character(const Wt& b_minus);

 private:
  const RootDatum& d_;
  DahaRep H_;
  std::mutex mu_;
  std::map<Wt, LatticePolynomial> cache_E_, cache_Ebar_, cache_P_;
  std::map<Wt, int> cache_rb_;

  LatticePolynomial build_E_chain(const Wt& b, bool t_zero, int* r_out);
};

// Rank-one closed forms (A1, X = X_omega).
LatticePolynomial rank1_pbar_closed(const RootDatum& d, int n);
LatticePolynomial rank1_rogers_closed(const RootDatum& d, int n);

// Weyl character by the alternating-sum formula (the q -> 0 oracle).
LatticePolynomial weyl_character(const RootDatum& d, const Wt& dominant);

}  // namespace whitdaha
