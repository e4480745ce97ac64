#pragma once

#include "whitdaha/qseries.hpp"
#include "whitdaha/theta.hpp"

#include <map>
#include <unordered_map>

namespace whitdaha {

// Truncated expansion of the orthogonality weight
//   mu = prod_{alpha>0} prod_{j>=0} (1-X_a q_a^j)(1-X_a^{-1} q_a^{j+1})
//                                / ((1-t_a X_a q_a^j)(1-t_a X_a^{-1} q_a^{j+1}))
// as a Laurent series in v with Laurent-polynomial X-coefficients.
//
// Terms are pruned by a height budget: to contribute to a pairing whose
// X-window has heights in [w_lo, w_hi], a partial-product term at v-order e
// with height L can only matter if descending from L back into the window is
// affordable, every unit of descent costing at least cmin in v.  Coefficients
// read inside the window at order <= cutoff are exact.
//
// Internals run on packed integer exponents with plain Z[s,u] coefficients.
class MuExpansion {
 public:
  MuExpansion(const RootDatum& d, int cutoff, const mpq_class& window_lo,
              const mpq_class& window_hi, bool t_zero);

  const RootDatum& datum() const { return d_; }
  int cutoff() const { return cutoff_; }
  bool t_zero() const { return t_zero_; }

  // Exact coefficient series of X_e in mu, for e inside the window.
  TruncatedQSeries coefficient(const LatticePolynomial::Exp& e) const;
  // <f mu> as a scalar series (all of -supp(f) must lie inside the window).
  TruncatedQSeries pair(const LatticePolynomial& f) const;
  // Same for an already v-graded series with v-free coefficients.
  TruncatedQSeries pair_series(const TruncatedQSeries& S) const;
  // <mu> itself.
  TruncatedQSeries constant_term() const;

  mpq_class height(const LatticePolynomial::Exp& e) const;

 private:
  using Key = std::int64_t;
  Key pack(const int* e) const;
  void unpack(Key k, int* e) const;
  long hint(Key k) const;  // scaled integer height

  void multiply_numerator_factor(const Wt& alpha_exp, int vcost);
  void multiply_denominator_factor(const Wt& alpha_exp, int vcost, bool long_root);
  bool keep(int vexp, long h) const;

  const RootDatum& d_;
  int cutoff_;
  bool t_zero_;
  long wlo_i_ = 0, whi_i_ = 0;      // window in scaled height units
  long cmin_num_ = 1, cmin_den_ = 1;  // v-cost per scaled height unit as a fraction
  std::vector<long> hcoef_;           // scaled height of the basis vectors
  std::vector<std::unordered_map<Key, MPoly>> body_;  // per v-exponent
};

// <f mu> exact to `cutoff`, building a fresh expansion sized to supp(f).
TruncatedQSeries mu_pairing(const RootDatum& d, const LatticePolynomial& f, int cutoff,
                            bool t_zero);
// <f mu_o> = <f mu>/<mu>.
TruncatedQSeries mu_pairing_normalized(const RootDatum& d, const LatticePolynomial& f,
                                       int cutoff, bool t_zero);

// Gram-Schmidt construction of the nonsymmetric orthogonal polynomial with
// leading monomial X_b: E = X_b + sum_{c succ b} kappa_c X_c with
// <E X_c^{-1} mu> = 0.  Coefficients come out as scalar v-series; the
// achievable order can drop below `cutoff` when elimination pivots have
// positive valuation, so each coefficient carries its own cutoff.
struct GramSchmidtResult {
  Wt b;
  std::vector<std::pair<Wt, TruncatedQSeries>> coefficients;  // includes (b, 1)
  int certified_order = 0;
};
GramSchmidtResult gram_schmidt_E(const RootDatum& d, const Wt& b, int cutoff, bool t_zero);

// The saturated ideal used by the solver: { c : c != b, c succ b, c_+ <= b_+ }.
std::vector<Wt> succ_ideal(const RootDatum& d, const Wt& b);

// Orthogonality residuals of a candidate polynomial: max order through which
// <E X_c^{-1} mu> vanishes for every c in the ideal (-1 on failure).
int orthogonality_certificate(const RootDatum& d, const LatticePolynomial& e_poly, const Wt& b,
                              int cutoff, bool t_zero);

}  // namespace whitdaha
