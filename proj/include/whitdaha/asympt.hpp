#pragma once

#include "whitdaha/report.hpp"
#include "whitdaha/rootdatum.hpp"

#include <complex>
#include <vector>

namespace whitdaha {

using cplx = std::complex<double>;

// Numeric evaluation point: 0 < q < 1, t_nu = q_nu^{k_nu}; x and lambda are
// complex vectors in fundamental-weight coordinates.
struct NumericPoint {
  double q = 0.5;
  cplx k_short{1, 0};
  cplx k_long{1, 0};
  std::vector<cplx> x;
  std::vector<cplx> lambda;
};

cplx pair_num(const RootDatum& d, const Wt& a, const std::vector<cplx>& z);

// sigma(q^z; q, t) = prod_{alpha>0} prod_{j>=0} (1 - t_a X_a q_a^j)/(1 - X_a q_a^j)
// with a certified geometric tail bound below 1e-12 relative.
cplx eval_sigma(const RootDatum& d, const NumericPoint& pt, const std::vector<cplx>& z);

// Evaluated theta sum gauss(q^xi) with certified tails.
cplx theta_value_num(const RootDatum& d, double q, const std::vector<cplx>& xi);

struct ResidualReport {
  CheckResult result;
  std::vector<double> residuals;
};

// lim_{c_+ -> infty} q^{-(c,x_+)} P_c(q^x) = sigma(q^{x_+}); requires integer
// k in {0,1} where P has a classical closed evaluation.
ResidualReport sigma_limit_check(const RootDatum& d, const NumericPoint& pt, int n_max,
                                 double tol);

enum class HarishKind { Spherical, Whittaker, WhittakerLambda };
// Spherical: P_dag(x + n x', la) -> rho(q,t) sigma(q^{la_+}) at k = 1.
// Whittaker: P~_dag along -C_+ -> prod 1/((1-q^{j+1})(1-q^{la+j})).
// WhittakerLambda: the la-limit is x-independent, checked at two x.
ResidualReport harish_chandra_limit_check(const RootDatum& d, const NumericPoint& pt,
                                          HarishKind kind, int n_max, double tol);

// U^{x^2/2} sum_{b in B} X_b U^{b^2/2} =
//   (2 pi u)^{n/2} covol(B)^{-1} sum_{a in A} Y_a V^{a^2/2}.
CheckResult theta_functional_equation_check(const RootDatum& d, double u,
                                            const std::vector<cplx>& x, double tol);

std::string residuals_csv(const ResidualReport& r);

}  // namespace whitdaha
