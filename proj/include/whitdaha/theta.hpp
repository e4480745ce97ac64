#pragma once

#include "whitdaha/qseries.hpp"

namespace whitdaha {

// Gaussian sum_{b in B} q^{(b,b)/2} X_b as a lattice series, truncated at
// v-order `cutoff`; the contributing set is computed from the quadratic form.
TruncatedQSeries gauss_theta_series(const RootDatum& d, int cutoff);

// Same sum placed in the block [off, off+n) of a rank `total_rank` exponent.
TruncatedQSeries gauss_theta_series_block(const RootDatum& d, int cutoff, int total_rank,
                                          int off);

// Evaluated Gaussian: scalar series sum_b q^{(b,b)/2 + (b, xi)} for a lattice
// point with rho_k-shift.  Exponents may start below zero.
TruncatedQSeries gauss_theta_value(const RootDatum& d, const RootDatum::EvalPoint& xi,
                                   int cutoff);

// q^{(c,rho_k) - (c,c)/2} as an exact coefficient (the theta shift ratio
// gauss(q^{c-rho_k}) / gauss(q^{-rho_k}) for c in B).
RatCoeff theta_shift_ratio(const RootDatum& d, const Wt& c);

}  // namespace whitdaha
