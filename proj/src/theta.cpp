#include "whitdaha/theta.hpp"

namespace whitdaha {

TruncatedQSeries gauss_theta_series(const RootDatum& d, int cutoff) {
  return gauss_theta_series_block(d, cutoff, d.rank(), 0);
}

TruncatedQSeries gauss_theta_series_block(const RootDatum& d, int cutoff, int total_rank,
                                          int off) {
  TruncatedQSeries s(total_rank, cutoff);
  if (cutoff < 0) return s;
  mpq_class bound = mpq_class(cutoff) / d.m_tilde();  // (b,b) <= cutoff / m~
  for (auto& b : d.lattice_ball(bound)) {
    mpq_class ve = d.pairing(b, b) * d.m_tilde();
    if (ve.get_den() != 1) throw std::logic_error("gauss exponent not integral");
    int e = static_cast<int>(ve.get_num().get_si());
    if (e > cutoff) continue;
    LatticePolynomial::Exp x(static_cast<std::size_t>(total_rank), 0);
    for (int k = 0; k < d.rank(); ++k) x[static_cast<std::size_t>(off + k)] = b[static_cast<std::size_t>(k)];
    s.add_term(e, x, RatCoeff(1));
  }
  return s;
}

TruncatedQSeries gauss_theta_value(const RootDatum& d, const RootDatum::EvalPoint& xi,
                                   int cutoff) {
  // v-exponent of the b-term is m~(b,b) + 2 m~(b, xi_lat); completing the
  // square, contributing b satisfy (b + xi, b + xi) <= cutoff/m~ + (xi,xi).
  TruncatedQSeries s(0, cutoff);
  mpq_class xsq = d.pairing_q(xi.lattice, xi.lattice);
  mpq_class bound = mpq_class(cutoff) / d.m_tilde() + xsq;
  if (bound < 0) return s;

  Wt c0(static_cast<std::size_t>(d.rank()), 0);  // integer point near -xi
  for (int i = 0; i < d.rank(); ++i) {
    mpq_class m = -xi.lattice[static_cast<std::size_t>(i)];
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), m.get_num().get_mpz_t(), m.get_den().get_mpz_t());
    c0[static_cast<std::size_t>(i)] = static_cast<int>(r.get_si());
  }
  std::vector<mpq_class> fr(static_cast<std::size_t>(d.rank()));
  for (int i = 0; i < d.rank(); ++i)
    fr[static_cast<std::size_t>(i)] = xi.lattice[static_cast<std::size_t>(i)] + c0[static_cast<std::size_t>(i)];
  mpq_class margin = d.pairing_q(fr, fr);
  // |db|^2 <= 2|db + fr|^2 + 2|fr|^2 for the positive form.
  mpq_class ball_bound = 2 * bound + 2 * margin;

  for (auto& db : d.lattice_ball(ball_bound)) {
    Wt b = db;
    for (int i = 0; i < d.rank(); ++i) b[static_cast<std::size_t>(i)] += c0[static_cast<std::size_t>(i)];
    if (!d.in_lattice(b)) continue;
    std::vector<mpq_class> bq(b.begin(), b.end());
    mpq_class ve = d.pairing_q(bq, bq) * d.m_tilde() + d.pairing_q(bq, xi.lattice) * 2 * d.m_tilde();
    if (ve.get_den() != 1) throw std::logic_error("gauss value exponent not integral");
    long e = ve.get_num().get_si();
    if (e > cutoff) continue;
    int es = 0, eu = 0;
    for (int idx = 0; idx < d.nu_count(); ++idx) {
      mpq_class te = d.pairing_q(bq, xi.tshift[static_cast<std::size_t>(idx)]) * 2;
      if (te.get_den() != 1) throw std::logic_error("gauss value t-exponent not half-integral");
      if (idx == 0)
        es = static_cast<int>(te.get_num().get_si());
      else
        eu = static_cast<int>(te.get_num().get_si());
    }
    s.add_term(static_cast<int>(e), LatticePolynomial::Exp{}, RatCoeff::monomial(0, es, eu));
  }
  return s;
}

RatCoeff theta_shift_ratio(const RootDatum& d, const Wt& c) {
  int es = 0, eu = 0;
  for (int idx = 0; idx < d.nu_count(); ++idx) {
    int nu = (idx == 0) ? 1 : d.nu_long();
    Wt r = d.rho_nu(nu);
    std::vector<mpq_class> rq(r.begin(), r.end());
    std::vector<mpq_class> cq(c.begin(), c.end());
    mpq_class te = d.pairing_q(cq, rq) * 2 / nu;  // doubled t_nu exponent
    if (te.get_den() != 1) throw std::logic_error("theta shift t-exponent not half-integral");
    if (idx == 0)
      es = static_cast<int>(te.get_num().get_si());
    else
      eu = static_cast<int>(te.get_num().get_si());
  }
  int ve = -d.v_exponent_of_pairing(c, c) / 2;
  return RatCoeff::monomial(ve, es, eu);
}

}  // namespace whitdaha
