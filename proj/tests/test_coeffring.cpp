#include <doctest.h>

#include "whitdaha/cterm.hpp"
#include "whitdaha/qseries.hpp"
#include "whitdaha/ratcoeff.hpp"
#include "whitdaha/theta.hpp"

using namespace whitdaha;

namespace {
RatCoeff q(int mt2 = 4) { return RatCoeff::v_power(mt2); }     // A1/P: q = v^4
RatCoeff t() { return RatCoeff::ts_half_power(2); }
RatCoeff one_minus(const RatCoeff& x) { return RatCoeff(1) - x; }
}  // namespace

TEST_CASE("rational arithmetic canonical forms") {
  // (1 - t^2)/(1 - t) reduces to 1 + t
  RatCoeff a = one_minus(t() * t()) / one_minus(t());
  CHECK(a == RatCoeff(1) + t());

  // t / t = 1
  CHECK(t() / t() == RatCoeff(1));

  // ((1 - t q)(1 - t)) * 1/(1 - t) = 1 - t q
  RatCoeff b = (one_minus(t() * q()) * one_minus(t())) / one_minus(t());
  CHECK(b == one_minus(t() * q()));

  // field axioms spot checks
  RatCoeff x = (RatCoeff(3) + t()) / (q() - RatCoeff(5));
  RatCoeff y = one_minus(q() * t() * t());
  CHECK((x + y) - y == x);
  CHECK((x * y) / y == x);
  CHECK(x * y - y * x == RatCoeff(0));
}

TEST_CASE("t = 0 specialization") {
  CHECK((one_minus(t()) / one_minus(t() * q())).at_t_zero() == RatCoeff(1));
  CHECK((t() * RatCoeff::v_power(3)).at_t_zero() == RatCoeff(0));
  CHECK_THROWS_AS(t().inverse().at_t_zero(), TZeroPole);
}

TEST_CASE("q inversion and t inversion substitutions") {
  RatCoeff r = one_minus(q()) / one_minus(t() * q());
  RatCoeff rinv = r.subst_q_inverse();
  // (1 - 1/q)/(1 - t/q) = (q - 1)/(q - t)
  CHECK(rinv == (q() - RatCoeff(1)) / (q() - t()));
  RatCoeff s = t().subst_t_inverse();
  CHECK(s == t().inverse());
  CHECK(one_minus(t()).subst_t_inverse() == one_minus(t().inverse()));
}

TEST_CASE("series expansion of rational coefficients") {
  // 1/(1-q) = 1 + q + q^2 + ... in v with q = v^4
  TruncatedQSeries s = TruncatedQSeries::from_ratcoeff(one_minus(q()).inverse(), 0, 12);
  for (int e = 0; e <= 12; ++e) {
    const LatticePolynomial* c = s.coeff(e);
    if (e % 4 == 0) {
      REQUIRE(c != nullptr);
      CHECK(c->coeff({}) == RatCoeff(1));
    } else {
      CHECK(c == nullptr);
    }
  }
  // series inverse undoes expansion
  TruncatedQSeries inv = s.inverse();
  TruncatedQSeries expected = TruncatedQSeries::from_ratcoeff(one_minus(q()), 0, inv.cutoff());
  CHECK(expected.equal_to_order(inv, inv.cutoff()));
}

TEST_CASE("series ring structure and truncation") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  TruncatedQSeries f(1, 8), g(1, 8);
  f.add_term(0, {1}, RatCoeff(1));
  f.add_term(3, {-1}, t());
  g.add_term(1, {0}, RatCoeff(2));
  g.add_term(2, {2}, RatCoeff(1));
  TruncatedQSeries fg = f * g;
  CHECK(fg.coeff(1) != nullptr);
  CHECK(fg.coeff(1)->coeff({1}) == RatCoeff(2));
  CHECK(fg.coeff(5)->coeff({1}) == t());  // v^3 X^-1 t * v^2 X^2
  // distributivity to order
  TruncatedQSeries h(1, 8);
  h.add_term(2, {0}, RatCoeff(1));
  CHECK(((f + h) * g).equal_to_order(f * g + h * g, 7));
}

TEST_CASE("gaussian theta series for A1") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  // gamma(q^{n w}) exponents: (b,b)/2 = n^2/4, v = q^{1/4}
  TruncatedQSeries th = gauss_theta_series(d, 16);
  CHECK(th.coeff(0)->coeff({0}) == RatCoeff(1));
  CHECK(th.coeff(1)->coeff({1}) == RatCoeff(1));
  CHECK(th.coeff(1)->coeff({-1}) == RatCoeff(1));
  CHECK(th.coeff(4)->coeff({2}) == RatCoeff(1));
  CHECK(th.coeff(9)->coeff({3}) == RatCoeff(1));
  CHECK(th.coeff(2) == nullptr);

  // evaluated at 1: 1 + 2 q^{1/4} + 2 q + 2 q^{9/4} + ...
  TruncatedQSeries val = gauss_theta_value(d, d.lattice_point({0}), 16);
  CHECK(val.coeff(0)->coeff({}) == RatCoeff(1));
  CHECK(val.coeff(1)->coeff({}) == RatCoeff(2));
  CHECK(val.coeff(4)->coeff({}) == RatCoeff(2));
  CHECK(val.coeff(9)->coeff({}) == RatCoeff(2));
  CHECK(val.coeff(3) == nullptr);
}

TEST_CASE("theta B-periodicity ratio") {
  // gauss(q^{c - rho_k})/gauss(q^{-rho_k}) = q^{(c,rho_k) - (c,c)/2} for c in B
  for (Family fam : {Family::A}) {
    for (int rank : {1, 2}) {
      RootDatum d = RootDatum::build(fam, rank, LatticeChoice::P);
      Wt c(static_cast<std::size_t>(rank), 0);
      c[0] = 1;
      if (rank == 2) c[1] = -1;
      int N = 24;
      TruncatedQSeries lhs_num = gauss_theta_value(d, d.lattice_minus_rho_k(c), N);
      TruncatedQSeries lhs_den = gauss_theta_value(d, d.minus_rho_k(), N);
      RatCoeff ratio = theta_shift_ratio(d, c);
      TruncatedQSeries rhs = lhs_den.mul_ratcoeff(ratio);
      int ord = std::min(lhs_num.cutoff(), rhs.cutoff());
      CHECK(lhs_num.equal_to_order(rhs, ord));
      CHECK(ord >= N - 3 * d.two_mt());
    }
  }
}

TEST_CASE("mu expansion: A1 constant term matches the closed product") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  int N = 20;  // v-units, q-order 5
  LatticePolynomial onep = LatticePolynomial::constant(1, RatCoeff(1));
  TruncatedQSeries ct = mu_pairing(d, onep, N, false);
  // <mu> = prod_{j>=1} (1-t q^j)^2 / ((1-t^2 q^j)(1-q^j))
  TruncatedQSeries rhs = TruncatedQSeries::one(0, N);
  for (int j = 1; 4 * j <= N; ++j) {
    RatCoeff qj = RatCoeff::v_power(4 * j);
    rhs = rhs.mul_ratcoeff(one_minus(t() * qj) * one_minus(t() * qj) /
                           (one_minus(t() * t() * qj) * one_minus(qj)));
  }
  CHECK(ct.equal_to_order(rhs, N));
}

TEST_CASE("mu expansion t=0: A1 bar constant term") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  int N = 24;
  LatticePolynomial onep = LatticePolynomial::constant(1, RatCoeff(1));
  TruncatedQSeries ct = mu_pairing(d, onep, N, true);
  TruncatedQSeries rhs = TruncatedQSeries::one(0, N);
  for (int j = 1; 4 * j <= N; ++j)
    rhs = rhs.mul_ratcoeff(one_minus(RatCoeff::v_power(4 * j)).inverse());
  CHECK(ct.equal_to_order(rhs, N));
}
