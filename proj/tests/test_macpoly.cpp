#include <doctest.h>

#include "whitdaha/macpoly.hpp"

using namespace whitdaha;

namespace {
LatticePolynomial one(const RootDatum& d) {
  return LatticePolynomial::constant(d.rank(), RatCoeff(1));
}
LatticePolynomial Xm(const Wt& b) {
  return LatticePolynomial::monomial(LatticePolynomial::Exp(b.begin(), b.end()));
}
RatCoeff qpow(const RootDatum& d, int j) { return RatCoeff::v_power(d.two_mt() * j); }

LatticePolynomial gamma_shift(const RootDatum& d, const LatticePolynomial& f, int sign) {
  return f.map_terms([&](const LatticePolynomial::Exp& e, const RatCoeff& c) {
    int ve = sign * d.v_exponent_of_pairing({e[0]}, {1});
    return std::make_pair(e, c * RatCoeff::v_power(ve));
  });
}
LatticePolynomial divide_x_minus_xinv(const LatticePolynomial& f) {
  return f.mul_monomial({1}).divide_monomial_minus_one({2}, 0);
}
}  // namespace

TEST_CASE("E basics: E_0 = 1, A1 E_omega = X") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  MacCalc M(d);
  CHECK(M.E({0}) == one(d));
  CHECK(M.E({1}) == Xm({1}));
  CHECK(M.check_y_eigen({-1}));
  CHECK(M.check_y_eigen({2}));
  CHECK(M.check_y_eigen({-3}));
}

TEST_CASE("Gram-Schmidt oracle equals the intertwiner route (A1 box)") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  MacCalc M(d);
  for (int b = -3; b <= 3; ++b) {
    GramSchmidtResult gs = gram_schmidt_E(d, {b}, 40, false);
    REQUIRE(gs.certified_order > 10);
    LatticePolynomial e = M.E({b});
    for (auto& [c, kappa] : gs.coefficients) {
      RatCoeff exact = e.coeff(LatticePolynomial::Exp(c.begin(), c.end()));
      TruncatedQSeries expanded = TruncatedQSeries::from_ratcoeff(exact, 0, kappa.cutoff());
      INFO("b=", b, " c=", wt_str(c));
      CHECK(expanded.equal_to_order(kappa, kappa.cutoff()));
    }
    for (auto& [e2, c2] : e.terms()) {
      bool found = false;
      for (auto& [c, kappa] : gs.coefficients) found = found || Wt(e2.begin(), e2.end()) == c;
      CHECK(found);
    }
  }
}

TEST_CASE("Gram-Schmidt oracle equals the intertwiner route (A2 spot checks)") {
  RootDatum d = RootDatum::build(Family::A, 2, LatticeChoice::P);
  MacCalc M(d);
  for (Wt b : {Wt{1, 0}, Wt{0, -1}, Wt{1, -1}, Wt{-1, -1}}) {
    GramSchmidtResult gs = gram_schmidt_E(d, b, 36, false);
    REQUIRE(gs.certified_order > 6);
    LatticePolynomial e = M.E(b);
    for (auto& [c, kappa] : gs.coefficients) {
      RatCoeff exact = e.coeff(LatticePolynomial::Exp(c.begin(), c.end()));
      TruncatedQSeries expanded = TruncatedQSeries::from_ratcoeff(exact, 0, kappa.cutoff());
      INFO("b=", wt_str(b), " c=", wt_str(c));
      CHECK(expanded.equal_to_order(kappa, kappa.cutoff()));
    }
  }
}

TEST_CASE("symmetric P: rank-one Rogers closed forms up to n = 6") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  MacCalc M(d);
  CHECK(M.P({-1}) == Xm({1}) + Xm({-1}));
  RatCoeff t = RatCoeff::ts_half_power(2);
  RatCoeff expect = (RatCoeff(1) - qpow(d, 2)) * (RatCoeff(1) - t) /
                    ((RatCoeff(1) - qpow(d, 1)) * (RatCoeff(1) - t * qpow(d, 1)));
  LatticePolynomial p2 = M.P({-2});
  CHECK(p2.coeff({0}) == expect);
  for (int n = 1; n <= 6; ++n) CHECK(M.P({-n}) == rank1_rogers_closed(d, n));
}

TEST_CASE("bar polynomials: golden rank-one values") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  MacCalc M(d);
  RatCoeff q = qpow(d, 1);
  LatticePolynomial p2 = M.Pbar({-2});
  CHECK(p2 == Xm({2}) + Xm({-2}) + one(d).scale(RatCoeff(1) + q));
  LatticePolynomial p3 = M.Pbar({-3});
  RatCoeff c3 = (RatCoeff(1) - qpow(d, 3)) / (RatCoeff(1) - q);
  CHECK(p3 == Xm({3}) + Xm({-3}) + (Xm({1}) + Xm({-1})).scale(c3));
  LatticePolynomial p4 = M.Pbar({-4});
  RatCoeff ct4 = (RatCoeff(1) - qpow(d, 4)) * (RatCoeff(1) - qpow(d, 3)) /
                 ((RatCoeff(1) - qpow(d, 1)) * (RatCoeff(1) - qpow(d, 2)));
  CHECK(p4.coeff({0}) == ct4);
  for (int n = 0; n <= 8; ++n) CHECK(M.Pbar({-n}) == rank1_pbar_closed(d, n));
}

TEST_CASE("bar routes agree and coefficients are nonnegative integers") {
  RootDatum d2 = RootDatum::build(Family::A, 2, LatticeChoice::P);
  MacCalc M2(d2);
  for (auto& b : d2.antidominant_box(2)) {
    CHECK(M2.check_bar_routes(b));
    CHECK(M2.check_bar_positive(b));
  }
  for (auto& b : d2.box(1)) CHECK(M2.check_bar_positive(b));
  RootDatum d1 = RootDatum::build(Family::A, 1, LatticeChoice::P);
  MacCalc M1(d1);
  for (int n = 0; n <= 4; ++n) {
    CHECK(M1.check_bar_routes({-n}));
    CHECK(M1.check_bar_positive({-n}));
    CHECK(M1.check_bar_positive({n}));
  }
}

TEST_CASE("evaluation formulas") {
  RootDatum d1 = RootDatum::build(Family::A, 1, LatticeChoice::P);
  MacCalc M1(d1);
  CHECK(M1.check_evaluation_E({0}));
  for (int b = -3; b <= 3; ++b) CHECK(M1.check_evaluation_E({b}));
  for (int n = 0; n <= 3; ++n) CHECK(M1.check_evaluation_P({-n}));

  RootDatum d2 = RootDatum::build(Family::A, 2, LatticeChoice::P);
  MacCalc M2(d2);
  for (auto& b : d2.box(1)) CHECK(M2.check_evaluation_E(b));
  CHECK(M2.check_evaluation_P({-1, -1}));
}

TEST_CASE("duality") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  MacCalc M(d);
  CHECK(M.check_duality_E({1}, {-1}));
  for (int b = -2; b <= 2; ++b)
    for (int c = -2; c <= 2; ++c) CHECK(M.check_duality_E({b}, {c}));
  CHECK(M.check_duality_P({-1}, {-2}));

  RootDatum d2 = RootDatum::build(Family::A, 2, LatticeChoice::P);
  MacCalc M2(d2);
  for (auto& b : d2.box(1))
    for (auto& c : d2.box(1)) CHECK(M2.check_duality_E(b, c));
}

TEST_CASE("L eigen-equations") {
  RootDatum d1 = RootDatum::build(Family::A, 1, LatticeChoice::P);
  MacCalc M1(d1);
  RatCoeff t = RatCoeff::ts_half_power(2);
  for (int n = 0; n <= 4; ++n) {
    CHECK(M1.check_l_eigen({1}, {-n}));
    RatCoeff expect = RatCoeff::v_power(-2 * n) + t * RatCoeff::v_power(2 * n);
    CHECK(M1.l_eigenvalue({1}, {-n}) == expect);
  }
  RootDatum d2 = RootDatum::build(Family::A, 2, LatticeChoice::P);
  MacCalc M2(d2);
  CHECK(M2.check_l_eigen({1, 0}, {0, -1}));
  CHECK(M2.check_l_eigen({0, 1}, {-1, -1}));
}

TEST_CASE("norms") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  MacCalc M(d);
  RatCoeff t = RatCoeff::ts_half_power(2);
  RatCoeff n1 = (RatCoeff(1) - qpow(d, 1)) * (RatCoeff(1) - t * t) /
                ((RatCoeff(1) - t * qpow(d, 1)) * (RatCoeff(1) - t));
  CHECK(M.norm_closed({-1}) == n1);
  CHECK(M.normbar_closed({-2}) ==
        (RatCoeff(1) - qpow(d, 1)) * (RatCoeff(1) - qpow(d, 2)));
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      CHECK(M.check_norm_series({-m}, {-n}, 28, false));
      CHECK(M.check_norm_series({-m}, {-n}, 28, true));
    }
  for (int n = 0; n <= 3; ++n) CHECK(M.check_norm_spherical({-n}));

  RootDatum d2 = RootDatum::build(Family::A, 2, LatticeChoice::P);
  MacCalc M2(d2);
  CHECK(M2.check_norm_spherical({-1, 0}));
  CHECK(M2.check_norm_spherical({-1, -1}));
  CHECK(M2.check_norm_series({-1, 0}, {-1, 0}, 24, false));
  CHECK(M2.check_norm_series({-1, 0}, {0, -1}, 24, false));
}

TEST_CASE("symmetry properties of P") {
  RootDatum d = RootDatum::build(Family::A, 2, LatticeChoice::P);
  MacCalc M(d);
  for (auto& b : d.antidominant_box(2)) {
    CHECK(M.check_p_inversion(b));
    CHECK(M.check_t_infinity(b));
    CHECK(M.check_classical_character(b));
  }
}

TEST_CASE("rank-one shift and raising operators") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  MacCalc M(d);
  for (int n = 1; n <= 6; ++n) {
    LatticePolynomial pn = M.Pbar({-n});
    LatticePolynomial lhs =
        divide_x_minus_xinv(gamma_shift(d, pn, 1) - gamma_shift(d, pn, -1))
            .scale(-RatCoeff::v_power(1));
    // eigenvalue -q^{1/4}(q^{n/2} - q^{-n/2}); the half-powers match the
    // Gamma step X -> q^{1/2} X
    RatCoeff ev = (RatCoeff::v_power(2 * n) - RatCoeff::v_power(-2 * n)) * RatCoeff::v_power(1);
    LatticePolynomial rhs = M.Pbar({-(n - 1)}).scale(-ev);
    CHECK(lhs == rhs);
    LatticePolynomial rn = divide_x_minus_xinv(
        gamma_shift(d, pn, -1).mul_monomial({2}) - gamma_shift(d, pn, 1).mul_monomial({-2}));
    CHECK(rn.scale(RatCoeff::v_power(2 * n)) == M.Pbar({-(n + 1)}));
  }
}

TEST_CASE("B2 sanity: intertwiner E, eigenproblem and evaluation") {
  RootDatum d = RootDatum::build(Family::B, 2, LatticeChoice::P);
  MacCalc M(d);
  for (auto& b : d.box(1)) {
    CHECK(M.check_y_eigen(b));
    CHECK(M.check_evaluation_E(b));
  }
  CHECK(M.check_evaluation_P({-1, 0}));
  CHECK(M.check_norm_spherical({-1, 0}));
  CHECK(M.check_bar_routes({-1, -1}));
}
