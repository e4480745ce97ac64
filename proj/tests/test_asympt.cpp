#include <doctest.h>

#include "whitdaha/asympt.hpp"

#include <cmath>

using namespace whitdaha;

TEST_CASE("sigma at k = 0 is identically one") {
  RootDatum d = RootDatum::build(Family::A, 2, LatticeChoice::P);
  NumericPoint pt;
  pt.q = 0.5;
  pt.k_short = pt.k_long = 0;
  cplx v = eval_sigma(d, pt, {cplx(0.9, 0.1), cplx(0.6, -0.2)});
  CHECK(std::abs(v - 1.0) < 1e-12);
}

TEST_CASE("sigma at k = 1 telescopes (A1)") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  NumericPoint pt;
  pt.q = 0.5;
  pt.k_short = pt.k_long = 1;
  // sigma(q^z) = prod_j (1-X q^{1+j})/(1-X q^j) = 1/(1-X), X = q^{(alpha,z)}
  cplx z(0.8, 0.0);
  cplx X = std::exp(std::log(pt.q) * pair_num(d, d.theta_short().w, {z}));
  cplx v = eval_sigma(d, pt, {z});
  CHECK(std::abs(v - 1.0 / (1.0 - X)) < 1e-11);
}

TEST_CASE("sigma near t = 0 matches the whittaker product (A1)") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  NumericPoint pt;
  pt.q = 0.5;
  pt.k_short = pt.k_long = 120;  // t = q^120, numerically zero
  cplx z(0.8, 0.0);
  cplx expect = 1;
  for (int j = 0; j < 200; ++j) {
    cplx X = std::exp(std::log(pt.q) * (pair_num(d, d.theta_short().w, {z}) + static_cast<double>(j)));
    expect /= (1.0 - X);
  }
  CHECK(std::abs(eval_sigma(d, pt, {z}) - expect) < 1e-10);
}

TEST_CASE("pole rejection in sigma") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  NumericPoint pt;
  pt.q = 0.5;
  pt.k_short = pt.k_long = 1;
  CHECK_THROWS(eval_sigma(d, pt, {cplx(0.0, 0.0)}));
}

TEST_CASE("sigma limit along the dominant direction") {
  NumericPoint pt;
  pt.q = 0.5;
  pt.k_short = pt.k_long = 1;
  {
    RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
    pt.x = {cplx(0.8, 0.0)};
    auto rep = sigma_limit_check(d, pt, 40, 1e-6);
    INFO(rep.result.detail);
    CHECK(rep.result.passed());
  }
  {
    RootDatum d = RootDatum::build(Family::A, 2, LatticeChoice::P);
    pt.x = {cplx(0.8, 0.0), cplx(0.7, 0.0)};
    auto rep = sigma_limit_check(d, pt, 40, 1e-6);
    INFO(rep.result.detail);
    CHECK(rep.result.passed());
  }
  {
    // orbit-sum variant at t = 1
    RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
    NumericPoint p0 = pt;
    p0.k_short = p0.k_long = 0;
    p0.x = {cplx(0.9, 0.0)};
    auto rep = sigma_limit_check(d, p0, 40, 1e-6);
    CHECK(rep.result.passed());
  }
  {
    // wall rejection
    RootDatum d = RootDatum::build(Family::A, 2, LatticeChoice::P);
    NumericPoint pw = pt;
    pw.x = {cplx(0.8, 0.0), cplx(0.0, 0.0)};
    auto rep = sigma_limit_check(d, pw, 10, 1e-6);
    CHECK(!rep.result.passed());
  }
}

TEST_CASE("harish-chandra asymptotics, rank one") {
  RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
  NumericPoint pt;
  pt.q = 0.5;
  pt.k_short = pt.k_long = 1;
  pt.x = {cplx(0.4, 0.0)};
  pt.lambda = {cplx(0.9, 0.0)};
  auto sph = harish_chandra_limit_check(d, pt, HarishKind::Spherical, 40, 1e-6);
  INFO(sph.result.detail);
  CHECK(sph.result.passed());
  auto wh = harish_chandra_limit_check(d, pt, HarishKind::Whittaker, 40, 1e-6);
  INFO(wh.result.detail);
  CHECK(wh.result.passed());
  auto wl = harish_chandra_limit_check(d, pt, HarishKind::WhittakerLambda, 40, 1e-8);
  INFO(wl.result.detail);
  CHECK(wl.result.passed());
  // csv emission shape
  std::string csv = residuals_csv(sph);
  CHECK(csv.find("n,residual") == 0);
}

TEST_CASE("theta functional equation") {
  {
    RootDatum d = RootDatum::build(Family::A, 1, LatticeChoice::P);
    auto r = theta_functional_equation_check(d, 0.7, {cplx(0.0, 0.0)}, 1e-10);
    INFO(r.detail);
    CHECK(r.passed());
    auto r2 = theta_functional_equation_check(d, 0.7, {cplx(0.3, 0.1)}, 1e-10);
    CHECK(r2.passed());
  }
  {
    RootDatum d = RootDatum::build(Family::A, 2, LatticeChoice::P);
    auto r = theta_functional_equation_check(d, 0.7, {cplx(0.2, 0.0), cplx(-0.1, 0.05)}, 1e-10);
    INFO(r.detail);
    CHECK(r.passed());
  }
}
