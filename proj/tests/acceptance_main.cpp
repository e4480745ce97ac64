// Acceptance suite: runs every criterion at its stated size and tolerance and
// prints one pass/fail line per criterion.
#include "whitdaha/asympt.hpp"
#include "whitdaha/globalfn.hpp"
#include "whitdaha/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace whitdaha;

namespace {

int failures = 0;

void criterion(int num, const std::string& text, const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] criterion %2d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", num, text.c_str(),
              secs, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

RootDatum datum(Family f, int r, LatticeChoice l = LatticeChoice::P) {
  return RootDatum::build(f, r, l);
}

bool relation_clean(const RootDatum& d, int degree, std::string& detail) {
  for (auto& r : verify_daha_relations(d, degree))
    if (!r.pass) {
      detail = d.type_string() + " " + r.relation_id + " witness " + r.witness;
      return false;
    }
  return true;
}

}  // namespace

int main() {
  // 1: relation suite
  criterion(1, "Hecke relation suite on monomial spans", [](std::string& detail) {
    RootDatum a1 = datum(Family::A, 1), a2 = datum(Family::A, 2), b2 = datum(Family::B, 2);
    RootDatum g2 = datum(Family::G, 2, LatticeChoice::Q);
    return relation_clean(a1, 3, detail) && relation_clean(a2, 3, detail) &&
           relation_clean(b2, 3, detail) && relation_clean(g2, 2, detail);
  });

  // 2: oracle equivalence
  criterion(2, "intertwiner route matches the orthogonality solver", [](std::string& detail) {
    struct Row {
      Family f;
      int rank, box, cutoff;
    };
    for (Row row : {Row{Family::A, 1, 4, 24}, Row{Family::A, 2, 2, 12}, Row{Family::B, 2, 2, 12}}) {
      RootDatum d = datum(row.f, row.rank);
      MacCalc M(d);
      for (auto& b : d.box(row.box)) {
        GramSchmidtResult gs = gram_schmidt_E(d, b, row.cutoff, false);
        if (gs.certified_order <= 0) {
          detail = d.type_string() + " no certified order at " + wt_str(b);
          return false;
        }
        LatticePolynomial e = M.E(b);
        for (auto& [c, kappa] : gs.coefficients) {
          RatCoeff exact = e.coeff(LatticePolynomial::Exp(c.begin(), c.end()));
          TruncatedQSeries expanded = TruncatedQSeries::from_ratcoeff(exact, 0, kappa.cutoff());
          if (!expanded.equal_to_order(kappa, kappa.cutoff())) {
            detail = d.type_string() + " mismatch at b=" + wt_str(b) + " c=" + wt_str(c);
            return false;
          }
        }
        // supplementary certificate at a higher order
        if (row.rank == 1 && orthogonality_certificate(d, e, b, 32, false) < 0) {
          detail = "orthogonality certificate failed at " + wt_str(b);
          return false;
        }
      }
    }
    return true;
  });

  // 3: rank-one golden values
  criterion(3, "rank-one golden polynomials", [](std::string& detail) {
    RootDatum d = datum(Family::A, 1);
    MacCalc M(d);
    RatCoeff q = RatCoeff::v_power(4);
    auto X = [&](int m) { return LatticePolynomial::monomial({m}); };
    LatticePolynomial one = LatticePolynomial::constant(1, RatCoeff(1));
    bool ok = M.Pbar({-2}) == X(2) + X(-2) + one.scale(RatCoeff(1) + q);
    RatCoeff c3 = (RatCoeff(1) - q.pow(3)) / (RatCoeff(1) - q);
    ok = ok && M.Pbar({-3}) == X(3) + X(-3) + (X(1) + X(-1)).scale(c3);
    RatCoeff ct4 = (RatCoeff(1) - q.pow(4)) * (RatCoeff(1) - q.pow(3)) /
                   ((RatCoeff(1) - q) * (RatCoeff(1) - q.pow(2)));
    ok = ok && M.Pbar({-4}).coeff({0}) == ct4;
    for (int n = 0; n <= 8 && ok; ++n) ok = M.Pbar({-n}) == rank1_pbar_closed(d, n);
    for (int n = 0; n <= 6 && ok; ++n) ok = M.P({-n}) == rank1_rogers_closed(d, n);
    if (!ok) detail = "closed-form mismatch";
    return ok;
  });

  // 4: evaluation and duality
  criterion(4, "evaluation and duality formulas on the sweep boxes", [](std::string& detail) {
    struct Row {
      Family f;
      int rank, box;
    };
    for (Row row : {Row{Family::A, 1, 4}, Row{Family::A, 2, 2}, Row{Family::B, 2, 2}}) {
      RootDatum d = datum(row.f, row.rank);
      MacCalc M(d);
      auto box = d.box(row.box);
      for (auto& b : box)
        if (!M.check_evaluation_E(b)) {
          detail = d.type_string() + " E evaluation at " + wt_str(b);
          return false;
        }
      for (auto& b : box)
        for (auto& c : box)
          if (!M.check_duality_E(b, c)) {
            detail = d.type_string() + " duality at " + wt_str(b) + wt_str(c);
            return false;
          }
      for (auto& b : d.antidominant_box(row.box)) {
        if (!M.check_evaluation_P(b)) {
          detail = d.type_string() + " P evaluation at " + wt_str(b);
          return false;
        }
        for (auto& c : d.antidominant_box(row.box))
          if (!M.check_duality_P(b, c)) {
            detail = d.type_string() + " P duality at " + wt_str(b) + wt_str(c);
            return false;
          }
      }
    }
    return true;
  });

  // 5: norms
  criterion(5, "norm formulas, exact to the certified series order", [](std::string& detail) {
    struct Row {
      Family f;
      int rank, box, cutoff;
    };
    for (Row row : {Row{Family::A, 1, 4, 24}, Row{Family::A, 2, 2, 12}, Row{Family::B, 2, 2, 12}}) {
      RootDatum d = datum(row.f, row.rank);
      MacCalc M(d);
      auto anti = d.antidominant_box(row.box);
      for (auto& b : anti) {
        if (!M.check_norm_spherical(b)) {
          detail = d.type_string() + " spherical norm at " + wt_str(b);
          return false;
        }
        for (auto& c : anti) {
          if (!(b <= c)) continue;
          if (!M.check_norm_series(b, c, row.cutoff, false)) {
            detail = d.type_string() + " norm at " + wt_str(b) + wt_str(c);
            return false;
          }
          if (!M.check_norm_series(b, c, row.cutoff, true)) {
            detail = d.type_string() + " bar norm at " + wt_str(b) + wt_str(c);
            return false;
          }
        }
      }
    }
    return true;
  });

  // 6: constant term and Mehta-Macdonald expansions
  criterion(6, "constant-term and gauss-weight normalizations", [](std::string& detail) {
    {
      RootDatum d = datum(Family::A, 2);
      MacCalc M(d);
      auto r = constant_term_check(M, 8 * d.two_mt(), false);  // q-order 8
      if (!r.passed()) {
        detail = "A2 constant term: " + r.detail;
        return false;
      }
      auto rm = mehta_macdonald_check(M, 12 * d.two_mt(), false);  // q-order 12
      if (!rm.passed()) {
        detail = "A2 gauss constant: " + rm.detail;
        return false;
      }
      auto rl = mehta_macdonald_check(M, 12 * d.two_mt(), true);
      if (!rl.passed()) {
        detail = "A2 bar gauss constant: " + rl.detail;
        return false;
      }
    }
    {
      RootDatum d = datum(Family::B, 2);
      MacCalc M(d);
      auto r = constant_term_check(M, 8 * d.two_mt(), false);
      if (!r.passed()) {
        detail = "B2 constant term: " + r.detail;
        return false;
      }
    }
    {
      RootDatum d = datum(Family::A, 1);
      MacCalc M(d);
      auto r = constant_term_check(M, 12 * d.two_mt(), false);  // q-order 12
      if (!r.passed()) {
        detail = "A1 constant term: " + r.detail;
        return false;
      }
      auto rm = mehta_macdonald_check(M, 12 * d.two_mt(), false);
      auto rl = mehta_macdonald_check(M, 12 * d.two_mt(), true);
      if (!rm.passed() || !rl.passed()) {
        detail = "A1 gauss constants";
        return false;
      }
    }
    return true;
  });

  // 7: q-Gauss integrals
  criterion(7, "q-Gauss integral normalizations", [](std::string& detail) {
    for (int rank : {1, 2}) {
      RootDatum d = datum(Family::A, rank);
      MacCalc M(d);
      int cutoff = 10 * d.two_mt();  // q-order 10
      std::vector<Wt> labels;
      for (auto& b : d.box(2)) {
        bool ok = true;
        for (int v : b) ok = ok && v <= 0 && v >= -2;
        if (ok && d.is_antidominant(b)) labels.push_back(b);
      }
      for (auto& b : labels)
        for (auto& c : labels) {
          if (!(b <= c)) continue;
          auto r = gauss_integral_check(M, b, c, cutoff, false);
          if (!r.passed()) {
            detail = d.type_string() + " " + r.id + ": " + r.detail;
            return false;
          }
          auto rb = gauss_integral_check(M, b, c, cutoff, true);
          if (!rb.passed()) {
            detail = d.type_string() + " " + rb.id + ": " + rb.detail;
            return false;
          }
        }
    }
    return true;
  });

  // 8: Shintani identities
  criterion(8, "Shintani-type summation identities", [](std::string& detail) {
    {
      RootDatum d = datum(Family::A, 1);
      MacCalc M(d);
      for (int n = 0; n <= 2; ++n) {
        auto r = shintani_check(M, {-n}, 16);
        if (!r.passed()) {
          detail = r.id + ": " + r.detail;
          return false;
        }
      }
    }
    {
      RootDatum d = datum(Family::A, 2);
      MacCalc M(d);
      for (Wt c : {Wt{0, 0}, Wt{-1, 0}, Wt{-1, -1}}) {
        auto r = shintani_check(M, c, 8 * d.two_mt());
        if (!r.passed()) {
          detail = r.id + ": " + r.detail;
          return false;
        }
      }
    }
    return true;
  });

  // 9: q-Toda eigen-equations
  criterion(9, "q-Toda difference eigen-equations", [](std::string& detail) {
    RootDatum d1 = datum(Family::A, 1);
    MacCalc M1(d1);
    auto rx = toda_eigencheck(M1, TodaKind::Rank1X, {1}, 16);
    auto rl = toda_eigencheck(M1, TodaKind::Rank1Lambda, {1}, 16);
    if (!rx.passed() || !rl.passed()) {
      detail = "rank-one eigen-equations";
      return false;
    }
    RootDatum d2 = datum(Family::A, 2);
    MacCalc M2(d2);
    auto ra = toda_eigencheck(M2, TodaKind::LambdaGeneral, {1, 0}, 4 * d2.two_mt());
    if (!ra.passed()) {
      detail = "A2 lambda-side: " + ra.detail;
      return false;
    }
    auto rm = toda_eigencheck(M2, TodaKind::MinusculeX, {1, 0}, 4 * d2.two_mt());
    if (!rm.passed()) {
      detail = "A2 x-side: " + rm.detail;
      return false;
    }
    // shift and raising operator identities, n <= 6, exact
    auto gamma_shift = [&](const LatticePolynomial& f, int sign) {
      return f.map_terms([&](const LatticePolynomial::Exp& e, const RatCoeff& c) {
        return std::make_pair(e, c * RatCoeff::v_power(sign * d1.v_exponent_of_pairing({e[0]}, {1})));
      });
    };
    auto ddiv = [&](const LatticePolynomial& f) {
      return f.mul_monomial({1}).divide_monomial_minus_one({2}, 0);
    };
    for (int n = 1; n <= 6; ++n) {
      LatticePolynomial pn = M1.Pbar({-n});
      LatticePolynomial lhs =
          ddiv(gamma_shift(pn, 1) - gamma_shift(pn, -1)).scale(-RatCoeff::v_power(1));
      RatCoeff ev = (RatCoeff::v_power(2 * n) - RatCoeff::v_power(-2 * n)) * RatCoeff::v_power(1);
      if (!(lhs == M1.Pbar({-(n - 1)}).scale(-ev))) {
        detail = "shift operator at n=" + std::to_string(n);
        return false;
      }
      LatticePolynomial rn = ddiv(gamma_shift(pn, -1).mul_monomial({2}) -
                                  gamma_shift(pn, 1).mul_monomial({-2}));
      if (!(rn.scale(RatCoeff::v_power(2 * n)) == M1.Pbar({-(n + 1)}))) {
        detail = "raising operator at n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  // 10: Jackson summation at the Whittaker point
  criterion(10, "Jackson summation identity, Whittaker form", [](std::string& detail) {
    RootDatum d1 = datum(Family::A, 1);
    MacCalc M1(d1);
    auto r1 = jackson_whittaker_check(M1, 12);
    if (!r1.passed()) {
      detail = r1.id + ": " + r1.detail;
      return false;
    }
    RootDatum d2 = datum(Family::A, 2);
    MacCalc M2(d2);
    auto r2 = jackson_whittaker_check(M2, 4 * d2.two_mt());
    if (!r2.passed()) {
      detail = r2.id + ": " + r2.detail;
      return false;
    }
    return true;
  });

  // 11: sigma limit
  criterion(11, "limit of renormalized polynomials to the sigma product", [](std::string& detail) {
    NumericPoint pt;
    pt.q = 0.5;
    pt.k_short = pt.k_long = 1;
    pt.x = {cplx(0.8, 0.0)};
    RootDatum d1 = datum(Family::A, 1);
    auto r1 = sigma_limit_check(d1, pt, 40, 1e-6);
    if (!r1.result.passed()) {
      detail = "A1: " + r1.result.detail;
      return false;
    }
    RootDatum d2 = datum(Family::A, 2);
    pt.x = {cplx(0.8, 0.0), cplx(0.7, 0.0)};
    auto r2 = sigma_limit_check(d2, pt, 40, 1e-6);
    if (!r2.result.passed()) {
      detail = "A2: " + r2.result.detail;
      return false;
    }
    return true;
  });

  // 12: Harish-Chandra-type asymptotics
  criterion(12, "asymptotics of the global functions", [](std::string& detail) {
    RootDatum d = datum(Family::A, 1);
    NumericPoint pt;
    pt.q = 0.5;
    pt.k_short = pt.k_long = 1;
    pt.x = {cplx(0.4, 0.0)};
    pt.lambda = {cplx(0.9, 0.0)};
    auto rs = harish_chandra_limit_check(d, pt, HarishKind::Spherical, 40, 1e-6);
    if (!rs.result.passed()) {
      detail = "spherical: " + rs.result.detail;
      return false;
    }
    auto rw = harish_chandra_limit_check(d, pt, HarishKind::Whittaker, 40, 1e-6);
    if (!rw.result.passed()) {
      detail = "whittaker: " + rw.result.detail;
      return false;
    }
    auto rl = harish_chandra_limit_check(d, pt, HarishKind::WhittakerLambda, 40, 1e-8);
    if (!rl.result.passed()) {
      detail = "lambda mode: " + rl.result.detail;
      return false;
    }
    return true;
  });

  // 13: theta functional equation
  criterion(13, "theta functional equation under the dual lattice", [](std::string& detail) {
    RootDatum d1 = datum(Family::A, 1);
    auto r1 = theta_functional_equation_check(d1, 0.7, {cplx(0.3, 0.1)}, 1e-10);
    if (!r1.passed()) {
      detail = "A1: " + r1.detail;
      return false;
    }
    RootDatum d2 = datum(Family::A, 2);
    auto r2 = theta_functional_equation_check(d2, 0.7, {cplx(0.2, 0.0), cplx(-0.1, 0.05)}, 1e-10);
    if (!r2.passed()) {
      detail = "A2: " + r2.detail;
      return false;
    }
    return true;
  });

  // 14: positivity of the t=0 coefficients
  criterion(14, "nonnegative integral q-coefficients of the t=0 polynomials",
            [](std::string& detail) {
              struct Row {
                Family f;
                int rank, box;
              };
              for (Row row : {Row{Family::A, 1, 4}, Row{Family::A, 2, 2}, Row{Family::B, 2, 2}}) {
                RootDatum d = datum(row.f, row.rank);
                MacCalc M(d);
                for (auto& b : d.box(row.box))
                  if (!M.check_bar_positive(b)) {
                    detail = d.type_string() + " at " + wt_str(b);
                    return false;
                  }
              }
              return true;
            });

  std::printf("%s: %d criteria failed\n", failures ? "FAILURE" : "SUCCESS", failures);
  return failures ? 1 : 0;
}
