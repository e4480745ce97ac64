#include "whitdaha/globalfn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace whitdaha {

namespace {

LatticePolynomial::Exp to_exp(const Wt& b) {
  return LatticePolynomial::Exp(b.begin(), b.end());
}

// Place a rank-n polynomial into a rank-`total` exponent at offset `off`.
LatticePolynomial embed_poly(const LatticePolynomial& p, int total, int off) {
  LatticePolynomial out(total);
  for (auto& [x, c] : p.terms()) {
    LatticePolynomial::Exp e(static_cast<std::size_t>(total), 0);
    for (std::size_t k = 0; k < x.size(); ++k) e[static_cast<std::size_t>(off) + k] = x[k];
    out.add_term(e, c);
  }
  return out;
}

// v-grade a polynomial whose coefficients may carry v-powers.
TruncatedQSeries series_of_poly(const LatticePolynomial& p, int base, int cutoff) {
  TruncatedQSeries s(p.rank(), cutoff);
  for (auto& [x, c] : p.terms()) {
    TruncatedQSeries cs = TruncatedQSeries::from_ratcoeff(c, 0, cutoff - base);
    for (auto& [k, cp] : cs.coeffs())
      s.add_term(base + k, x, cp.coeff(LatticePolynomial::Exp{}));
  }
  return s;
}

// Lift a scalar series to a given rank.
TruncatedQSeries lift_scalar(const TruncatedQSeries& s, int rank) {
  TruncatedQSeries out(rank, s.cutoff());
  LatticePolynomial::Exp zero(static_cast<std::size_t>(rank), 0);
  for (auto& [e, p] : s.coeffs()) out.add_term(e, zero, p.coeff(LatticePolynomial::Exp{}));
  return out;
}

int v_valuation(const RatCoeff& c) {
  if (c.is_zero()) return 0;
  return c.num().valuation(0) - c.den().valuation(0);
}

// Euler-type factor series: product over i of prod_{j>=1} (1-q_i^j)^{sign}.
TruncatedQSeries euler_product(const RootDatum& d, int rank, int cutoff, int sign) {
  TruncatedQSeries s = TruncatedQSeries::one(rank, cutoff);
  LatticePolynomial::Exp zero(static_cast<std::size_t>(rank), 0);
  for (int i = 1; i <= d.rank(); ++i) {
    int qi = d.two_mt() * d.nu()[static_cast<std::size_t>(i - 1)];
    for (int j = 1; qi * j <= cutoff; ++j)
      s = s.mul_one_plus(qi * j, zero, RatCoeff(-1), sign);
  }
  return s;
}

// prod_{alpha>0} prod_{j>=1} (1 - tpart * q^{(rho_k,alpha)} q_alpha^j) with
// tpart in {1, t_a, 1/t_a} selected by tsel (0, +1, -1).
TruncatedQSeries rho_k_product(const RootDatum& d, int rank, int cutoff, int tsel, int sign) {
  TruncatedQSeries s = TruncatedQSeries::one(rank, cutoff);
  LatticePolynomial::Exp zero(static_cast<std::size_t>(rank), 0);
  auto rk = d.plus_rho_k();
  for (auto& r : d.positive_roots()) {
    RatCoeff xa = evaluate_monomial_block(d, to_exp(r.w), rk, 0);
    RatCoeff ta = (r.nu == 1) ? RatCoeff::ts_half_power(2) : RatCoeff::tl_half_power(2);
    RatCoeff c = xa;
    if (tsel > 0) c = c * ta;
    if (tsel < 0) c = c * ta.inverse();
    int qa = d.two_mt() * r.nu;
    for (int j = 1; qa * j <= cutoff; ++j)
      s = s.mul_one_plus(qa * j, zero, -c, sign);
  }
  return s;
}

// Needed source cutoff so an operator with shift a produces output exact to N,
// for series whose terms satisfy (v-exponent) >= m~ (c,c) on the acted block.
int shifted_source_cutoff(const RootDatum& d, const Wt& a, int n_target) {
  mpq_class aa = d.pairing(a, a) * d.m_tilde();
  double s = std::sqrt(aa.get_d());
  double x = s + std::sqrt(s * s + std::max(0, n_target));
  return static_cast<int>(std::ceil(x * x)) + 1;
}

// Apply a cleared factored operator to a series on the block at `off`.
TruncatedQSeries apply_factored_to_series(const RootDatum& d, const DiffOperator& op,
                                          const TruncatedQSeries& s, int off, int n_target) {
  const int n = d.rank();
  TruncatedQSeries acc(s.rank(), n_target);
  for (auto& t : op.terms) {
    if (!t.den.empty())
      throw std::invalid_argument("apply_factored_to_series: denominators not cleared");
    if (s.cutoff() < shifted_source_cutoff(d, t.shift, n_target))
      throw std::invalid_argument("apply_factored_to_series: source series too short");
    TruncatedQSeries shifted(s.rank(), n_target);
    for (auto& [e, p] : s.coeffs()) {
      for (auto& [x, c] : p.terms()) {
        Wt blk(x.begin() + off, x.begin() + off + n);
        int dv = d.v_exponent_of_pairing(t.shift, blk);
        if (e + dv > n_target) continue;
        shifted.add_term(e + dv, x, c);
      }
    }
    LatticePolynomial mult = LatticePolynomial::constant(s.rank(), RatCoeff(1));
    LatticePolynomial::Exp sx(static_cast<std::size_t>(s.rank()), 0);
    for (int k = 0; k < n; ++k) sx[static_cast<std::size_t>(off + k)] = t.scalar_x[static_cast<std::size_t>(k)];
    mult = mult.mul_monomial(sx);
    for (auto& f : t.num) {
      LatticePolynomial::Exp mx(static_cast<std::size_t>(s.rank()), 0);
      for (int k = 0; k < n; ++k) mx[static_cast<std::size_t>(off + k)] = f.mu[static_cast<std::size_t>(k)];
      LatticePolynomial bin = LatticePolynomial::constant(s.rank(), RatCoeff(1));
      bin.add_term(mx, -f.c);
      mult = mult * bin;
    }
    TruncatedQSeries piece(s.rank(), n_target);
    for (auto& [e, p] : shifted.coeffs()) piece.add(e, p * mult);
    // the scalar may carry v-powers picked up by the limit normalization
    acc += piece.mul_ratcoeff(t.scalar);
  }
  acc.set_cutoff(n_target);
  return acc;
}

std::string mismatch_str(const std::optional<int>& e) {
  if (!e) return "";
  std::ostringstream os;
  os << "first mismatch at v^" << *e;
  return os.str();
}

CheckResult series_verdict(const std::string& id, const std::string& anchor,
                           const TruncatedQSeries& lhs, const TruncatedQSeries& rhs,
                           int order) {
  int ord = std::min({order, lhs.cutoff(), rhs.cutoff()});
  auto mm = lhs.first_mismatch(rhs, ord);
  if (!mm) {
    CheckResult r = CheckResult::pass(id, anchor);
    r.detail = "order v^" + std::to_string(ord);
    return r;
  }
  return CheckResult::fail(id, anchor, mismatch_str(mm));
}

}  // namespace

std::vector<WhittakerTerm> whittaker_terms(MacCalc& M, int cutoff) {
  const RootDatum& d = M.datum();
  std::vector<WhittakerTerm> out;
  mpq_class bound = mpq_class(cutoff) / d.m_tilde();
  for (auto& b : d.lattice_ball(bound)) {
    if (!d.is_antidominant(b)) continue;
    WhittakerTerm t;
    t.b = b;
    mpq_class ve = d.pairing(b, b) * d.m_tilde();
    t.base = static_cast<int>(ve.get_num().get_si());
    t.pbar_inv = M.Pbar(b).invert_block();
    t.denom = M.normbar_closed(b);
    out.push_back(std::move(t));
  }
  return out;
}

TruncatedQSeries build_psi_whittaker(MacCalc& M, int cutoff) {
  const RootDatum& d = M.datum();
  const int n = d.rank();
  TruncatedQSeries s(2 * n, cutoff);
  for (auto& t : whittaker_terms(M, cutoff)) {
    Wt bp = d.w0(t.b);
    LatticePolynomial part = embed_poly(t.pbar_inv, 2 * n, n).mul_monomial([&] {
      LatticePolynomial::Exp e(static_cast<std::size_t>(2 * n), 0);
      for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k)] = bp[static_cast<std::size_t>(k)];
      return e;
    }());
    s += series_of_poly(part, t.base, cutoff).mul_ratcoeff(t.denom.inverse());
  }
  s.set_cutoff(cutoff);
  return s;
}

TruncatedQSeries psi_whittaker_at_x(MacCalc& M, const Wt& xpt, int cutoff) {
  const RootDatum& d = M.datum();
  const int n = d.rank();
  TruncatedQSeries s(n, cutoff);
  // contributing set: m~(c,c) - 2 m~ |(c_+, xpt)| can reach below the cutoff
  mpq_class xx = d.pairing(xpt, xpt);
  double sq = std::sqrt(xx.get_d());
  double rad = sq + std::sqrt(std::max(0.0, sq * sq + cutoff / static_cast<double>(d.m_tilde())));
  mpq_class bound(static_cast<long>(std::ceil(rad * rad)) + 1);
  auto pt = d.lattice_point(xpt);
  for (auto& b : d.lattice_ball(bound)) {
    if (!d.is_antidominant(b)) continue;
    Wt bp = d.w0(b);
    mpq_class ve = d.pairing(b, b) * d.m_tilde();
    int base = static_cast<int>(ve.get_num().get_si());
    RatCoeff xval = evaluate_monomial_block(d, to_exp(bp), pt, 0);
    int val = v_valuation(xval);
    if (base + val > cutoff) continue;
    LatticePolynomial pb = M.Pbar(b).invert_block();
    TruncatedQSeries piece = series_of_poly(pb, base, cutoff - val);
    piece = piece.mul_ratcoeff(xval * M.normbar_closed(b).inverse());
    piece.set_cutoff(cutoff);
    s += piece;
  }
  s.set_cutoff(cutoff);
  return s;
}

TruncatedQSeries build_psi_qt(MacCalc& M, int cutoff) {
  const RootDatum& d = M.datum();
  const int n = d.rank();
  TruncatedQSeries s(2 * n, cutoff);
  mpq_class bound = mpq_class(cutoff) / d.m_tilde();
  for (auto& b : d.lattice_ball(bound)) {
    if (!d.is_antidominant(b)) continue;
    mpq_class ve = d.pairing(b, b) * d.m_tilde();
    int base = static_cast<int>(ve.get_num().get_si());
    LatticePolynomial pb = M.P(b);
    LatticePolynomial part = embed_poly(pb, 2 * n, 0) * embed_poly(pb.invert_block(), 2 * n, n);
    RatCoeff w = M.rep().q_rho_k_pairing(b).inverse() / M.norm_closed(b);
    s += series_of_poly(part, base, cutoff).mul_ratcoeff(w);
  }
  s.set_cutoff(cutoff);
  return s;
}

CheckResult mehta_macdonald_check(MacCalc& M, int cutoff, bool t_zero) {
  const RootDatum& d = M.datum();
  std::string id = std::string("mehta_macdonald_") + (t_zero ? "bar_" : "") + d.type_string();
  std::string anchor = t_zero ? "mehtamul" : "mehtamu";
  // window: heights of the gauss ball
  mpq_class lo = 0, hi = 0;
  mpq_class bound = mpq_class(cutoff) / d.m_tilde();
  std::vector<Wt> ball = d.lattice_ball(bound);
  for (auto& b : ball) {
    mpq_class h = -d.coroot_height(b);
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  MuExpansion ex(d, cutoff, lo, hi, t_zero);
  TruncatedQSeries lhs(0, cutoff);
  for (auto& b : ball) {
    mpq_class ve = d.pairing(b, b) * d.m_tilde();
    int base = static_cast<int>(ve.get_num().get_si());
    Wt neg = b;
    for (auto& v : neg) v = -v;
    lhs += ex.coefficient(to_exp(neg)).shift_v(base);
  }
  lhs.set_cutoff(cutoff);
  lhs = lhs * ex.constant_term().inverse();
  TruncatedQSeries rhs = t_zero ? euler_product(d, 0, lhs.cutoff(), 1)
                                : rho_k_product(d, 0, lhs.cutoff(), -1, 1) *
                                      rho_k_product(d, 0, lhs.cutoff(), 0, -1);
  return series_verdict(id, anchor, lhs, rhs, std::min(lhs.cutoff(), rhs.cutoff()));
}

CheckResult constant_term_check(MacCalc& M, int cutoff, bool t_zero) {
  const RootDatum& d = M.datum();
  std::string id = std::string("constant_term_") + (t_zero ? "bar_" : "") + d.type_string();
  std::string anchor = t_zero ? "constermbar" : "consterm";
  LatticePolynomial one = LatticePolynomial::constant(d.rank(), RatCoeff(1));
  TruncatedQSeries lhs = mu_pairing(d, one, cutoff, t_zero);
  TruncatedQSeries rhs;
  if (t_zero) {
    rhs = euler_product(d, 0, cutoff, -1);
  } else {
    // prod (1-q^{(rho_k,alpha)+j nu})^2 / ((1-t q^{..})(1-t^{-1} q^{..}))
    rhs = rho_k_product(d, 0, cutoff, 0, 1) * rho_k_product(d, 0, cutoff, 0, 1) *
          rho_k_product(d, 0, cutoff, 1, -1) * rho_k_product(d, 0, cutoff, -1, -1);
  }
  return series_verdict(id, anchor, lhs, rhs, std::min(lhs.cutoff(), rhs.cutoff()));
}

CheckResult gauss_integral_check(MacCalc& M, const Wt& b, const Wt& c, int cutoff, bool t_zero) {
  const RootDatum& d = M.datum();
  std::string id = std::string("gauss_integral_") + (t_zero ? "bar_" : "") + d.type_string() +
                   "_" + wt_str(b) + wt_str(c);
  std::string anchor = t_zero ? "pbgaussl" : "pbgauss";
  LatticePolynomial pb = t_zero ? M.Pbar(b) : M.P(b);
  LatticePolynomial pc = t_zero ? M.Pbar(c) : M.P(c);
  TruncatedQSeries S = grade_by_v(pb, 0, cutoff) * grade_by_v(pc, 0, cutoff);
  S.set_cutoff(cutoff);
  S = S * gauss_theta_series(d, cutoff);
  S.set_cutoff(cutoff);
  mpq_class lo = 0, hi = 0;
  for (auto& [e, p] : S.coeffs())
    for (auto& [x, cc] : p.terms()) {
      mpq_class h = -d.coroot_height(Wt(x.begin(), x.end()));
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
  MuExpansion ex(d, cutoff, lo, hi, t_zero);
  TruncatedQSeries lhs = ex.pair_series(S) * ex.constant_term().inverse();

  // normalization <gauss mu_o> as a series
  TruncatedQSeries gm = t_zero ? euler_product(d, 0, cutoff, 1)
                               : rho_k_product(d, 0, cutoff, -1, 1) *
                                     rho_k_product(d, 0, cutoff, 0, -1);
  Wt bc = b;
  for (int i = 0; i < d.rank(); ++i) bc[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i)];
  int vsq = (d.v_exponent_of_pairing(b, b) + d.v_exponent_of_pairing(c, c)) / 2;
  RatCoeff scalar;
  if (t_zero) {
    Wt cp = d.w0(c);
    scalar = RatCoeff::v_power(vsq + d.v_exponent_of_pairing(cp, b));
  } else {
    scalar = RatCoeff::v_power(vsq) * M.rep().q_rho_k_pairing(bc).inverse() *
             M.eval(M.P(c), d.lattice_minus_rho_k(b)) * M.P_eval_closed(b);
  }
  TruncatedQSeries rhs = gm.mul_ratcoeff(scalar);
  return series_verdict(id, anchor, lhs, rhs, std::min(lhs.cutoff(), rhs.cutoff()));
}

CheckResult shintani_check(MacCalc& M, const Wt& c, int cutoff) {
  const RootDatum& d = M.datum();
  const int n = d.rank();
  std::string id = "shintani_" + d.type_string() + "_" + wt_str(c);
  TruncatedQSeries lhs(n, cutoff);
  mpq_class bound = mpq_class(cutoff) / d.m_tilde();
  for (auto& a : d.lattice_ball(bound)) {
    Wt b = c;
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] -= a[static_cast<std::size_t>(i)];
    if (!d.is_antidominant(b)) continue;
    mpq_class ve = d.pairing(a, a) * d.m_tilde();
    int base = static_cast<int>(ve.get_num().get_si());
    lhs += series_of_poly(M.Pbar(b), base, cutoff).mul_ratcoeff(M.normbar_closed(b).inverse());
  }
  lhs.set_cutoff(cutoff);
  TruncatedQSeries rhs = gauss_theta_series(d, cutoff) * series_of_poly(M.Pbar(c), 0, cutoff);
  rhs = rhs * euler_product(d, n, rhs.cutoff(), -1);
  return series_verdict(id, "shintqg", lhs, rhs, std::min(lhs.cutoff(), rhs.cutoff()));
}

namespace {

// Psi with one side specialized at q^{c - rho_k}; `lambda_side` picks which.
TruncatedQSeries psi_qt_specialized(MacCalc& M, const Wt& c, int cutoff, bool lambda_side) {
  const RootDatum& d = M.datum();
  const int n = d.rank();
  auto pt = d.lattice_minus_rho_k(c);
  mpq_class cc = d.pairing(c, c);
  double sq = std::sqrt(cc.get_d());
  double rad = sq + std::sqrt(std::max(0.0, sq * sq + cutoff / static_cast<double>(d.m_tilde())));
  mpq_class bound(static_cast<long>(std::ceil(rad * rad)) + 1);
  TruncatedQSeries s(n, cutoff);
  for (auto& b : d.lattice_ball(bound)) {
    if (!d.is_antidominant(b)) continue;
    mpq_class ve = d.pairing(b, b) * d.m_tilde();
    int base = static_cast<int>(ve.get_num().get_si());
    LatticePolynomial pb = M.P(b);
    RatCoeff spec = lambda_side ? M.eval(pb.invert_block(), pt) : M.eval(pb, pt);
    if (spec.is_zero()) continue;
    RatCoeff w = M.rep().q_rho_k_pairing(b).inverse() / M.norm_closed(b) * spec;
    int val = v_valuation(w);
    if (base + val > cutoff) continue;
    LatticePolynomial free_part = lambda_side ? pb : pb.invert_block();
    TruncatedQSeries piece = series_of_poly(free_part, base, cutoff - std::min(0, val));
    piece = piece.mul_ratcoeff(w);
    piece.set_cutoff(cutoff);
    s += piece;
  }
  s.set_cutoff(cutoff);
  return s;
}

}  // namespace

CheckResult spherical_shintani_check(MacCalc& M, const Wt& c, int cutoff, bool swap_roles) {
  const RootDatum& d = M.datum();
  const int n = d.rank();
  std::string id = std::string("spherical_shintani_") + (swap_roles ? "dual_" : "") +
                   d.type_string() + "_" + wt_str(c);
  // Psi(X, q^{c-rho_k}) gauss(rho_k) P_c(q^{-rho_k}) Den
  //   = gauss_X gauss(q^{c-rho_k}) P_c(X) Num
  TruncatedQSeries psi_spec = psi_qt_specialized(M, c, cutoff, !swap_roles);
  TruncatedQSeries g_rk = lift_scalar(gauss_theta_value(d, d.plus_rho_k(), cutoff), n);
  TruncatedQSeries den_inf = rho_k_product(d, n, cutoff, -1, 1);
  TruncatedQSeries lhs = psi_spec * g_rk;
  lhs = lhs.mul_ratcoeff(M.P_eval_closed(c)) * den_inf;

  TruncatedQSeries g_x = gauss_theta_series(d, cutoff);
  TruncatedQSeries g_c = lift_scalar(gauss_theta_value(d, d.lattice_minus_rho_k(c), cutoff), n);
  LatticePolynomial pc = swap_roles ? M.P(c).invert_block() : M.P(c);
  TruncatedQSeries num_inf = rho_k_product(d, n, cutoff, 0, 1);
  TruncatedQSeries rhs = g_x * g_c;
  rhs = rhs * series_of_poly(pc, 0, rhs.cutoff());
  rhs = rhs * num_inf;
  return series_verdict(id, "hatmuxsym", lhs, rhs, std::min(lhs.cutoff(), rhs.cutoff()));
}

CheckResult whittaker_limit_check(MacCalc& M, int cutoff) {
  const RootDatum& d = M.datum();
  std::string id = "whittaker_limit_" + d.type_string();
  mpq_class bound = mpq_class(cutoff) / d.m_tilde();
  for (auto& b : d.lattice_ball(bound)) {
    if (!d.is_antidominant(b)) continue;
    // q^{-(rho_k,b)} P_b(q^{-rho_k} X) -> X_{b_+} at t = 0
    LatticePolynomial shifted = shift_block(d, M.P(b), d.minus_rho_k(), 0)
                                    .scale(M.rep().q_rho_k_pairing(b).inverse());
    LatticePolynomial lim = shifted.at_t_zero();
    Wt bp = d.w0(b);
    if (!(lim == LatticePolynomial::monomial(to_exp(bp))))
      return CheckResult::fail(id, "whitpsi", "leading limit fails at b=" + wt_str(b));
    if (!(M.norm_closed(b).at_t_zero() == M.normbar_closed(b)))
      return CheckResult::fail(id, "whitpsi", "norm limit fails at b=" + wt_str(b));
    if (!M.check_bar_routes(b))
      return CheckResult::fail(id, "whitpsi", "coefficient limit fails at b=" + wt_str(b));
  }
  return CheckResult::pass(id, "whitpsi");
}

CheckResult psi_qt_symmetry_check(MacCalc& M, int cutoff) {
  const RootDatum& d = M.datum();
  std::string id = "psi_symmetry_" + d.type_string();
  mpq_class bound = mpq_class(cutoff) / d.m_tilde();
  for (auto& b : d.lattice_ball(bound)) {
    if (!d.is_antidominant(b)) continue;
    Wt sb = d.w0(b);
    for (auto& v : sb) v = -v;  // varsigma(b), antidominant again
    if (!(M.P(b).invert_block() == M.P(sb)))
      return CheckResult::fail(id, "pexla", "inversion fails at b=" + wt_str(b));
    if (!(M.norm_closed(b) == M.norm_closed(sb)))
      return CheckResult::fail(id, "pexla", "norm asymmetry at b=" + wt_str(b));
    if (!(M.rep().q_rho_k_pairing(b) == M.rep().q_rho_k_pairing(sb)))
      return CheckResult::fail(id, "pexla", "weight asymmetry at b=" + wt_str(b));
  }
  return CheckResult::pass(id, "pexla");
}

CheckResult toda_eigencheck(MacCalc& M, TodaKind kind, const Wt& a_plus, int cutoff) {
  const RootDatum& d = M.datum();
  const int n = d.rank();
  switch (kind) {
    case TodaKind::Rank1X: {
      if (n != 1) return CheckResult::skip("toda_rank1_x", "LfLaWa1", "rank-one only");
      // Ltilde_gamma = q^{1/4}( X Gamma + X^{-1} Gamma^{-1} - X^{-1} Gamma )
      DiffOperator op;
      auto term = [&](int sx, int shift, int sign) {
        DiffOperator::Term t;
        t.scalar = RatCoeff::v_power(1) * RatCoeff(sign);
        t.scalar_x = Wt{sx};
        t.shift = Wt{shift};
        return t;
      };
      op.terms = {term(1, 1, 1), term(-1, -1, 1), term(-1, 1, -1)};
      int src = shifted_source_cutoff(d, {1}, cutoff);
      TruncatedQSeries psi = build_psi_whittaker(M, src);
      TruncatedQSeries lhs = apply_factored_to_series(d, op, psi, 0, cutoff);
      LatticePolynomial ev(2);
      ev.add_term({0, 1}, RatCoeff(1));
      ev.add_term({0, -1}, RatCoeff(1));
      TruncatedQSeries rhs = psi.mul_poly(ev);
      rhs.set_cutoff(cutoff);
      return series_verdict("toda_rank1_x", "LfLaWa1", lhs, rhs, cutoff);
    }
    case TodaKind::Rank1Lambda: {
      if (n != 1) return CheckResult::skip("toda_rank1_lambda", "LfLaduala1", "rank-one only");
      DiffOperator gplus, gminus;
      DiffOperator::Term tp;
      tp.scalar = RatCoeff(1);
      tp.scalar_x = Wt{0};
      tp.shift = Wt{1};
      gplus.terms = {tp};
      tp.shift = Wt{-1};
      gminus.terms = {tp};
      int src = shifted_source_cutoff(d, {1}, cutoff);
      TruncatedQSeries psi = build_psi_whittaker(M, src);
      TruncatedQSeries diff = apply_factored_to_series(d, gplus, psi, 1, cutoff) -
                              apply_factored_to_series(d, gminus, psi, 1, cutoff);
      // divide by (La - La^{-1}) coefficientwise and scale by -q^{1/4}
      TruncatedQSeries lhs(2, diff.cutoff());
      for (auto& [e, p] : diff.coeffs()) {
        LatticePolynomial g = p.mul_monomial({0, 1}).divide_monomial_minus_one({0, 2}, 0);
        lhs.add(e, g);
      }
      lhs = lhs.mul_ratcoeff(-RatCoeff::v_power(1));
      TruncatedQSeries rhs = psi.mul_poly(LatticePolynomial::monomial({1, 0}));
      rhs.set_cutoff(lhs.cutoff());
      return series_verdict("toda_rank1_lambda", "LfLaduala1", lhs, rhs,
                            std::min(lhs.cutoff(), rhs.cutoff()));
    }
    case TodaKind::MinusculeX: {
      bool minuscule = false;
      for (int r : d.minuscule_indices()) {
        Wt w(static_cast<std::size_t>(n), 0);
        w[static_cast<std::size_t>(r - 1)] = 1;
        minuscule = minuscule || w == a_plus;
      }
      if (!minuscule)
        return CheckResult::skip("toda_minuscule_x_" + d.type_string(), "LfLaW",
                                 "unsupported: not a minuscule weight");
      DiffOperator op = toda_operator_minuscule(d, a_plus);
      // gamma-twist: Gamma_a -> q^{(a,a)/2} X_a Gamma_a, matching the
      // Gaussian-multiplied series the eigen-equation acts on
      for (auto& t : op.terms) {
        mpq_class aa = d.pairing(t.shift, t.shift) * d.m_tilde();
        t.scalar = t.scalar * RatCoeff::v_power(static_cast<int>(aa.get_num().get_si()));
        for (int k = 0; k < n; ++k) t.scalar_x[static_cast<std::size_t>(k)] += t.shift[static_cast<std::size_t>(k)];
      }
      int maxsrc = cutoff;
      for (auto& t : op.terms) maxsrc = std::max(maxsrc, shifted_source_cutoff(d, t.shift, cutoff));
      TruncatedQSeries psi = build_psi_whittaker(M, maxsrc);
      TruncatedQSeries lhs = apply_factored_to_series(d, op, psi, 0, cutoff);
      LatticePolynomial ev(2 * n);
      for (auto& a : d.orbit(a_plus)) {
        LatticePolynomial::Exp e(static_cast<std::size_t>(2 * n), 0);
        for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(n + k)] = -a[static_cast<std::size_t>(k)];
        ev.add_term(e, RatCoeff(1));
      }
      TruncatedQSeries rhs = psi.mul_poly(ev);
      rhs.set_cutoff(cutoff);
      return series_verdict("toda_minuscule_x_" + d.type_string() + "_" + wt_str(a_plus),
                            "LfLaW", lhs, rhs, cutoff);
    }
    case TodaKind::LambdaGeneral: {
      bool minuscule = false;
      for (int r : d.minuscule_indices()) {
        Wt w(static_cast<std::size_t>(n), 0);
        w[static_cast<std::size_t>(r - 1)] = 1;
        minuscule = minuscule || w == a_plus;
      }
      if (!minuscule)
        return CheckResult::skip("toda_lambda_" + d.type_string(), "LfLadual",
                                 "unsupported: not a minuscule weight");
      DiffOperator op = macdonald_operator_t_zero(d, a_plus);
      // gamma-twist on the Lambda block
      for (auto& t : op.terms) {
        mpq_class aa = d.pairing(t.shift, t.shift) * d.m_tilde();
        t.scalar = t.scalar * RatCoeff::v_power(static_cast<int>(aa.get_num().get_si()));
        for (int k = 0; k < n; ++k) t.scalar_x[static_cast<std::size_t>(k)] += t.shift[static_cast<std::size_t>(k)];
      }
      // clear denominators with D = prod_{alpha in R} (1 - La_alpha)
      LatticePolynomial D = LatticePolynomial::constant(2 * n, RatCoeff(1));
      for (auto& r : d.positive_roots()) {
        for (int sgn : {1, -1}) {
          LatticePolynomial::Exp e(static_cast<std::size_t>(2 * n), 0);
          for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(n + k)] = sgn * r.w[static_cast<std::size_t>(k)];
          LatticePolynomial bin = LatticePolynomial::constant(2 * n, RatCoeff(1));
          bin.add_term(e, RatCoeff(-1));
          D = D * bin;
        }
      }
      int maxsrc = cutoff;
      for (auto& t : op.terms) maxsrc = std::max(maxsrc, shifted_source_cutoff(d, t.shift, cutoff));
      TruncatedQSeries psi = build_psi_whittaker(M, maxsrc);
      TruncatedQSeries lhs(2 * n, cutoff);
      for (auto& t : op.terms) {
        DiffOperator single;
        DiffOperator::Term bare = t;
        bare.den.clear();
        single.terms = {bare};
        TruncatedQSeries piece = apply_factored_to_series(d, single, psi, n, cutoff);
        // multiply by D / den(t)
        LatticePolynomial comp = D;
        for (auto& f : t.den) {
          LatticePolynomial::Exp e(static_cast<std::size_t>(2 * n), 0);
          for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(n + k)] = f.mu[static_cast<std::size_t>(k)];
          comp = (-comp).divide_monomial_minus_one(e, 0);
        }
        lhs += piece.mul_poly(comp);
      }
      Wt am = d.antidominant_rep(a_plus);
      LatticePolynomial::Exp xm(static_cast<std::size_t>(2 * n), 0);
      for (int k = 0; k < n; ++k) xm[static_cast<std::size_t>(k)] = -am[static_cast<std::size_t>(k)];
      TruncatedQSeries rhs = psi.mul_poly(D.mul_monomial(xm));
      rhs.set_cutoff(cutoff);
      lhs.set_cutoff(cutoff);
      return series_verdict("toda_lambda_" + d.type_string() + "_" + wt_str(a_plus), "LfLadual",
                            lhs, rhs, cutoff);
    }
  }
  return CheckResult::fail("toda", "LfLaW", "unreachable");
}

CheckResult jackson_whittaker_check(MacCalc& M, int cutoff) {
  const RootDatum& d = M.datum();
  const int n = d.rank();
  std::string id = "jackson_whittaker_" + d.type_string();
  // sum_{b in B_+} La_b q^{(b,b)} mubar(q^b) Psi(q^{-b}, La')
  //   = prod_i prod_j (1-q_i^j)^{-1} Psi(La, La')
  TruncatedQSeries lhs(2 * n, cutoff);
  mpq_class bound = mpq_class(cutoff) / d.m_tilde();
  for (auto& b : d.lattice_ball(bound)) {
    if (!d.is_dominant(b)) continue;
    // the term reaches down to v^{m~(b,b)}: the inner series dips to -m~(b,b)
    int vsq = d.v_exponent_of_pairing(b, b);  // 2 m~ (b,b) = q^{(b,b)}
    Wt nb = b;
    for (auto& v : nb) v = -v;
    TruncatedQSeries inner = psi_whittaker_at_x(M, nb, cutoff - vsq);
    RatCoeff mub = M.normbar_closed(d.w0(b)).inverse();
    TruncatedQSeries piece(2 * n, cutoff);
    LatticePolynomial::Exp lb(static_cast<std::size_t>(2 * n), 0);
    for (int k = 0; k < n; ++k) lb[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k)];
    for (auto& [e, p] : inner.coeffs())
      piece.add(e + vsq, embed_poly(p, 2 * n, n).mul_monomial(lb));
    lhs += piece.mul_ratcoeff(mub);
  }
  lhs.set_cutoff(cutoff);
  TruncatedQSeries rhs = build_psi_whittaker(M, cutoff) * euler_product(d, 2 * n, cutoff, -1);
  rhs = rhs * gauss_theta_series_block(d, rhs.cutoff(), 2 * n, n);
  rhs.set_cutoff(cutoff);
  return series_verdict(id, "mehjackxxx", lhs, rhs, cutoff);
}

CheckResult q_exponential_limit_check(MacCalc& M, int cutoff) {
  const RootDatum& d = M.datum();
  const int n = d.rank();
  std::string id = "q_exponential_limit_" + d.type_string();
  Wt y = d.rho();  // strictly dominant direction
  TruncatedQSeries collected(2 * n, cutoff);
  for (auto& t : whittaker_terms(M, cutoff)) {
    Wt bp = d.w0(t.b);
    mpq_class top = d.pairing(bp, y);
    for (auto& [x, c] : t.pbar_inv.terms()) {
      mpq_class slope = top + d.pairing(Wt(x.begin(), x.end()), y);
      if (slope < 0)
        return CheckResult::fail(id, "growthexwlaext",
                                 "negative deviation slope at b=" + wt_str(t.b));
      bool lowest = Wt(x.begin(), x.end()) == [&] {
        Wt nbp = bp;
        for (auto& v : nbp) v = -v;
        return nbp;
      }();
      if ((slope == 0) != lowest)
        return CheckResult::fail(id, "growthexwlaext",
                                 "slope degeneracy at b=" + wt_str(t.b) + " monomial " +
                                     wt_str(Wt(x.begin(), x.end())));
      if (lowest && !(c == RatCoeff(1)))
        return CheckResult::fail(id, "growthexwlaext", "lowest-weight coefficient not 1");
      if (!lowest) continue;
      LatticePolynomial::Exp e(static_cast<std::size_t>(2 * n), 0);
      for (int k = 0; k < n; ++k) {
        e[static_cast<std::size_t>(k)] = bp[static_cast<std::size_t>(k)];
        e[static_cast<std::size_t>(n + k)] = -bp[static_cast<std::size_t>(k)];
      }
      TruncatedQSeries piece(2 * n, cutoff);
      piece.add_term(t.base, e, RatCoeff(1));
      collected += piece.mul_ratcoeff(t.denom.inverse());
    }
  }
  collected.set_cutoff(cutoff);
  // limit series built independently over B_+
  TruncatedQSeries rhs(2 * n, cutoff);
  mpq_class bound = mpq_class(cutoff) / d.m_tilde();
  for (auto& b : d.lattice_ball(bound)) {
    if (!d.is_dominant(b)) continue;
    mpq_class ve = d.pairing(b, b) * d.m_tilde();
    int base = static_cast<int>(ve.get_num().get_si());
    LatticePolynomial::Exp e(static_cast<std::size_t>(2 * n), 0);
    for (int k = 0; k < n; ++k) {
      e[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k)];
      e[static_cast<std::size_t>(n + k)] = -b[static_cast<std::size_t>(k)];
    }
    TruncatedQSeries piece(2 * n, cutoff);
    piece.add_term(base, e, RatCoeff(1));
    rhs += piece.mul_ratcoeff(M.normbar_closed(d.w0(b)).inverse());
  }
  rhs.set_cutoff(cutoff);
  return series_verdict(id, "growthexwlaext", collected, rhs, cutoff);
}

CheckResult star_correspondence_check(MacCalc& M, int max_norm) {
  const RootDatum& d = M.datum();
  std::string id = "star_correspondence_" + d.type_string();
  mpq_class bound(max_norm);
  for (auto& b : d.lattice_ball(bound)) {
    if (!d.is_antidominant(b)) continue;
    LatticePolynomial lim = M.P(b).coeff_map(
        [](const RatCoeff& c) { return c.subst_t_inverse().at_t_zero(); });
    LatticePolynomial pbar_qinv =
        M.Pbar(b).coeff_map([](const RatCoeff& c) { return c.subst_q_inverse(); });
    if (!(lim == pbar_qinv))
      return CheckResult::fail(id, "ptinvlim", "t->infinity limit fails at b=" + wt_str(b));
    Wt sb = d.w0(b);
    for (auto& v : sb) v = -v;
    if (!(pbar_qinv.invert_block() == M.Pbar(sb).coeff_map(
                                          [](const RatCoeff& c) { return c.subst_q_inverse(); })))
      return CheckResult::fail(id, "pexlabar1", "inversion relabeling fails at b=" + wt_str(b));
  }
  return CheckResult::pass(id, "pexlabar1");
}

}  // namespace whitdaha
