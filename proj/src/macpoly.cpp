#include "whitdaha/macpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace whitdaha {

namespace {
LatticePolynomial::Exp to_exp(const Wt& b) {
  return LatticePolynomial::Exp(b.begin(), b.end());
}
}  // namespace

LatticePolynomial MacCalc::build_E_chain(const Wt& b, bool t_zero, int* r_out) {
  auto dec = d_.antidominant_decomposition(b);
  auto rw = d_.reduced_word(dec.pi_b);
  LatticePolynomial f = LatticePolynomial::constant(d_.rank(), RatCoeff(1));
  Wt c(static_cast<std::size_t>(d_.rank()), 0);
  for (int i : rw.word) {
    mpq_class pr = d_.alpha_pairing_affine(i, c);
    if (pr <= 0) throw std::logic_error("intertwiner chain: non-increasing step");
    if (t_zero) {
      // Psi at t=0 collapses to tau(Tbar_i) + 1
      f = H_.apply_tau_T(i, f, true) + f;
    } else {
      RatCoeff x_val;
      auto sp = d_.spectral_vector(c);
      if (i > 0) {
        Wt ai(d_.cartan()[static_cast<std::size_t>(i - 1)].begin(),
              d_.cartan()[static_cast<std::size_t>(i - 1)].end());
        x_val = evaluate_monomial_block(d_, to_exp(ai), sp, 0);
      } else {
        Wt th = d_.theta_short().w;
        for (auto& v : th) v = -v;
        x_val = evaluate_monomial_block(d_, to_exp(th), sp, 0) *
                RatCoeff::v_power(d_.two_mt());
      }
      RatCoeff denom = x_val - RatCoeff(1);
      if (denom.is_zero())
        throw std::runtime_error("intertwiner chain: vanishing spectral denominator");
      f = H_.apply_tau_T(i, f, false) + f.scale((H_.t_i(i) - RatCoeff(1)) / denom);
    }
    c = d_.affine_reflect_point(i, c);
  }
  if (rw.pi_index) {
    f = H_.apply_tau_pi(rw.pi_index, f);
    c = d_.act_affine_point(rw.pi, c);
  }
  if (c != b) throw std::logic_error("intertwiner chain did not land on b");
  RatCoeff lead = f.coeff(to_exp(b));
  if (lead.is_zero() || !lead.is_monomial())
    throw std::logic_error("intertwiner chain: leading coefficient is not a monomial");
  if (r_out) *r_out = lead.num().degree(0) - lead.den().degree(0);
  LatticePolynomial out = f.scale(lead.inverse());
  for (auto& [e, cc] : out.terms()) {
    Wt w(e.begin(), e.end());
    if (w != b && !d_.prec(b, w))
      throw std::logic_error("intertwiner chain: triangularity violated");
  }
  return out;
}

LatticePolynomial MacCalc::E(const Wt& b) {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_E_.find(b);
    if (it != cache_E_.end()) return it->second;
  }
  LatticePolynomial f = build_E_chain(b, false, nullptr);
  std::lock_guard<std::mutex> lk(mu_);
  return cache_E_.emplace(b, std::move(f)).first->second;
}

LatticePolynomial MacCalc::Ebar(const Wt& b) {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_Ebar_.find(b);
    if (it != cache_Ebar_.end()) return it->second;
  }
  int rb = 0;
  LatticePolynomial f = build_E_chain(b, true, &rb);
  std::lock_guard<std::mutex> lk(mu_);
  cache_rb_[b] = rb;
  return cache_Ebar_.emplace(b, std::move(f)).first->second;
}

int MacCalc::Ebar_r(const Wt& b) {
  Ebar(b);
  std::lock_guard<std::mutex> lk(mu_);
  return cache_rb_[b];
}

LatticePolynomial MacCalc::P(const Wt& b_minus) {
  if (!d_.is_antidominant(b_minus)) throw std::invalid_argument("P: label must be antidominant");
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_P_.find(b_minus);
    if (it != cache_P_.end()) return it->second;
  }
  Wt b_plus = d_.w0(b_minus);
  LatticePolynomial e = E(b_plus);
  LatticePolynomial acc(d_.rank());
  for (auto& [c, word] : d_.orbit_with_words(b_plus)) {
    LatticePolynomial g = e;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = H_.apply_T(*it, g);
    acc += g;
  }
  RatCoeff lead = acc.coeff(to_exp(b_minus));
  if (lead.is_zero()) throw std::logic_error("P: vanishing leading orbit coefficient");
  acc = acc.scale(lead.inverse());
  for (auto& c : d_.orbit(b_minus))
    if (!(acc.coeff(to_exp(c)) == RatCoeff(1)))
      throw std::logic_error("P: orbit sum is not monic");
  if (!w_invariant(d_, acc)) throw std::logic_error("P: result is not W-invariant");
  std::lock_guard<std::mutex> lk(mu_);
  return cache_P_.emplace(b_minus, std::move(acc)).first->second;
}

LatticePolynomial MacCalc::P_at_t_zero(const Wt& b_minus) { return P(b_minus).at_t_zero(); }

RatCoeff MacCalc::E_eval_closed(const Wt& b) {
  auto dec = d_.antidominant_decomposition(b);
  RatCoeff acc = H_.q_rho_k_pairing(dec.b_minus);
  auto rk = d_.plus_rho_k();
  for (auto& [root, j] : d_.lambda_prime_pi(b)) {
    RatCoeff xa = evaluate_monomial_block(d_, to_exp(root->w), rk, 0);
    RatCoeff qj = RatCoeff::v_power(d_.two_mt() * root->nu * j);
    RatCoeff ta = (root->nu == 1) ? RatCoeff::ts_half_power(2) : RatCoeff::tl_half_power(2);
    acc = acc * (RatCoeff(1) - qj * ta * xa) / (RatCoeff(1) - qj * xa);
  }
  return acc;
}

RatCoeff MacCalc::P_eval_closed(const Wt& b_minus) {
  RatCoeff acc = H_.q_rho_k_pairing(b_minus);
  auto rk = d_.plus_rho_k();
  for (auto& r : d_.positive_roots()) {
    int bound = -d_.pair_coroot(b_minus, r);
    RatCoeff xa = evaluate_monomial_block(d_, to_exp(r.w), rk, 0);
    RatCoeff ta = (r.nu == 1) ? RatCoeff::ts_half_power(2) : RatCoeff::tl_half_power(2);
    for (int j = 0; j < bound; ++j) {
      RatCoeff qj = RatCoeff::v_power(d_.two_mt() * r.nu * j);
      acc = acc * (RatCoeff(1) - qj * ta * xa) / (RatCoeff(1) - qj * xa);
    }
  }
  return acc;
}

RatCoeff MacCalc::norm_closed(const Wt& b_minus) {
  RatCoeff acc(1);
  auto rk = d_.plus_rho_k();
  for (auto& r : d_.positive_roots()) {
    int bound = -d_.pair_coroot(b_minus, r);
    RatCoeff xa = evaluate_monomial_block(d_, to_exp(r.w), rk, 0);
    RatCoeff ta = (r.nu == 1) ? RatCoeff::ts_half_power(2) : RatCoeff::tl_half_power(2);
    for (int j = 0; j < bound; ++j) {
      RatCoeff qj = RatCoeff::v_power(d_.two_mt() * r.nu * j);
      RatCoeff qj1 = RatCoeff::v_power(d_.two_mt() * r.nu * (j + 1));
      acc = acc * (RatCoeff(1) - qj1 * ta.inverse() * xa) * (RatCoeff(1) - qj * ta * xa) /
            ((RatCoeff(1) - qj * xa) * (RatCoeff(1) - qj1 * xa));
    }
  }
  return acc;
}

RatCoeff MacCalc::normbar_closed(const Wt& b_minus) {
  RatCoeff acc(1);
  for (int i = 1; i <= d_.rank(); ++i) {
    int nu = d_.nu()[static_cast<std::size_t>(i - 1)];
    int bound = -b_minus[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= bound; ++j)
      acc = acc * (RatCoeff(1) - RatCoeff::v_power(d_.two_mt() * nu * j));
  }
  return acc;
}

RatCoeff MacCalc::mu_bullet_value(const Wt& b) {
  auto dec = d_.antidominant_decomposition(b);
  Wt twice = dec.b_minus;
  for (auto& v : twice) v *= 2;
  RatCoeff acc = H_.q_rho_k_pairing(twice);
  ExtAffineElement u{Wt(static_cast<std::size_t>(d_.rank()), 0), dec.u_word};
  auto lnu = d_.length_nu(u);
  acc = acc * RatCoeff::ts_half_power(2 * lnu[0]);
  if (d_.nu_count() > 1) acc = acc * RatCoeff::tl_half_power(2 * lnu[1]);
  auto rk = d_.plus_rho_k();
  for (auto& [root, j] : d_.lambda_prime_pi(b)) {
    RatCoeff xa = evaluate_monomial_block(d_, to_exp(root->w), rk, 0);
    RatCoeff qj = RatCoeff::v_power(d_.two_mt() * root->nu * j);
    RatCoeff ta = (root->nu == 1) ? RatCoeff::ts_half_power(2) : RatCoeff::tl_half_power(2);
    acc = acc * (RatCoeff(1) - ta * xa * qj) / (RatCoeff(1) - ta.inverse() * xa * qj);
  }
  return acc;
}

RatCoeff MacCalc::eval(const LatticePolynomial& f, const RootDatum::EvalPoint& pt) const {
  return evaluate_at(d_, f, pt);
}

RatCoeff MacCalc::E_at_spectral(const Wt& b, const Wt& c) {
  return eval(E(b), d_.spectral_vector(c));
}

RatCoeff MacCalc::y_eigenvalue(const Wt& a, const Wt& b) {
  RatCoeff pref = H_.q_rho_k_pairing(d_.dominant_rep(a));
  RatCoeff x = evaluate_monomial_block(d_, to_exp(a), d_.spectral_vector(b), 0);
  return pref * x.inverse();
}

RatCoeff MacCalc::l_eigenvalue(const Wt& a_plus, const Wt& b_minus) {
  RatCoeff acc;
  for (auto& a : d_.orbit(a_plus)) acc += y_eigenvalue(a, b_minus);
  return acc;
}

bool MacCalc::check_evaluation_E(const Wt& b) {
  return eval(E(b), d_.minus_rho_k()) == E_eval_closed(b);
}

bool MacCalc::check_evaluation_P(const Wt& b_minus) {
  RatCoeff closed = P_eval_closed(b_minus);
  return eval(P(b_minus), d_.minus_rho_k()) == closed &&
         eval(P(b_minus), d_.plus_rho_k()) == closed;
}

bool MacCalc::check_duality_E(const Wt& b, const Wt& c) {
  RatCoeff lhs = E_at_spectral(b, c) * E_eval_closed(c);
  RatCoeff rhs = E_at_spectral(c, b) * E_eval_closed(b);
  return lhs == rhs;
}

bool MacCalc::check_duality_P(const Wt& b_minus, const Wt& c_minus) {
  RatCoeff lhs = eval(P(b_minus), d_.lattice_minus_rho_k(c_minus)) * P_eval_closed(c_minus);
  RatCoeff rhs = eval(P(c_minus), d_.lattice_minus_rho_k(b_minus)) * P_eval_closed(b_minus);
  return lhs == rhs;
}

bool MacCalc::check_y_eigen(const Wt& b) {
  LatticePolynomial e = E(b);
  for (int i = 1; i <= d_.rank(); ++i) {
    Wt omega(static_cast<std::size_t>(d_.rank()), 0);
    omega[static_cast<std::size_t>(i - 1)] = 1;
    LatticePolynomial lhs = H_.apply_Y(omega, e);
    if (!(lhs == e.scale(y_eigenvalue(omega, b)))) return false;
  }
  return true;
}

bool MacCalc::check_l_eigen(const Wt& a_plus, const Wt& b_minus) {
  LatticePolynomial p = P(b_minus);
  return H_.apply_L(a_plus, p) == p.scale(l_eigenvalue(a_plus, b_minus));
}

bool MacCalc::check_norm_spherical(const Wt& b_minus) {
  RatCoeff lhs = P_eval_closed(b_minus) * P_eval_closed(b_minus) / norm_closed(b_minus);
  RatCoeff rhs;
  for (auto& a : d_.orbit(b_minus)) rhs += mu_bullet_value(a);
  return lhs == rhs;
}

bool MacCalc::check_norm_series(const Wt& b_minus, const Wt& c_minus, int order, bool t_zero) {
  LatticePolynomial pb = t_zero ? Pbar(b_minus) : P(b_minus);
  LatticePolynomial pc = t_zero ? Pbar(c_minus) : P(c_minus);
  TruncatedQSeries S = grade_by_v(pb, 0, order) * grade_by_v(pc.invert_block(), 0, order);
  S.set_cutoff(order);
  mpq_class lo = 0, hi = 0;
  for (auto& [e, p] : S.coeffs())
    for (auto& [x, c] : p.terms()) {
      mpq_class h = -d_.coroot_height(Wt(x.begin(), x.end()));
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
  MuExpansion ex(d_, order, lo, hi, t_zero);
  TruncatedQSeries lhs = ex.pair_series(S) * ex.constant_term().inverse();
  RatCoeff closed;
  if (b_minus == c_minus) closed = t_zero ? normbar_closed(b_minus) : norm_closed(b_minus);
  TruncatedQSeries rhs = TruncatedQSeries::from_ratcoeff(closed, 0, lhs.cutoff());
  return lhs.equal_to_order(rhs, std::min(lhs.cutoff(), rhs.cutoff()));
}

bool MacCalc::check_bar_positive(const Wt& b) {
  LatticePolynomial eb = Ebar(b);
  for (auto& [e, c] : eb.terms()) {
    if (!c.den().is_one()) return false;
    for (auto& term : c.num().terms()) {
      if (term.c < 0) return false;
      if (term.m.e[1] != 0 || term.m.e[2] != 0) return false;
      if (term.m.e[0] % d_.two_mt() != 0) return false;  // integral q-powers only
    }
  }
  return true;
}

bool MacCalc::check_bar_routes(const Wt& b_minus) {
  return P_at_t_zero(b_minus) == Pbar(b_minus);
}

bool MacCalc::check_p_inversion(const Wt& b_minus) {
  Wt sigma = d_.w0(b_minus);
  for (auto& v : sigma) v = -v;  // varsigma(b) = -w0(b)
  Wt sig_minus = d_.antidominant_rep(sigma);
  return P(b_minus).invert_block() == P(sig_minus);
}

bool MacCalc::check_t_infinity(const Wt& b_minus) {
  // lim_{t->inf} P_b(X;q,t) = Pbar_b(X;q^{-1}); with the inversion
  // Pbar_b(X^{-1}) = Pbar_{varsigma(b)}(X) this is the t <-> t^{-1} bridge.
  LatticePolynomial p = P(b_minus);
  LatticePolynomial lim = p.coeff_map(
      [](const RatCoeff& c) { return c.subst_t_inverse().at_t_zero(); });
  LatticePolynomial target =
      Pbar(b_minus).coeff_map([](const RatCoeff& c) { return c.subst_q_inverse(); });
  return lim == target;
}

bool MacCalc::check_classical_character(const Wt& b_minus) {
  LatticePolynomial q0 = Pbar(b_minus).coeff_map([](const RatCoeff& c) {
    MPoly n0 = c.num().at_v_zero();
    MPoly d0 = c.den().at_v_zero();
    if (d0.is_zero()) throw std::logic_error("q->0 pole in Pbar coefficient");
    return RatCoeff(n0, d0);
  });
  return q0 == weyl_character(d_, d_.w0(b_minus));
}

// ---------------------------------------------------------------------------

LatticePolynomial rank1_pbar_closed(const RootDatum& d, int n) {
  auto M = [&](int m) {
    LatticePolynomial p(1);
    p.add_term({m}, RatCoeff(1));
    if (m > 0) p.add_term({-m}, RatCoeff(1));
    return p;
  };
  auto q = [&](int j) { return RatCoeff::v_power(d.two_mt() * j); };
  LatticePolynomial acc = M(n);
  RatCoeff coef(1);
  for (int j = 1; 2 * j <= n; ++j) {
    coef = coef * (RatCoeff(1) - q(n - j + 1)) / (RatCoeff(1) - q(j));
    acc += M(n - 2 * j).scale(coef);
  }
  return acc;
}

LatticePolynomial rank1_rogers_closed(const RootDatum& d, int n) {
  auto M = [&](int m) {
    LatticePolynomial p(1);
    p.add_term({m}, RatCoeff(1));
    if (m > 0) p.add_term({-m}, RatCoeff(1));
    return p;
  };
  auto q = [&](int j) { return RatCoeff::v_power(d.two_mt() * j); };
  RatCoeff t = RatCoeff::ts_half_power(2);
  LatticePolynomial acc = M(n);
  RatCoeff coef(1);
  for (int j = 1; 2 * j <= n; ++j) {
    int i = j - 1;
    coef = coef * (RatCoeff(1) - q(n - i)) / (RatCoeff(1) - q(1 + i)) *
           (RatCoeff(1) - t * q(i)) / (RatCoeff(1) - t * q(n - i - 1));
    acc += M(n - 2 * j).scale(coef);
  }
  return acc;
}

LatticePolynomial weyl_character(const RootDatum& d, const Wt& dominant) {
  Wt rho = d.rho();
  Wt lr = dominant;
  for (int i = 0; i < d.rank(); ++i) lr[static_cast<std::size_t>(i)] += 1;
  auto alt_sum = [&](const Wt& v) {
    LatticePolynomial p(d.rank());
    for (auto& [c, word] : d.orbit_with_words(v)) {
      RatCoeff sign = (word.size() % 2 == 0) ? RatCoeff(1) : RatCoeff(-1);
      p.add_term(LatticePolynomial::Exp(c.begin(), c.end()), sign);
    }
    return p;
  };
  LatticePolynomial num = alt_sum(lr);
  LatticePolynomial den = alt_sum(rho);
  LatticePolynomial quot(d.rank());
  while (!num.is_zero()) {
    auto it = num.terms().rbegin();
    LatticePolynomial::Exp e = it->first;
    RatCoeff c = it->second;
    auto dit = den.terms().rbegin();
    LatticePolynomial::Exp r = e;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= dit->first[k];
    RatCoeff qc = c / dit->second;
    quot.add_term(r, qc);
    num -= den.mul_monomial(r, qc);
  }
  return quot;
}

}  // namespace whitdaha
