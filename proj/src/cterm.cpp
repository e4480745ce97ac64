#include "whitdaha/cterm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace whitdaha {

namespace {
constexpr int kPackBits = 14;            // per-coordinate field width
constexpr int kPackBias = 1 << (kPackBits - 1);
constexpr std::int64_t kPackMask = (1 << kPackBits) - 1;
}  // namespace

MuExpansion::Key MuExpansion::pack(const int* e) const {
  Key k = 0;
  for (int i = 0; i < d_.rank(); ++i) {
    long v = e[i] + kPackBias;
    if (v < 0 || v > kPackMask) throw std::overflow_error("MuExpansion: exponent overflow");
    k = (k << kPackBits) | v;
  }
  return k;
}

void MuExpansion::unpack(Key k, int* e) const {
  for (int i = d_.rank() - 1; i >= 0; --i) {
    e[i] = static_cast<int>(k & kPackMask) - kPackBias;
    k >>= kPackBits;
  }
}

long MuExpansion::hint(Key k) const {
  int e[8];
  unpack(k, e);
  long h = 0;
  for (int i = 0; i < d_.rank(); ++i) h += hcoef_[static_cast<std::size_t>(i)] * e[i];
  return h;
}

MuExpansion::MuExpansion(const RootDatum& d, int cutoff, const mpq_class& window_lo,
                         const mpq_class& window_hi, bool t_zero)
    : d_(d), cutoff_(cutoff), t_zero_(t_zero) {
  if (d.rank() > 4) throw std::invalid_argument("MuExpansion: rank too large for packing");
  // integer heights: scale (rho^vee, .) by the lcm of denominators
  std::vector<mpq_class> hq(static_cast<std::size_t>(d.rank()));
  mpz_class scale = 1;
  for (int i = 0; i < d.rank(); ++i) {
    Wt e(static_cast<std::size_t>(d.rank()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    hq[static_cast<std::size_t>(i)] = d.coroot_height(e);
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), hq[static_cast<std::size_t>(i)].get_den().get_mpz_t());
  }
  hcoef_.resize(static_cast<std::size_t>(d.rank()));
  for (int i = 0; i < d.rank(); ++i) {
    mpq_class s = hq[static_cast<std::size_t>(i)] * scale;
    hcoef_[static_cast<std::size_t>(i)] = s.get_num().get_si();
  }
  auto scale_q = [&](const mpq_class& x, bool up) {
    mpq_class s = x * scale;
    mpz_class num = s.get_num(), den = s.get_den();
    mpz_class q;
    if (up)
      mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    else
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q.get_si();
  };
  wlo_i_ = scale_q(window_lo, false);
  whi_i_ = scale_q(window_hi, true);
  // cmin per scaled height unit: min over roots of 2 m~ nu / (scale * ht)
  bool first = true;
  for (auto& r : d.positive_roots()) {
    long num = 2L * d.m_tilde() * r.nu;
    long den = scale.get_si() * r.height;
    if (first || num * cmin_den_ < cmin_num_ * den) {
      cmin_num_ = num;
      cmin_den_ = den;
      first = false;
    }
  }

  body_.assign(static_cast<std::size_t>(cutoff_ + 1), {});
  int zeros[8] = {0};
  body_[0][pack(zeros)] = MPoly(1);

  for (auto& r : d.positive_roots()) {
    Wt neg = r.w;
    for (auto& v : neg) v = -v;
    int qa = 2 * d.m_tilde() * r.nu;
    for (int j = 0; qa * j <= cutoff_; ++j) {
      multiply_numerator_factor(r.w, qa * j);
      if (qa * (j + 1) <= cutoff_) multiply_numerator_factor(neg, qa * (j + 1));
      if (!t_zero_) {
        multiply_denominator_factor(r.w, qa * j, r.nu != 1);
        if (qa * (j + 1) <= cutoff_) multiply_denominator_factor(neg, qa * (j + 1), r.nu != 1);
      }
    }
  }
}

mpq_class MuExpansion::height(const LatticePolynomial::Exp& e) const {
  return d_.coroot_height(Wt(e.begin(), e.end()));
}

bool MuExpansion::keep(int vexp, long h) const {
  if (vexp > cutoff_) return false;
  // descending one scaled height unit costs at least cmin_num_/cmin_den_ in v
  if (h > whi_i_ &&
      static_cast<long>(vexp) * cmin_den_ + cmin_num_ * (h - whi_i_) >
          static_cast<long>(cutoff_) * cmin_den_)
    return false;
  return true;
}

void MuExpansion::multiply_numerator_factor(const Wt& alpha_exp, int vcost) {
  // body *= (1 - v^vcost X_alpha); t-monomials never enter numerators here
  long dh = 0;
  for (int i = 0; i < d_.rank(); ++i)
    dh += hcoef_[static_cast<std::size_t>(i)] * alpha_exp[static_cast<std::size_t>(i)];
  int e[8];
  auto shift_into = [&](const Key& k, const MPoly& p, std::unordered_map<Key, MPoly>& dst,
                        int ve_dst) {
    long h = hint(k) + dh;
    if (!keep(ve_dst, h)) return;
    unpack(k, e);
    for (int i = 0; i < d_.rank(); ++i) e[i] += alpha_exp[static_cast<std::size_t>(i)];
    Key nk = pack(e);
    auto it = dst.find(nk);
    if (it == dst.end()) {
      dst.emplace(nk, -p);
    } else {
      it->second -= p;
      if (it->second.is_zero()) dst.erase(it);
    }
  };
  if (vcost == 0) {
    for (auto& slot : body_) {
      if (slot.empty()) continue;
      int ve = static_cast<int>(&slot - body_.data());
      std::vector<std::pair<Key, MPoly>> snapshot(slot.begin(), slot.end());
      for (auto& [k, p] : snapshot) shift_into(k, p, slot, ve);
    }
    return;
  }
  // descending source order: a slot is fully read before lower slots add to it
  for (int ve = cutoff_ - vcost; ve >= 0; --ve) {
    auto& src = body_[static_cast<std::size_t>(ve)];
    if (src.empty()) continue;
    auto& dst = body_[static_cast<std::size_t>(ve + vcost)];
    for (auto& [k, p] : src) shift_into(k, p, dst, ve + vcost);
  }
}

void MuExpansion::multiply_denominator_factor(const Wt& alpha_exp, int vcost, bool long_root) {
  // body *= 1/(1 - t v^vcost X_alpha) = sum_m t^m v^{m vcost} X_{m alpha}
  long dh = 0;
  for (int i = 0; i < d_.rank(); ++i)
    dh += hcoef_[static_cast<std::size_t>(i)] * alpha_exp[static_cast<std::size_t>(i)];
  Mono tm;
  tm.e[long_root ? 2 : 1] = 2;
  int e[8];
  // process ladders rung by rung from a frozen snapshot per source order;
  // iterating v-orders ascending with in-place accumulation realizes the
  // geometric series because each rung feeds the next
  if (vcost > 0) {
    for (int ve = 0; ve + vcost <= cutoff_; ++ve) {
      auto& src = body_[static_cast<std::size_t>(ve)];
      if (src.empty()) continue;
      auto& dst = body_[static_cast<std::size_t>(ve + vcost)];
      for (auto& [k, p] : src) {
        long h = hint(k) + dh;
        if (!keep(ve + vcost, h)) continue;
        unpack(k, e);
        for (int i = 0; i < d_.rank(); ++i) e[i] += alpha_exp[static_cast<std::size_t>(i)];
        Key nk = pack(e);
        MPoly add = p.mul_mono(tm, 1);
        auto it = dst.find(nk);
        if (it == dst.end()) {
          dst.emplace(nk, std::move(add));
        } else {
          it->second += add;
          if (it->second.is_zero()) dst.erase(it);
        }
      }
    }
    return;
  }
  // vcost == 0: the ladder lives inside one v-order; heights strictly rise
  for (auto& slot : body_) {
    if (slot.empty()) continue;
    std::vector<std::pair<Key, MPoly>> snapshot(slot.begin(), slot.end());
    std::sort(snapshot.begin(), snapshot.end(),
              [&](auto& a, auto& b) { return hint(a.first) < hint(b.first); });
    int ve = static_cast<int>(&slot - body_.data());
    for (auto& [k, p] : snapshot) {
      // climb the ladder from this term until pruned
      long h = hint(k);
      MPoly cur = p;
      int eb[8];
      unpack(k, eb);
      for (int m = 1;; ++m) {
        h += dh;
        if (!keep(ve, h)) break;
        for (int i = 0; i < d_.rank(); ++i) eb[i] += alpha_exp[static_cast<std::size_t>(i)];
        cur = cur.mul_mono(tm, 1);
        Key nk = pack(eb);
        auto it = slot.find(nk);
        if (it == slot.end()) {
          slot.emplace(nk, cur);
        } else {
          it->second += cur;
          if (it->second.is_zero()) slot.erase(it);
        }
      }
    }
  }
}

TruncatedQSeries MuExpansion::coefficient(const LatticePolynomial::Exp& e) const {
  mpq_class h = height(e);
  long hi = 0;
  for (std::size_t i = 0; i < e.size(); ++i) hi += hcoef_[i] * e[i];
  if (hi > whi_i_ || hi < wlo_i_)
    throw std::logic_error("MuExpansion::coefficient read outside the window");
  int buf[8] = {0};
  for (std::size_t i = 0; i < e.size(); ++i) buf[i] = e[i];
  Key k = pack(buf);
  TruncatedQSeries s(0, cutoff_);
  for (int ve = 0; ve <= cutoff_; ++ve) {
    auto it = body_[static_cast<std::size_t>(ve)].find(k);
    if (it != body_[static_cast<std::size_t>(ve)].end() && !it->second.is_zero())
      s.add_term(ve, LatticePolynomial::Exp{}, RatCoeff(it->second));
  }
  (void)h;
  return s;
}

TruncatedQSeries MuExpansion::pair(const LatticePolynomial& f) const {
  TruncatedQSeries s(0, cutoff_);
  for (auto& [x, c] : f.terms()) {
    LatticePolynomial::Exp neg = x;
    for (auto& v : neg) v = -v;
    TruncatedQSeries mu_c = coefficient(neg);
    if (mu_c.is_zero()) continue;
    s += mu_c.mul_ratcoeff(c);
  }
  return s;
}

TruncatedQSeries MuExpansion::pair_series(const TruncatedQSeries& S) const {
  int out_cut = std::min(cutoff_, S.cutoff());
  TruncatedQSeries out(0, out_cut);
  int buf[8] = {0};
  for (auto& [e1, p] : S.coeffs()) {
    for (auto& [x, c] : p.terms()) {
      for (std::size_t i = 0; i < x.size(); ++i) buf[i] = -x[i];
      long hi = 0;
      for (std::size_t i = 0; i < x.size(); ++i) hi -= hcoef_[i] * x[i];
      if (hi > whi_i_ || hi < wlo_i_)
        throw std::logic_error("MuExpansion::pair_series: support outside the window");
      Key k = pack(buf);
      if (!c.den().is_one())
        throw std::logic_error("MuExpansion::pair_series: coefficients must be polynomial");
      for (int e2 = 0; e1 + e2 <= out_cut; ++e2) {
        auto it = body_[static_cast<std::size_t>(e2)].find(k);
        if (it == body_[static_cast<std::size_t>(e2)].end()) continue;
        MPoly prod = it->second * c.num();
        if (!prod.is_zero())
          out.add_term(e1 + e2, LatticePolynomial::Exp{}, RatCoeff(prod));
      }
    }
  }
  return out;
}

TruncatedQSeries MuExpansion::constant_term() const {
  return coefficient(LatticePolynomial::Exp(static_cast<std::size_t>(d_.rank()), 0));
}

namespace {
std::pair<mpq_class, mpq_class> window_of(const RootDatum& d, const LatticePolynomial& f) {
  mpq_class lo = 0, hi = 0;
  for (auto& [x, c] : f.terms()) {
    mpq_class h = -d.coroot_height(Wt(x.begin(), x.end()));
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  return {lo, hi};
}
}  // namespace

TruncatedQSeries mu_pairing(const RootDatum& d, const LatticePolynomial& f, int cutoff,
                            bool t_zero) {
  auto [lo, hi] = window_of(d, f);
  MuExpansion ex(d, cutoff, lo, hi, t_zero);
  return ex.pair(f);
}

TruncatedQSeries mu_pairing_normalized(const RootDatum& d, const LatticePolynomial& f,
                                       int cutoff, bool t_zero) {
  auto [lo, hi] = window_of(d, f);
  MuExpansion ex(d, cutoff, std::min(lo, mpq_class(0)), std::max(hi, mpq_class(0)), t_zero);
  TruncatedQSeries num = ex.pair(f);
  TruncatedQSeries den = ex.constant_term();
  return num * den.inverse();
}

std::vector<Wt> succ_ideal(const RootDatum& d, const Wt& b) {
  Wt bp = d.dominant_rep(b);
  int bound = 0;
  for (int j = 0; j < d.rank(); ++j) {
    if (!bp[j]) continue;
    Wt w(static_cast<std::size_t>(d.rank()), 0);
    w[static_cast<std::size_t>(j)] = 1;
    int m = 0;
    for (auto& c : d.orbit(w))
      for (int x : c) m = std::max(m, x < 0 ? -x : x);
    bound += m * bp[j];
  }
  std::vector<Wt> out;
  for (auto& c : d.box(bound)) {
    if (c == b) continue;
    Wt cp = d.dominant_rep(c);
    Wt diff = bp;
    for (int i = 0; i < d.rank(); ++i) diff[static_cast<std::size_t>(i)] -= cp[static_cast<std::size_t>(i)];
    if (!d.in_Qplus(diff)) continue;
    if (d.prec(b, c)) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GramSchmidtResult gram_schmidt_E(const RootDatum& d, const Wt& b, int cutoff, bool t_zero) {
  GramSchmidtResult res;
  res.b = b;
  std::vector<Wt> S = succ_ideal(d, b);
  const std::size_t m = S.size();
  if (m == 0) {
    TruncatedQSeries one = TruncatedQSeries::one(0, cutoff);
    res.coefficients.emplace_back(b, one);
    res.certified_order = cutoff;
    return res;
  }

  std::vector<Wt> all = S;
  all.push_back(b);
  mpq_class lo = 0, hi = 0;
  for (auto& a : all)
    for (auto& c : S) {
      mpq_class h = d.coroot_height(c) - d.coroot_height(a);
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
  MuExpansion ex(d, cutoff, lo, hi, t_zero);
  auto moment = [&](const Wt& a, const Wt& c) {
    LatticePolynomial::Exp e(static_cast<std::size_t>(d.rank()));
    for (int i = 0; i < d.rank(); ++i)
      e[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i)];
    return ex.coefficient(e);  // mu-coefficient of X_{c-a} = <X_{a-c} mu>
  };

  std::vector<std::vector<TruncatedQSeries>> A(m, std::vector<TruncatedQSeries>(m + 1));
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t col = 0; col < m; ++col) A[row][col] = moment(S[col], S[row]);
    A[row][m] = -moment(b, S[row]);
  }
  std::vector<std::size_t> col_of_var(m, m + 1);
  std::vector<bool> row_used(m, false), col_used(m, false);
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t pr = m, pc = m;
    int best = INT32_MAX;
    for (std::size_t r = 0; r < m; ++r) {
      if (row_used[r]) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (col_used[c] || A[r][c].is_zero()) continue;
        int val = A[r][c].min_exponent();
        if (val < best) {
          best = val;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == m) throw std::runtime_error("gram_schmidt_E: singular moment matrix at this order");
    row_used[pr] = true;
    col_used[pc] = true;
    col_of_var[pc] = pr;
    TruncatedQSeries inv = A[pr][pc].inverse();
    for (std::size_t c = 0; c <= m; ++c)
      if (c != pc && !A[pr][c].is_zero()) A[pr][c] = A[pr][c] * inv;
    A[pr][pc] = A[pr][pc] * inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pr || A[r][pc].is_zero()) continue;
      TruncatedQSeries f = A[r][pc];
      for (std::size_t c = 0; c <= m; ++c) {
        if (c == pc) continue;
        if (!A[pr][c].is_zero()) A[r][c] -= f * A[pr][c];
      }
      A[r][pc] = TruncatedQSeries::zero(0, A[r][pc].cutoff());
    }
  }

  res.certified_order = cutoff;
  TruncatedQSeries one = TruncatedQSeries::one(0, cutoff);
  res.coefficients.emplace_back(b, one);
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t r = col_of_var[c];
    TruncatedQSeries kappa = A[r][m];
    res.certified_order = std::min(res.certified_order, kappa.cutoff());
    res.coefficients.emplace_back(S[c], kappa);
  }
  std::sort(res.coefficients.begin(), res.coefficients.end(),
            [](auto& x, auto& y) { return x.first < y.first; });
  return res;
}

int orthogonality_certificate(const RootDatum& d, const LatticePolynomial& e_poly, const Wt& b,
                              int cutoff, bool t_zero) {
  std::vector<Wt> S = succ_ideal(d, b);
  // triangularity first
  LatticePolynomial::Exp be(b.begin(), b.end());
  if (!(e_poly.coeff(be) == RatCoeff(1))) return -1;
  for (auto& [x, c] : e_poly.terms()) {
    Wt w(x.begin(), x.end());
    if (w != b && !d.prec(b, w)) return -1;
  }
  if (S.empty()) return cutoff;
  mpq_class lo = 0, hi = 0;
  for (auto& c : S)
    for (auto& [x, cc] : e_poly.terms()) {
      mpq_class h = d.coroot_height(c) - d.coroot_height(Wt(x.begin(), x.end()));
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
  MuExpansion ex(d, cutoff, lo, hi, t_zero);
  TruncatedQSeries graded = grade_by_v(e_poly, 0, cutoff);
  int order = cutoff;
  for (auto& c : S) {
    LatticePolynomial mono(d.rank());
    LatticePolynomial::Exp ce(c.begin(), c.end());
    for (auto& v : ce) v = -v;
    mono.add_term(ce, RatCoeff(1));
    TruncatedQSeries resid = ex.pair_series(graded.mul_poly(mono));
    order = std::min(order, resid.cutoff());
    if (!resid.is_zero()) return -1;
  }
  return order;
}

}  // namespace whitdaha
