#include "whitdaha/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace whitdaha {

namespace {

// Split a RatCoeff into v-slices: maps v-exponent -> v-free RatCoeff.
std::map<int, RatCoeff> v_slices(const MPoly& p) {
  std::map<int, RatCoeff> out;
  int lo = p.valuation(0), hi = p.degree(0);
  for (int e = lo; e <= hi; ++e) {
    MPoly s = p.slice(0, e);
    if (!s.is_zero()) out[e] = RatCoeff(s);
  }
  return out;
}

}  // namespace

TruncatedQSeries TruncatedQSeries::one(int rank, int cutoff) {
  TruncatedQSeries s(rank, cutoff);
  if (cutoff >= 0) s.add(0, LatticePolynomial::constant(rank, RatCoeff(1)));
  return s;
}

TruncatedQSeries TruncatedQSeries::from_ratcoeff(const RatCoeff& c, int rank, int cutoff) {
  TruncatedQSeries s(rank, cutoff);
  if (c.is_zero()) return s;
  auto nsl = v_slices(c.num());
  auto dsl = v_slices(c.den());
  int nlo = nsl.begin()->first;
  int dlo = dsl.begin()->first;
  RatCoeff d0 = dsl.begin()->second;
  int val = nlo - dlo;
  // c = v^val * (sum n_k v^k) / (sum d_k v^k), both with nonzero constant term.
  std::map<int, RatCoeff> res;  // coefficients of the quotient, k >= 0
  for (int k = 0; k + val <= cutoff; ++k) {
    RatCoeff acc;
    auto it = nsl.find(nlo + k);
    if (it != nsl.end()) acc = it->second;
    for (auto& [j, cj] : res) {
      auto dt = dsl.find(dlo + (k - j));
      if (k - j > 0 && dt != dsl.end()) acc -= cj * dt->second;
    }
    RatCoeff ck = acc / d0;
    if (!ck.is_zero()) {
      res[k] = ck;
      s.add(k + val, LatticePolynomial::constant(rank, ck));
    } else {
      res[k] = RatCoeff();
    }
  }
  return s;
}

void TruncatedQSeries::set_cutoff(int c) {
  cutoff_ = c;
  coeffs_.erase(coeffs_.upper_bound(c), coeffs_.end());
}

const LatticePolynomial* TruncatedQSeries::coeff(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? nullptr : &it->second;
}

void TruncatedQSeries::add(int e, const LatticePolynomial& p) {
  if (e > cutoff_ || p.is_zero()) return;
  auto [it, fresh] = coeffs_.emplace(e, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void TruncatedQSeries::add_term(int e, const LatticePolynomial::Exp& x, const RatCoeff& c) {
  if (e > cutoff_ || c.is_zero()) return;
  auto it = coeffs_.find(e);
  if (it == coeffs_.end()) {
    LatticePolynomial p(rank_);
    p.add_term(x, c);
    coeffs_.emplace(e, std::move(p));
  } else {
    it->second.add_term(x, c);
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

TruncatedQSeries TruncatedQSeries::operator-() const {
  TruncatedQSeries r(rank_, cutoff_);
  for (auto& [e, p] : coeffs_) r.coeffs_[e] = -p;
  return r;
}

TruncatedQSeries TruncatedQSeries::operator+(const TruncatedQSeries& o) const {
  TruncatedQSeries r(rank_, std::min(cutoff_, o.cutoff_));
  for (auto& [e, p] : coeffs_)
    if (e <= r.cutoff_) r.add(e, p);
  for (auto& [e, p] : o.coeffs_)
    if (e <= r.cutoff_) r.add(e, p);
  return r;
}

TruncatedQSeries TruncatedQSeries::operator-(const TruncatedQSeries& o) const {
  return *this + (-o);
}

TruncatedQSeries TruncatedQSeries::operator*(const TruncatedQSeries& o) const {
  // Truncation correctness requires knowing the lowest exponents.
  int lo1 = min_exponent(), lo2 = o.min_exponent();
  TruncatedQSeries r(rank_, std::min({cutoff_ + lo2, o.cutoff_ + lo1}));
  for (auto& [e1, p1] : coeffs_) {
    for (auto& [e2, p2] : o.coeffs_) {
      if (e1 + e2 > r.cutoff_) break;
      r.add(e1 + e2, p1 * p2);
    }
  }
  return r;
}

TruncatedQSeries TruncatedQSeries::scale(const RatCoeff& c) const {
  TruncatedQSeries r(rank_, cutoff_);
  if (c.is_zero()) return r;
  for (auto& [e, p] : coeffs_) r.coeffs_[e] = p.scale(c);
  return r;
}

TruncatedQSeries TruncatedQSeries::mul_ratcoeff(const RatCoeff& c) const {
  if (c.is_zero()) return TruncatedQSeries(rank_, cutoff_);
  if (c.num().degree(0) == 0 && c.den().degree(0) == 0) return scale(c);
  // Expand c to enough depth: need exponents up to cutoff - min_exponent.
  TruncatedQSeries cs = from_ratcoeff(c, 0, cutoff_ - min_exponent());
  int val = cs.min_exponent();
  TruncatedQSeries r(rank_, cutoff_ + std::min(0, val));
  for (auto& [e1, p1] : coeffs_)
    for (auto& [e2, p2] : cs.coeffs()) {
      if (e1 + e2 > cutoff_) break;
      r.add(e1 + e2, p1.scale(p2.coeff(LatticePolynomial::Exp{})));
    }
  return r;
}

TruncatedQSeries TruncatedQSeries::shift_v(int e) const {
  TruncatedQSeries r(rank_, cutoff_ + e);
  for (auto& [k, p] : coeffs_) r.coeffs_[k + e] = p;
  return r;
}

TruncatedQSeries TruncatedQSeries::mul_poly(const LatticePolynomial& p) const {
  TruncatedQSeries r(rank_, cutoff_);
  for (auto& [e, q] : coeffs_) r.add(e, q * p);
  return r;
}

TruncatedQSeries TruncatedQSeries::mul_one_plus(int e, const LatticePolynomial::Exp& x,
                                                const RatCoeff& c, int sign) const {
  if (sign == 1) {
    TruncatedQSeries r = *this;
    for (auto& [k, p] : coeffs_) {
      if (k + e > cutoff_) continue;
      r.add(k + e, p.mul_monomial(x, c));
    }
    return r;
  }
  if (e <= 0)
    throw std::invalid_argument("mul_one_plus: geometric factor needs positive v-shift");
  // 1/(1 + c v^e X_x) = sum_m (-c)^m v^{me} X_{mx}
  TruncatedQSeries r = *this;
  int lo = min_exponent();
  RatCoeff pw(1);
  LatticePolynomial::Exp mx(x.size(), 0);
  for (int m = 1; lo + m * e <= cutoff_; ++m) {
    pw = pw * (-c);
    for (std::size_t j = 0; j < x.size(); ++j) mx[j] += x[j];
    for (auto& [k, p] : coeffs_) {
      if (k + m * e > cutoff_) break;
      r.add(k + m * e, p.mul_monomial(mx, pw));
    }
  }
  return r;
}

TruncatedQSeries TruncatedQSeries::inverse() const {
  if (coeffs_.empty()) throw std::domain_error("TruncatedQSeries: inverse of zero");
  int lo = min_exponent();
  const LatticePolynomial& lead = coeffs_.begin()->second;
  if (lead.size() != 1 || lead.terms().begin()->first != LatticePolynomial::Exp(static_cast<std::size_t>(rank_), 0))
    throw std::domain_error("TruncatedQSeries: inverse needs scalar lowest coefficient");
  RatCoeff c0 = lead.terms().begin()->second;
  // (v^lo (c0 + higher))^{-1} = v^{-lo} c0^{-1} (1 + higher/c0)^{-1}
  int depth = cutoff_ - lo;  // powers of the tail needed
  TruncatedQSeries tail(rank_, depth);
  for (auto& [e, p] : coeffs_) {
    if (e == lo) continue;
    tail.add(e - lo, p.scale(c0.inverse()));
  }
  TruncatedQSeries acc = one(rank_, depth);
  TruncatedQSeries pw = one(rank_, depth);
  for (int m = 1; m <= depth && !pw.is_zero(); ++m) {
    pw = pw * tail;
    pw.set_cutoff(depth);
    if ((m & 1) != 0)
      acc -= pw;
    else
      acc += pw;
    if (tail.is_zero()) break;
  }
  acc = acc.scale(c0.inverse());
  // f known to cutoff N with lowest exponent lo: 1/f is exact to N - 2*lo.
  TruncatedQSeries r(rank_, depth - lo);
  for (auto& [e, p] : acc.coeffs()) r.add(e - lo, p);
  return r;
}

TruncatedQSeries TruncatedQSeries::map(
    const std::function<LatticePolynomial(const LatticePolynomial&)>& fn) const {
  TruncatedQSeries r(rank_, cutoff_);
  for (auto& [e, p] : coeffs_) {
    LatticePolynomial q = fn(p);
    if (!q.is_zero()) r.add(e, q);
  }
  return r;
}

bool TruncatedQSeries::equal_to_order(const TruncatedQSeries& o, int order) const {
  return !first_mismatch(o, order).has_value();
}

std::optional<int> TruncatedQSeries::first_mismatch(const TruncatedQSeries& o, int order) const {
  int lo = std::min(min_exponent(), o.min_exponent());
  for (int e = lo; e <= order; ++e) {
    const LatticePolynomial* a = coeff(e);
    const LatticePolynomial* b = o.coeff(e);
    if (a == nullptr && b == nullptr) continue;
    if (a == nullptr || b == nullptr || !(*a == *b)) return e;
  }
  return std::nullopt;
}

std::string TruncatedQSeries::str(const VarNames& names) const {
  std::ostringstream os;
  os << "[cutoff v^" << cutoff_ << "]";
  for (auto& [e, p] : coeffs_) os << " + v^" << e << "*{" << p.str(names) << "}";
  return os.str();
}

TruncatedQSeries grade_by_v(const LatticePolynomial& p, int base, int cutoff) {
  TruncatedQSeries s(p.rank(), cutoff);
  for (auto& [x, c] : p.terms()) {
    TruncatedQSeries cs = TruncatedQSeries::from_ratcoeff(c, 0, cutoff - base);
    for (auto& [k, cp] : cs.coeffs())
      s.add_term(base + k, x, cp.coeff(LatticePolynomial::Exp{}));
  }
  return s;
}

}  // namespace whitdaha
