#include "whitdaha/ratcoeff.hpp"

#include <sstream>

namespace whitdaha {

RatCoeff::RatCoeff(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatCoeff: zero denominator");
  reduce();
}

void RatCoeff::reduce() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (!den_.is_one()) {
#ifdef WHITDAHA_NO_GCD
    ;
#else
    MPoly g = MPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
#endif
  }
  mpz_class cn = num_.content(), cd = den_.content();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (cd < 0) g = -g;
  if (g != 1) {
    num_ = num_.divide_exact(MPoly(g));
    den_ = den_.divide_exact(MPoly(g));
  }
}

RatCoeff RatCoeff::v_power(int e) { return monomial(e, 0, 0); }
RatCoeff RatCoeff::ts_half_power(int e) { return monomial(0, e, 0); }
RatCoeff RatCoeff::tl_half_power(int e) { return monomial(0, 0, e); }

RatCoeff RatCoeff::monomial(int ev, int es, int eu, const mpq_class& c) {
  Mono mn, md;
  (ev >= 0 ? mn : md).e[0] = ev >= 0 ? ev : -ev;
  (es >= 0 ? mn : md).e[1] = es >= 0 ? es : -es;
  (eu >= 0 ? mn : md).e[2] = eu >= 0 ? eu : -eu;
  RatCoeff r;
  r.num_ = MPoly::monomial(c.get_num(), mn);
  r.den_ = MPoly::monomial(c.get_den(), md);
  r.reduce();
  return r;
}

RatCoeff RatCoeff::operator-() const {
  RatCoeff r = *this;
  r.num_ = -r.num_;
  return r;
}

RatCoeff RatCoeff::operator+(const RatCoeff& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  RatCoeff r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
  } else {
    MPoly g = MPoly::gcd(den_, o.den_);
    MPoly da = den_.divide_exact(g), db = o.den_.divide_exact(g);
    r.num_ = num_ * db + o.num_ * da;
    r.den_ = den_ * db;
  }
  r.reduce();
  return r;
}

RatCoeff RatCoeff::operator-(const RatCoeff& o) const { return *this + (-o); }

RatCoeff RatCoeff::operator*(const RatCoeff& o) const {
  if (is_zero() || o.is_zero()) return RatCoeff();
  MPoly g1 = MPoly::gcd(num_, o.den_);
  MPoly g2 = MPoly::gcd(o.num_, den_);
  RatCoeff r;
  r.num_ = num_.divide_exact(g1) * o.num_.divide_exact(g2);
  r.den_ = den_.divide_exact(g2) * o.den_.divide_exact(g1);
  r.reduce();
  return r;
}

RatCoeff RatCoeff::operator/(const RatCoeff& o) const {
  if (o.is_zero()) throw std::domain_error("RatCoeff: division by zero");
  return *this * o.inverse();
}

RatCoeff RatCoeff::inverse() const {
  if (is_zero()) throw std::domain_error("RatCoeff: inverse of zero");
  RatCoeff r;
  r.num_ = den_;
  r.den_ = num_;
  if (!r.den_.is_zero() && r.den_.leading().c < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatCoeff RatCoeff::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatCoeff r(1), b = *this;
  while (n) {
    if (n & 1) r *= b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

RatCoeff RatCoeff::at_t_zero() const {
  MPoly d0 = den_.at_t_zero();
  if (d0.is_zero()) throw TZeroPole(den_.str(VarNames{}));
  RatCoeff r;
  r.num_ = num_.at_t_zero();
  r.den_ = d0;
  r.reduce();
  return r;
}

RatCoeff RatCoeff::subst_q_inverse() const {
  if (is_zero()) return RatCoeff();
  int dn = num_.degree(0), dd = den_.degree(0);
  MPoly n = num_.reversed(0), d = den_.reversed(0);
  Mono shift;
  if (dn >= dd) {
    shift.e[0] = dn - dd;
    d = d.mul_mono(shift, 1);
  } else {
    shift.e[0] = dd - dn;
    n = n.mul_mono(shift, 1);
  }
  return RatCoeff(std::move(n), std::move(d));
}

RatCoeff RatCoeff::subst_t_inverse() const {
  if (is_zero()) return RatCoeff();
  MPoly n = num_.reversed(1).reversed(2);
  MPoly d = den_.reversed(1).reversed(2);
  int es = num_.degree(1) - den_.degree(1);
  int eu = num_.degree(2) - den_.degree(2);
  RatCoeff r(std::move(n), std::move(d));
  return r * monomial(0, -es, -eu);
}

double RatCoeff::eval_double(double v, double s, double u) const {
  return num_.eval_double(v, s, u) / den_.eval_double(v, s, u);
}

std::string RatCoeff::str(const VarNames& names) const {
  if (den_.is_one()) {
    return num_.str(names);
  }
  std::ostringstream os;
  if (num_.is_monomial())
    os << num_.str(names);
  else
    os << "(" << num_.str(names) << ")";
  os << "/";
  if (den_.is_monomial())
    os << den_.str(names);
  else
    os << "(" << den_.str(names) << ")";
  return os.str();
}

}  // namespace whitdaha
