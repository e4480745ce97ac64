#include "whitdaha/mpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace whitdaha {

MPoly MPoly::variable(int var, int exp) {
  Mono m;
  m.e[var] = exp;
  return monomial(1, m);
}

void MPoly::normalize(std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return b.m < a.m; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < ts.size();) {
    std::size_t j = i;
    mpz_class acc = 0;
    while (j < ts.size() && ts[j].m == ts[i].m) acc += ts[j++].c;
    if (acc != 0) ts[out++] = Term{ts[i].m, acc};
    i = j;
  }
  ts.resize(out);
}

int MPoly::degree(int var) const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, t.m.e[var]);
  return d;
}

int MPoly::valuation(int var) const {
  if (terms_.empty()) return 0;
  int d = terms_[0].m.e[var];
  for (auto& t : terms_) d = std::min(d, t.m.e[var]);
  return d;
}

int MPoly::t_valuation() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].m.e[1] + terms_[0].m.e[2];
  for (auto& t : terms_) d = std::min(d, t.m.e[1] + t.m.e[2]);
  return d;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].m == o.terms_[j].m) {
      mpz_class c = terms_[i].c + o.terms_[j].c;
      if (c != 0) ts.push_back({terms_[i].m, c});
      ++i, ++j;
    } else if (o.terms_[j].m < terms_[i].m) {
      ts.push_back(terms_[i++]);
    } else {
      ts.push_back(o.terms_[j++]);
    }
  }
  for (; i < terms_.size(); ++i) ts.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) ts.push_back(o.terms_[j]);
  MPoly r;
  r.terms_ = std::move(ts);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (terms_.empty() || o.terms_.empty()) return MPoly();
  if (o.terms_.size() == 1) return mul_mono(o.terms_[0].m, o.terms_[0].c);
  if (terms_.size() == 1) return o.mul_mono(terms_[0].m, terms_[0].c);
  // flat product with packed keys; exponents stay well below the bias
  constexpr long kBias = 1L << 20;
  constexpr int kShift = 21;
  auto pack = [](const Mono& m) {
    return ((static_cast<unsigned long long>(m.e[0] + kBias) << (2 * kShift)) |
            (static_cast<unsigned long long>(m.e[1] + kBias) << kShift) |
            static_cast<unsigned long long>(m.e[2] + kBias));
  };
  std::vector<std::pair<unsigned long long, const Term*>> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  std::vector<Term> raw;
  raw.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_) {
      raw.push_back(Term{a.m * b.m, a.c * b.c});
      prod.emplace_back(pack(raw.back().m), &raw.back());
    }
  std::sort(prod.begin(), prod.end(),
            [](auto& x, auto& y) { return x.first > y.first; });
  std::vector<Term> ts;
  ts.reserve(prod.size());
  for (std::size_t i = 0; i < prod.size();) {
    std::size_t j = i;
    mpz_class acc = prod[i].second->c;
    while (++j < prod.size() && prod[j].first == prod[i].first) acc += prod[j].second->c;
    if (acc != 0) ts.push_back(Term{prod[i].second->m, std::move(acc)});
    i = j;
  }
  MPoly r;
  r.terms_ = std::move(ts);
  return r;
}

MPoly MPoly::mul_mono(const Mono& m, const mpz_class& c) const {
  if (c == 0) return MPoly();
  MPoly r = *this;
  for (auto& t : r.terms_) {
    t.m = t.m * m;
    t.c *= c;
  }
  return r;
}

MPoly MPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly r(1), b = *this;
  while (n) {
    if (n & 1) r *= b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

mpz_class MPoly::content() const {
  mpz_class g = 0;
  for (auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (!terms_.empty() && terms_[0].c < 0) g = -g;
  return g;
}

MPoly MPoly::divide_exact(const MPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("MPoly: division by zero");
  MPoly rem = *this;
  std::vector<Term> qt;
  const Term& lead = d.terms_[0];
  while (!rem.is_zero()) {
    const Term& rl = rem.terms_[0];
    if (!lead.m.divides(rl.m) || rl.c % lead.c != 0)
      throw std::runtime_error("MPoly::divide_exact: inexact division");
    Term t{rl.m.divide(lead.m), rl.c / lead.c};
    qt.push_back(t);
    rem = rem - d.mul_mono(t.m, t.c);
  }
  return from_terms(std::move(qt));
}


namespace {

// ------- heuristic gcd (evaluation + reconstruction + verification) -------

mpz_class max_abs_coeff(const MPoly& p) {
  mpz_class m = 0;
  for (auto& t : p.terms()) {
    mpz_class a = abs(t.c);
    if (a > m) m = a;
  }
  return m;
}

// Substitute an integer for one variable.
MPoly eval_var(const MPoly& p, int var, const mpz_class& xi) {
  std::vector<MPoly::Term> ts;
  for (auto& t : p.terms()) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(t.m.e[var]));
    MPoly::Term nt;
    nt.m = t.m;
    nt.m.e[var] = 0;
    nt.c = t.c * pw;
    ts.push_back(std::move(nt));
  }
  return MPoly::from_terms(std::move(ts));
}

// Balanced xi-adic reconstruction of a polynomial in `var` from its value.
MPoly reconstruct_var(MPoly g, int var, const mpz_class& xi) {
  MPoly out;
  int k = 0;
  mpz_class half = xi / 2;
  while (!g.is_zero()) {
    if (k > 400) throw std::runtime_error("heuristic gcd: reconstruction runaway");
    std::vector<MPoly::Term> digit, rest;
    for (auto& t : g.terms()) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), t.c.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) {
        MPoly::Term dt = t;
        dt.c = r;
        dt.m.e[var] = k;
        digit.push_back(dt);
      }
      mpz_class q = (t.c - r) / xi;
      if (q != 0) rest.push_back(MPoly::Term{t.m, q});
    }
    out += MPoly::from_terms(std::move(digit));
    g = MPoly::from_terms(std::move(rest));
    ++k;
  }
  return out;
}

bool divides_exactly(const MPoly& d, const MPoly& a) {
  if (a.is_zero()) return true;
  try {
    (void)a.divide_exact(d);
    return true;
  } catch (...) {
    return false;
  }
}

// One heuristic level for inputs primitive in `var`: evaluate, gcd the
// images through the main entry point, reconstruct, verify by division.
std::optional<MPoly> gcd_heuristic_primitive(const MPoly& a, const MPoly& b, int var) {
  mpz_class bound = max_abs_coeff(a);
  mpz_class bb = max_abs_coeff(b);
  if (bb < bound) bound = bb;
  mpz_class xi = 2 * bound + 29;
  for (int attempt = 0; attempt < 4; ++attempt) {
    MPoly A = eval_var(a, var, xi);
    MPoly B = eval_var(b, var, xi);
    if (!A.is_zero() && !B.is_zero()) {
      MPoly G = MPoly::gcd(A, B);
      MPoly g = reconstruct_var(G, var, xi);
      if (!g.is_zero()) {
        // a primitive pair has a primitive gcd; strip spurious content
        mpz_class c = g.content();
        g = g.divide_exact(MPoly(c));
        if (divides_exactly(g, a) && divides_exactly(g, b)) return g;
      }
    }
    xi = xi * 73794 / 27011 + 1;
  }
  return std::nullopt;
}

}  // namespace

namespace {

// View of an MPoly as a univariate polynomial in `var` with MPoly coefficients.
std::vector<MPoly> coeffs_in(const MPoly& p, int var) {
  int d = p.degree(var);
  std::vector<MPoly> cs(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) cs[static_cast<std::size_t>(k)] = p.slice(var, k);
  return cs;
}

MPoly assemble(const std::vector<MPoly>& cs, int var) {
  MPoly r;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    Mono m;
    m.e[var] = static_cast<int>(k);
    r += cs[k].mul_mono(m, 1);
  }
  return r;
}

int top_var(const MPoly& p) {
  for (int var = 2; var >= 0; --var)
    if (p.degree(var) > 0) return var;
  return -1;
}

// Pseudo-remainder of a by b in variable var (deg_a >= deg_b >= 0 in var).
MPoly prem(MPoly a, const MPoly& b, int var) {
  int db = b.degree(var);
  MPoly lb = b.slice(var, db);
  int da = a.degree(var);
  int steps = da - db + 1;
  while (!a.is_zero() && a.degree(var) >= db) {
    int d = a.degree(var);
    MPoly la = a.slice(var, d);
    Mono shift;
    shift.e[var] = d - db;
    a = a * lb - b * la.mul_mono(shift, 1);
    --steps;
  }
  // Match the standard lb^(da-db+1) * a = q*b + prem convention.
  for (int i = 0; i < steps; ++i) a = a * lb;
  return a;
}

MPoly primitive_wrt(const MPoly& p, int var, MPoly* content_out) {
  auto cs = coeffs_in(p, var);
  MPoly g;
  for (auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : MPoly::gcd(g, c);
    if (g.is_one()) break;
  }
  if (content_out) *content_out = g;
  if (g.is_zero() || g.is_one()) return p;
  return p.divide_exact(g);
}

}  // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) {
    if (b.is_zero()) return MPoly();
    return b.divide_exact(MPoly(b.content()));
  }
  if (b.is_zero()) return gcd(b, a);

  // Integer content first.
  mpz_class ca = a.content(), cb = b.content();
  if (ca < 0) ca = -ca;
  if (cb < 0) cb = -cb;
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  MPoly pa = a.divide_exact(MPoly(a.terms_[0].c < 0 ? -ca : ca));
  MPoly pb = b.divide_exact(MPoly(b.terms_[0].c < 0 ? -cb : cb));

  // Monomial fast path.
  auto mono_gcd = [&](const MPoly& m, const MPoly& p) {
    Mono g = m.terms_[0].m;
    for (auto& t : p.terms_)
      for (int k = 0; k < 3; ++k) g.e[k] = std::min(g.e[k], t.m.e[k]);
    return monomial(cg, g);
  };
  if (pa.is_monomial()) return mono_gcd(pa, pb);
  if (pb.is_monomial()) return mono_gcd(pb, pa);

  int var = std::max(top_var(pa), top_var(pb));
  if (var < 0) return MPoly(cg);

  // Make both primitive in the main variable, recurse on contents.
  MPoly conta, contb;
  MPoly fa = primitive_wrt(pa, var, &conta);
  MPoly fb = primitive_wrt(pb, var, &contb);
  MPoly cont_gcd = gcd(conta, contb);

  if (fa.degree(var) < fb.degree(var)) std::swap(fa, fb);
  if (fb.degree(var) < 0) return MPoly(cg) * cont_gcd;

  // Evaluation-based route first, verified by exact division; fall back to
  // the subresultant sequence when reconstruction misses.
  if (auto hg = gcd_heuristic_primitive(fa, fb, var))
    return *hg * cont_gcd * MPoly(cg);

  // Subresultant polynomial remainder sequence.
  MPoly g(1), h(1);
  while (true) {
    int delta = fa.degree(var) - fb.degree(var);
    MPoly r = prem(fa, fb, var);
    if (r.is_zero()) break;
    if (r.degree(var) == 0) {
      fb = r;
      break;
    }
    MPoly divisor = g * h.pow(delta);
    fa = fb;
    fb = r.divide_exact(divisor);
    g = fa.slice(var, fa.degree(var));
    if (delta >= 1) {
      // h = g^delta / h^(delta-1)
      h = g.pow(delta).divide_exact(h.pow(delta - 1));
    }
  }
  if (fb.degree(var) == 0) return MPoly(cg) * cont_gcd;
  MPoly res = primitive_wrt(fb, var, nullptr);
  mpz_class rc = res.content();
  res = res.divide_exact(MPoly(rc));
  return res * cont_gcd * MPoly(cg);
}

MPoly MPoly::at_t_zero() const {
  std::vector<Term> ts;
  for (auto& t : terms_)
    if (t.m.e[1] == 0 && t.m.e[2] == 0) ts.push_back(t);
  MPoly r;
  r.terms_ = std::move(ts);
  return r;
}

MPoly MPoly::at_v_zero() const {
  std::vector<Term> ts;
  for (auto& t : terms_)
    if (t.m.e[0] == 0) ts.push_back(t);
  MPoly r;
  r.terms_ = std::move(ts);
  return r;
}

MPoly MPoly::reversed(int var) const {
  int d = degree(var);
  std::vector<Term> ts = terms_;
  for (auto& t : ts) t.m.e[var] = d - t.m.e[var];
  return from_terms(std::move(ts));
}

MPoly MPoly::slice(int var, int k) const {
  std::vector<Term> ts;
  for (auto& t : terms_)
    if (t.m.e[var] == k) {
      Term s = t;
      s.m.e[var] = 0;
      ts.push_back(s);
    }
  return from_terms(std::move(ts));
}

double MPoly::eval_double(double v, double s, double u) const {
  double acc = 0;
  for (auto& t : terms_) {
    double x = t.c.get_d();
    for (int i = 0; i < t.m.e[0]; ++i) x *= v;
    for (int i = 0; i < t.m.e[1]; ++i) x *= s;
    for (int i = 0; i < t.m.e[2]; ++i) x *= u;
    acc += x;
  }
  return acc;
}

std::string exponent_str(int num, int den) {
  int g = std::gcd(num < 0 ? -num : num, den);
  if (g > 0) {
    num /= g;
    den /= g;
  }
  std::ostringstream os;
  if (den == 1)
    os << num;
  else
    os << "(" << num << "/" << den << ")";
  return os.str();
}

std::string MPoly::str(const VarNames& names) const {
  if (terms_.empty()) return "0";
  // Ascending order for display.
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->c;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    }
    std::vector<std::string> factors;
    if (it->m.e[0] != 0)
      factors.push_back(names.q +
                        (it->m.e[0] == names.two_mt
                             ? ""
                             : "^" + exponent_str(it->m.e[0], names.two_mt)));
    if (it->m.e[1] != 0)
      factors.push_back((names.collapse_t ? names.t : names.ts) +
                        (it->m.e[1] == 2 ? "" : "^" + exponent_str(it->m.e[1], 2)));
    if (it->m.e[2] != 0)
      factors.push_back((names.collapse_t ? names.t : names.tl) +
                        (it->m.e[2] == 2 ? "" : "^" + exponent_str(it->m.e[2], 2)));
    if (factors.empty()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
  }
  return os.str();
}

}  // namespace whitdaha
