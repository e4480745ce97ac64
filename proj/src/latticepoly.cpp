#include "whitdaha/latticepoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace whitdaha {

LatticePolynomial LatticePolynomial::constant(int rank, const RatCoeff& c) {
  LatticePolynomial p(rank);
  if (!c.is_zero()) p.terms_[Exp(static_cast<std::size_t>(rank), 0)] = c;
  return p;
}

LatticePolynomial LatticePolynomial::monomial(const Exp& e, const RatCoeff& c) {
  LatticePolynomial p(static_cast<int>(e.size()));
  if (!c.is_zero()) p.terms_[e] = c;
  return p;
}

RatCoeff LatticePolynomial::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RatCoeff() : it->second;
}

void LatticePolynomial::set_coeff(const Exp& e, const RatCoeff& c) {
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

void LatticePolynomial::add_term(const Exp& e, const RatCoeff& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LatticePolynomial LatticePolynomial::operator-() const {
  LatticePolynomial r(rank_);
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LatticePolynomial LatticePolynomial::operator+(const LatticePolynomial& o) const {
  LatticePolynomial r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LatticePolynomial LatticePolynomial::operator-(const LatticePolynomial& o) const {
  LatticePolynomial r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LatticePolynomial LatticePolynomial::operator*(const LatticePolynomial& o) const {
  if (rank_ != o.rank_ && !is_zero() && !o.is_zero())
    throw std::invalid_argument("LatticePolynomial: rank mismatch in product");
  LatticePolynomial r(rank_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      Exp e = e1;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      r.add_term(e, c1 * c2);
    }
  return r;
}

LatticePolynomial LatticePolynomial::scale(const RatCoeff& c) const {
  LatticePolynomial r(rank_);
  if (c.is_zero()) return r;
  for (auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

LatticePolynomial LatticePolynomial::mul_monomial(const Exp& m, const RatCoeff& c) const {
  LatticePolynomial r(rank_);
  if (c.is_zero()) return r;
  for (auto& [e, v] : terms_) {
    Exp ne = e;
    for (std::size_t k = 0; k < ne.size(); ++k) ne[k] += m[k];
    r.terms_[ne] = v * c;
  }
  return r;
}

LatticePolynomial LatticePolynomial::invert_block(int off, int len) const {
  if (len < 0) len = rank_ - off;
  LatticePolynomial r(rank_);
  for (auto& [e, v] : terms_) {
    Exp ne = e;
    for (int k = off; k < off + len; ++k) ne[static_cast<std::size_t>(k)] = -ne[static_cast<std::size_t>(k)];
    r.terms_[ne] = v;
  }
  return r;
}

LatticePolynomial LatticePolynomial::map_terms(
    const std::function<std::pair<Exp, RatCoeff>(const Exp&, const RatCoeff&)>& fn) const {
  LatticePolynomial r(rank_);
  for (auto& [e, v] : terms_) {
    auto [ne, nv] = fn(e, v);
    r.add_term(ne, nv);
  }
  return r;
}

LatticePolynomial LatticePolynomial::coeff_map(
    const std::function<RatCoeff(const RatCoeff&)>& fn) const {
  LatticePolynomial r(rank_);
  for (auto& [e, v] : terms_) r.add_term(e, fn(v));
  return r;
}

LatticePolynomial LatticePolynomial::divide_monomial_minus_one(const Exp& mu, int vpow) const {
  // Solve g * (v^vpow X_mu - 1) = f along mu-strings.
  int pivot = -1;
  for (std::size_t k = 0; k < mu.size(); ++k)
    if (mu[k] != 0) {
      pivot = static_cast<int>(k);
      break;
    }
  if (pivot < 0) throw std::invalid_argument("divide_monomial_minus_one: zero direction");
  struct Line {
    std::map<int, RatCoeff> pos;  // k -> coefficient at key + k*mu
  };
  std::map<Exp, Line> lines;
  for (auto& [e, c] : terms_) {
    int step = e[static_cast<std::size_t>(pivot)];
    int k;
    int mp = mu[static_cast<std::size_t>(pivot)];
    // floor division so the key is canonical within the string
    k = step / mp;
    if (step % mp != 0 && ((step % mp) ^ mp) < 0) --k;
    Exp key = e;
    bool aligned = true;
    for (std::size_t j = 0; j < key.size(); ++j) {
      key[j] -= k * mu[j];
      // alignment check happens implicitly: members of the same string share key
    }
    (void)aligned;
    lines[key].pos[k] = c;
  }
  LatticePolynomial g(rank_);
  RatCoeff vp = RatCoeff::v_power(vpow);
  for (auto& [key, line] : lines) {
    int klo = line.pos.begin()->first;
    int khi = line.pos.rbegin()->first;
    RatCoeff prev;  // g_{k-1}
    for (int k = klo; k <= khi; ++k) {
      auto it = line.pos.find(k);
      RatCoeff fk = (it == line.pos.end()) ? RatCoeff() : it->second;
      RatCoeff gk = vp * prev - fk;
      if (k == khi) {
        if (!gk.is_zero())
          throw std::runtime_error("divide_monomial_minus_one: inexact division");
        break;
      }
      if (!gk.is_zero()) {
        Exp e = key;
        for (std::size_t j = 0; j < e.size(); ++j) e[j] += k * mu[j];
        g.terms_[e] = gk;
      }
      prev = gk;
    }
  }
  return g;
}

std::string LatticePolynomial::str(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str(names) << ")*X" << wt_str(Exp(e.begin(), e.end()));
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {
LatticePolynomial::Exp slice(const LatticePolynomial::Exp& e, int off, int n) {
  return LatticePolynomial::Exp(e.begin() + off, e.begin() + off + n);
}
}  // namespace

LatticePolynomial act_simple(const RootDatum& d, int i, const LatticePolynomial& f, int off) {
  const int n = d.rank();
  if (i > 0) {
    return f.map_terms([&](const LatticePolynomial::Exp& e, const RatCoeff& c) {
      Wt b = slice(e, off, n);
      Wt sb = d.reflect(b, i);
      LatticePolynomial::Exp ne = e;
      for (int k = 0; k < n; ++k) ne[static_cast<std::size_t>(off + k)] = sb[static_cast<std::size_t>(k)];
      return std::make_pair(ne, c);
    });
  }
  const Root& th = d.theta_short();
  return f.map_terms([&](const LatticePolynomial::Exp& e, const RatCoeff& c) {
    Wt b = slice(e, off, n);
    int p = d.pair_coroot(b, th);  // (b, theta) for the short theta
    Wt sb = d.reflect_root(b, th);
    LatticePolynomial::Exp ne = e;
    for (int k = 0; k < n; ++k) ne[static_cast<std::size_t>(off + k)] = sb[static_cast<std::size_t>(k)];
    return std::make_pair(ne, c * RatCoeff::v_power(p * d.two_mt()));
  });
}

LatticePolynomial act_word(const RootDatum& d, const std::vector<int>& word,
                           const LatticePolynomial& f, int off) {
  LatticePolynomial g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = act_simple(d, *it, g, off);
  return g;
}

RatCoeff evaluate_monomial_block(const RootDatum& d, const LatticePolynomial::Exp& e,
                                 const RootDatum::EvalPoint& pt, int off) {
  const int n = d.rank();
  std::vector<mpq_class> a(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(off + k)];
  mpq_class vq = d.pairing_q(a, pt.lattice) * 2 * d.m_tilde();
  if (vq.get_den() != 1) throw std::logic_error("evaluate_monomial: fractional v-exponent");
  int vexp = static_cast<int>(vq.get_num().get_si());
  int es = 0, eu = 0;
  for (int idx = 0; idx < d.nu_count(); ++idx) {
    mpq_class te = d.pairing_q(a, pt.tshift[static_cast<std::size_t>(idx)]) * 2;
    if (te.get_den() != 1) throw std::logic_error("evaluate_monomial: t-exponent denominator > 2");
    int doubled = static_cast<int>(te.get_num().get_si());
    if (idx == 0)
      es = doubled;
    else
      eu = doubled;
  }
  if (d.nu_count() == 1) eu = 0;
  return RatCoeff::monomial(vexp, es, eu);
}

RatCoeff evaluate_at(const RootDatum& d, const LatticePolynomial& f,
                     const RootDatum::EvalPoint& pt) {
  RatCoeff acc;
  for (auto& [e, c] : f.terms()) acc += c * evaluate_monomial_block(d, e, pt, 0);
  return acc;
}

LatticePolynomial specialize_block(const RootDatum& d, const LatticePolynomial& f,
                                   const RootDatum::EvalPoint& pt, int off) {
  const int n = d.rank();
  LatticePolynomial out(f.rank() - n);
  for (auto& [e, c] : f.terms()) {
    RatCoeff val = c * evaluate_monomial_block(d, e, pt, off);
    LatticePolynomial::Exp rest;
    rest.reserve(e.size() - static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < e.size(); ++k)
      if (k < static_cast<std::size_t>(off) || k >= static_cast<std::size_t>(off + n))
        rest.push_back(e[k]);
    out.add_term(rest, val);
  }
  return out;
}

LatticePolynomial shift_block(const RootDatum& d, const LatticePolynomial& f,
                              const RootDatum::EvalPoint& pt, int off) {
  return f.map_terms([&](const LatticePolynomial::Exp& e, const RatCoeff& c) {
    return std::make_pair(e, c * evaluate_monomial_block(d, e, pt, off));
  });
}

bool w_invariant(const RootDatum& d, const LatticePolynomial& f, int off) {
  for (int i = 1; i <= d.rank(); ++i)
    if (!(act_simple(d, i, f, off) == f)) return false;
  return true;
}

std::string canonical_str(const RootDatum& d, const LatticePolynomial& f) {
  if (f.is_zero()) return "0";
  struct Entry {
    Wt dom;
    int ht2;  // 2*(rho^vee, dom) proxy: sum of coords of dominant rep
    LatticePolynomial::Exp e;
    const RatCoeff* c;
  };
  std::vector<Entry> entries;
  for (auto& [e, c] : f.terms()) {
    Entry en;
    en.e = e;
    en.c = &c;
    Wt b(e.begin(), e.end());
    en.dom = d.dominant_rep(b);
    en.ht2 = 0;
    for (int x : en.dom) en.ht2 += x;
    entries.push_back(en);
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.ht2 != b.ht2) return a.ht2 > b.ht2;
    if (a.dom != b.dom) return a.dom > b.dom;
    return a.e > b.e;
  });
  VarNames names = d.var_names();
  std::ostringstream os;
  bool first = true;
  for (auto& en : entries) {
    if (!first) os << " + ";
    first = false;
    bool zero_exp = true;
    for (int x : en.e) zero_exp = zero_exp && x == 0;
    if (zero_exp) {
      os << en.c->str(names);
      continue;
    }
    std::string cs = en.c->str(names);
    if (cs != "1") {
      bool needs_parens = cs.find(' ') != std::string::npos;
      os << (needs_parens ? "(" + cs + ")" : cs) << "*";
    }
    if (d.rank() == 1) {
      int p = en.e[0];
      os << "X";
      if (p != 1) os << "^" << p;
    } else {
      bool started = false;
      for (int k = 0; k < d.rank(); ++k) {
        int p = en.e[static_cast<std::size_t>(k)];
        if (!p) continue;
        if (started) os << "*";
        started = true;
        os << "X" << (k + 1);
        if (p != 1) os << "^" << p;
      }
      if (!started) os << "1";
    }
  }
  return os.str();
}

}  // namespace whitdaha
