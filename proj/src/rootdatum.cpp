#include "whitdaha/rootdatum.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace whitdaha {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
  }
  throw std::invalid_argument(std::string("unknown family: ") + c);
}

std::string wt_str(const Wt& b) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) os << ",";
    os << b[i];
  }
  os << ")";
  return os.str();
}

namespace {

struct TypeData {
  std::vector<std::vector<int>> cartan;
  std::vector<int> nu;
};

TypeData make_type(Family f, int n) {
  auto chain = [&](int len) {
    std::vector<std::vector<int>> a(len, std::vector<int>(len, 0));
    for (int i = 0; i < len; ++i) {
      a[i][i] = 2;
      if (i + 1 < len) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  TypeData d;
  switch (f) {
    case Family::A:
      if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
      d.cartan = chain(n);
      d.nu.assign(n, 1);
      return d;
    case Family::B:
      if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
      d.cartan = chain(n);
      d.cartan[n - 2][n - 1] = -2;
      d.nu.assign(n, 2);
      d.nu[n - 1] = 1;
      return d;
    case Family::C:
      if (n < 2) throw std::invalid_argument("C_n needs n >= 2");
      d.cartan = chain(n);
      d.cartan[n - 1][n - 2] = -2;
      d.nu.assign(n, 1);
      d.nu[n - 1] = 2;
      return d;
    case Family::D:
      if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
      d.cartan = chain(n);
      d.cartan[n - 2][n - 1] = d.cartan[n - 1][n - 2] = 0;
      d.cartan[n - 3][n - 1] = d.cartan[n - 1][n - 3] = -1;
      d.nu.assign(n, 1);
      return d;
    case Family::E: {
      if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
      // Bourbaki: node 2 attaches to node 4 of the chain 1-3-4-5-...-n.
      d.cartan.assign(n, std::vector<int>(n, 0));
      auto link = [&](int i, int j) { d.cartan[i - 1][j - 1] = d.cartan[j - 1][i - 1] = -1; };
      for (int i = 0; i < n; ++i) d.cartan[i][i] = 2;
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int k = 4; k < n; ++k) link(k, k + 1);
      d.nu.assign(n, 1);
      return d;
    }
    case Family::F:
      if (n != 4) throw std::invalid_argument("F needs rank 4");
      d.cartan = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
      d.nu = {2, 2, 1, 1};
      return d;
    case Family::G:
      if (n != 2) throw std::invalid_argument("G needs rank 2");
      d.cartan = {{2, -1}, {-3, 2}};
      d.nu = {1, 3};
      return d;
  }
  throw std::invalid_argument("bad family");
}

std::vector<std::vector<mpq_class>> invert(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    mpq_class p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

RootDatum RootDatum::build(Family family, int rank, LatticeChoice lattice) {
  RootDatum d;
  d.family_ = family;
  d.n_ = rank;
  d.lattice_ = lattice;
  TypeData td = make_type(family, rank);
  d.cartan_ = td.cartan;
  d.nu_ = td.nu;
  d.nu_long_ = *std::max_element(td.nu.begin(), td.nu.end());
  // Symmetrizability sanity: nu_j a_ij == nu_i a_ji.
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (td.nu[j] * td.cartan[i][j] != td.nu[i] * td.cartan[j][i])
        throw std::logic_error("inconsistent Cartan/nu data");
  d.compute_gram();
  d.enumerate_roots();
  d.compute_w0();
  d.compute_minuscule();
  return d;
}

std::string RootDatum::type_string() const {
  std::ostringstream os;
  os << static_cast<char>(family_) << n_ << "/"
     << (lattice_ == LatticeChoice::P ? "P" : "Q");
  return os.str();
}

void RootDatum::compute_gram() {
  std::vector<std::vector<mpq_class>> a(n_, std::vector<mpq_class>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) a[i][j] = cartan_[i][j];
  auto ainv = invert(a);                      // omega_i = sum_k ainv[i][k] alpha_k
  gram_.assign(n_, std::vector<mpq_class>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) gram_[i][j] = ainv[i][j] * nu_[j];
  std::vector<std::vector<mpq_class>> at(n_, std::vector<mpq_class>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) at[i][j] = cartan_[j][i];
  inv_cartan_t_ = invert(at);

  // m_tilde: least positive integer with m*(B,B) integral.
  mpz_class m = 1;
  if (lattice_ == LatticeChoice::P) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), gram_[i][j].get_den().get_mpz_t());
  }
  m_tilde_ = static_cast<int>(m.get_si());
}

void RootDatum::enumerate_roots() {
  std::map<Wt, Root> found;
  for (int i = 0; i < n_; ++i) {
    Root r;
    r.w = Wt(cartan_[i].begin(), cartan_[i].end());
    r.a.assign(n_, 0);
    r.a[i] = 1;
    r.nu = nu_[i];
    r.height = 1;
    found[r.w] = r;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Root> batch;
    for (auto& [w, r] : found) {
      for (int i = 0; i < n_; ++i) {
        Root s = r;
        int p = r.w[i];
        for (int j = 0; j < n_; ++j) s.w[j] -= p * cartan_[i][j];
        s.a[i] -= p;
        bool pos = true;
        for (int j = 0; j < n_; ++j) pos = pos && s.a[j] >= 0;
        if (!pos) continue;
        s.height = 0;
        for (int j = 0; j < n_; ++j) s.height += s.a[j];
        if (!found.count(s.w)) batch.push_back(s);
      }
    }
    for (auto& s : batch)
      if (!found.count(s.w)) {
        found[s.w] = s;
        grew = true;
      }
  }
  pos_roots_.clear();
  for (auto& [w, r] : found) pos_roots_.push_back(r);
  std::sort(pos_roots_.begin(), pos_roots_.end(), [](const Root& x, const Root& y) {
    return std::tie(x.height, x.a) < std::tie(y.height, y.a);
  });
  root_index_.clear();
  for (std::size_t k = 0; k < pos_roots_.size(); ++k) root_index_[pos_roots_[k].w] = static_cast<int>(k);
  int best_s = -1, best_l = -1;
  for (std::size_t k = 0; k < pos_roots_.size(); ++k) {
    if (pos_roots_[k].nu == 1 && (best_s < 0 || pos_roots_[k].height > pos_roots_[best_s].height))
      best_s = static_cast<int>(k);
    if (best_l < 0 || pos_roots_[k].height > pos_roots_[best_l].height) best_l = static_cast<int>(k);
  }
  theta_short_idx_ = static_cast<std::size_t>(best_s);
  theta_long_idx_ = static_cast<std::size_t>(best_l);
}

void RootDatum::compute_w0() {
  Wt x = rho();
  w0_word_.clear();
  std::vector<int> steps;
  while (true) {
    int i = -1;
    for (int k = 0; k < n_; ++k)
      if (x[k] > 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    x = reflect(x, i + 1);
    steps.push_back(i + 1);
  }
  std::reverse(steps.begin(), steps.end());
  w0_word_ = steps;
}

void RootDatum::compute_minuscule() {
  minuscule_.clear();
  for (int i = 0; i < n_; ++i) {
    bool ok = true;
    for (auto& r : pos_roots_) {
      Wt omega(n_, 0);
      omega[i] = 1;
      if (pair_coroot(omega, r) > 1) {
        ok = false;
        break;
      }
    }
    if (ok) minuscule_.push_back(i + 1);
  }
  if (lattice_ == LatticeChoice::Q) minuscule_.clear();
}

const Root* RootDatum::find_positive_root(const Wt& w) const {
  auto it = root_index_.find(w);
  return it == root_index_.end() ? nullptr : &pos_roots_[static_cast<std::size_t>(it->second)];
}

Wt RootDatum::rho_nu(int nu) const {
  Wt r(n_, 0);
  for (int i = 0; i < n_; ++i) r[i] = (nu_[i] == nu) ? 1 : 0;
  return r;
}

Wt RootDatum::rho() const { return Wt(n_, 1); }

int RootDatum::coxeter_number(int nu) const {
  const Root& th = (nu == 1) ? theta_short() : theta_long();
  // h_nu = 1 + (rho, theta'^vee)
  int acc = 1;
  Wt rr = rho();
  acc += pair_coroot(rr, th);
  return acc;
}

bool RootDatum::in_lattice(const Wt& b) const {
  if (lattice_ == LatticeChoice::P) return true;
  for (int j = 0; j < n_; ++j) {
    mpq_class g = 0;
    for (int i = 0; i < n_; ++i) g += inv_cartan_t_[j][i] * b[i];
    if (g.get_den() != 1) return false;
  }
  return true;
}

mpq_class RootDatum::pairing(const Wt& b, const Wt& c) const {
  mpq_class acc = 0;
  for (int i = 0; i < n_; ++i) {
    if (!b[i]) continue;
    for (int j = 0; j < n_; ++j)
      if (c[j]) acc += gram_[i][j] * b[i] * c[j];
  }
  return acc;
}

mpq_class RootDatum::pairing_q(const std::vector<mpq_class>& b,
                               const std::vector<mpq_class>& c) const {
  mpq_class acc = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) acc += gram_[i][j] * b[i] * c[j];
  return acc;
}

mpq_class RootDatum::coroot_height(const Wt& b) const {
  mpq_class acc = 0;
  for (auto& r : pos_roots_)
    for (int i = 0; i < n_; ++i)
      if (b[static_cast<std::size_t>(i)] && r.a[static_cast<std::size_t>(i)])
        acc += mpq_class(b[static_cast<std::size_t>(i)] * r.a[static_cast<std::size_t>(i)] *
                         nu_[static_cast<std::size_t>(i)]) /
                (2 * r.nu);
  return acc;
}

int RootDatum::pair_coroot(const Wt& b, const Root& alpha) const {
  // (b, alpha^vee) = (b, alpha)/nu_alpha = sum_i b_i a_i(alpha) nu_i / nu_alpha
  long num = 0;
  for (int i = 0; i < n_; ++i) num += static_cast<long>(b[i]) * alpha.a[i] * nu_[i];
  if (num % alpha.nu != 0) throw std::logic_error("non-integral coroot pairing");
  return static_cast<int>(num / alpha.nu);
}

int RootDatum::v_exponent_of_pairing(const Wt& b, const Wt& c) const {
  mpq_class x = pairing(b, c) * 2 * m_tilde_;
  if (x.get_den() != 1) throw std::logic_error("pairing not in (1/m~)Z");
  return static_cast<int>(x.get_num().get_si());
}

Wt RootDatum::reflect(const Wt& b, int i) const {
  Wt r = b;
  int p = b[i - 1];
  if (p)
    for (int j = 0; j < n_; ++j) r[j] -= p * cartan_[i - 1][j];
  return r;
}

Wt RootDatum::reflect_root(const Wt& b, const Root& alpha) const {
  int p = pair_coroot(b, alpha);
  Wt r = b;
  if (p)
    for (int j = 0; j < n_; ++j) r[j] -= p * alpha.w[j];
  return r;
}

Wt RootDatum::apply_word(const std::vector<int>& word, Wt b) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) b = reflect(b, *it);
  return b;
}

Wt RootDatum::w0(const Wt& b) const { return apply_word(w0_word_, b); }

bool RootDatum::is_dominant(const Wt& b) const {
  for (int i = 0; i < n_; ++i)
    if (b[i] < 0) return false;
  return true;
}

bool RootDatum::is_antidominant(const Wt& b) const {
  for (int i = 0; i < n_; ++i)
    if (b[i] > 0) return false;
  return true;
}

Wt RootDatum::dominant_rep(const Wt& b) const {
  Wt x = b;
  while (!is_dominant(x)) {
    for (int i = 0; i < n_; ++i)
      if (x[i] < 0) {
        x = reflect(x, i + 1);
        break;
      }
  }
  return x;
}

Wt RootDatum::antidominant_rep(const Wt& b) const {
  Wt x = b;
  while (!is_antidominant(x)) {
    for (int i = 0; i < n_; ++i)
      if (x[i] > 0) {
        x = reflect(x, i + 1);
        break;
      }
  }
  return x;
}

std::vector<int> RootDatum::u_b_word(const Wt& b) const {
  Wt x = b;
  std::vector<int> steps;
  while (!is_antidominant(x)) {
    for (int i = 0; i < n_; ++i)
      if (x[i] > 0) {
        x = reflect(x, i + 1);
        steps.push_back(i + 1);
        break;
      }
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::vector<Wt> RootDatum::orbit(const Wt& b) const {
  std::set<Wt> seen{b};
  std::vector<Wt> out{b};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 1; i <= n_; ++i) {
      Wt c = reflect(out[k], i);
      if (seen.insert(c).second) out.push_back(c);
    }
  }
  return out;
}

std::vector<std::pair<Wt, std::vector<int>>> RootDatum::orbit_with_words(const Wt& b_plus) const {
  std::map<Wt, std::vector<int>> words;
  std::vector<Wt> queue{b_plus};
  words[b_plus] = {};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int i = 1; i <= n_; ++i) {
      Wt c = reflect(queue[k], i);
      if (!words.count(c)) {
        std::vector<int> w = words[queue[k]];
        w.insert(w.begin(), i);
        words[c] = std::move(w);
        queue.push_back(c);
      }
    }
  }
  std::vector<std::pair<Wt, std::vector<int>>> out;
  for (auto& q : queue) out.emplace_back(q, words[q]);
  return out;
}

bool RootDatum::in_Qplus(const Wt& diff) const {
  for (int j = 0; j < n_; ++j) {
    mpq_class g = 0;
    for (int i = 0; i < n_; ++i) g += inv_cartan_t_[j][i] * diff[i];
    if (g.get_den() != 1 || g < 0) return false;
  }
  return true;
}

bool RootDatum::preceq(const Wt& b, const Wt& c) const {
  Wt bm = antidominant_rep(b), cm = antidominant_rep(c);
  if (bm == cm) return le_Q(b, c);
  Wt d = cm;
  for (int i = 0; i < n_; ++i) d[i] -= bm[i];
  return in_Qplus(d);
}

bool RootDatum::prec(const Wt& b, const Wt& c) const { return b != c && preceq(b, c); }

// ---------------------------------------------------------------------------
// extended affine Weyl group

ExtAffineElement RootDatum::identity_element() const {
  return ExtAffineElement{Wt(n_, 0), {}};
}

ExtAffineElement RootDatum::translation_element(const Wt& b) const {
  return ExtAffineElement{b, {}};
}

ExtAffineElement RootDatum::simple_reflection(int i) const {
  if (i == 0) {
    const Root& th = theta_short();
    std::vector<int> word;
    // s_theta as a word: u * s_j * u^{-1} where u(alpha_j) = theta.
    // Build by reflecting theta down to a simple root.
    Wt x = th.w;
    std::vector<int> down;
    while (true) {
      int simple = -1;
      for (int k = 0; k < n_; ++k) {
        Wt e(cartan_[k].begin(), cartan_[k].end());
        if (x == e) {
          simple = k + 1;
          break;
        }
      }
      if (simple > 0) {
        word = down;
        word.push_back(simple);
        for (auto it = down.rbegin(); it != down.rend(); ++it) word.push_back(*it);
        break;
      }
      bool moved = false;
      for (int k = 1; k <= n_; ++k) {
        Wt y = reflect(x, k);
        const Root* rx = find_positive_root(x);
        const Root* ry = find_positive_root(y);
        if (rx && ry && ry->height < rx->height) {
          down.push_back(k);
          x = y;
          moved = true;
          break;
        }
      }
      if (!moved) throw std::logic_error("cannot reduce theta to simple root");
    }
    return ExtAffineElement{th.w, word};
  }
  std::vector<int> w{i};
  return ExtAffineElement{Wt(n_, 0), w};
}

namespace {
std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}
}  // namespace

ExtAffineElement RootDatum::compose(const ExtAffineElement& x, const ExtAffineElement& y) const {
  ExtAffineElement r;
  r.translation = x.translation;
  Wt shifted = apply_word(x.finite_word, y.translation);
  for (int i = 0; i < n_; ++i) r.translation[i] += shifted[i];
  r.finite_word = concat(x.finite_word, y.finite_word);
  // Keep the finite word short: reduce it by greedy descent when it grows.
  if (r.finite_word.size() > static_cast<std::size_t>(2 * w0_word_.size())) {
    std::vector<Wt> images(n_);
    for (int i = 0; i < n_; ++i) {
      Wt e(n_, 0);
      e[i] = 1;
      images[static_cast<std::size_t>(i)] = apply_word(r.finite_word, e);
    }
    auto act = [&](const Wt& b) {
      Wt out(n_, 0);
      for (int i = 0; i < n_; ++i)
        if (b[i])
          for (int j = 0; j < n_; ++j) out[j] += b[i] * images[static_cast<std::size_t>(i)][j];
      return out;
    };
    std::vector<int> reduced;
    // w = w' s_i with w(alpha_i) < 0; unwind from the right.
    while (true) {
      int desc = -1;
      for (int i = 1; i <= n_; ++i) {
        Wt a(cartan_[i - 1].begin(), cartan_[i - 1].end());
        Wt img = act(a);
        if (!find_positive_root(img)) {
          desc = i;
          break;
        }
      }
      if (desc < 0) break;
      reduced.push_back(desc);
      std::vector<Wt> next(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) {
        // update images to w*s_desc: next[i] = w(s_desc(e_i))
        Wt e(n_, 0);
        e[i] = 1;
        Wt se = reflect(e, desc);
        Wt out(n_, 0);
        for (int k = 0; k < n_; ++k)
          if (se[k])
            for (int j = 0; j < n_; ++j) out[j] += se[k] * images[static_cast<std::size_t>(k)][j];
        next[static_cast<std::size_t>(i)] = out;
      }
      images = std::move(next);
    }
    std::reverse(reduced.begin(), reduced.end());
    r.finite_word = reduced;
  }
  return r;
}

ExtAffineElement RootDatum::inverse(const ExtAffineElement& x) const {
  ExtAffineElement r;
  r.finite_word.assign(x.finite_word.rbegin(), x.finite_word.rend());
  Wt nb = x.translation;
  for (auto& v : nb) v = -v;
  r.translation = apply_word(r.finite_word, nb);
  return r;
}

bool RootDatum::equal_elements(const ExtAffineElement& x, const ExtAffineElement& y) const {
  if (x.translation != y.translation) return false;
  for (int i = 0; i < n_; ++i) {
    Wt e(n_, 0);
    e[i] = 1;
    if (apply_word(x.finite_word, e) != apply_word(y.finite_word, e)) return false;
  }
  return true;
}

AffineRoot RootDatum::act_affine_root(const ExtAffineElement& x, const AffineRoot& r) const {
  AffineRoot out;
  out.alpha = apply_word(x.finite_word, r.alpha);
  const Root* pr = find_positive_root(out.alpha);
  Wt neg = out.alpha;
  for (auto& v : neg) v = -v;
  const Root* nr = pr ? pr : find_positive_root(neg);
  if (!nr) throw std::logic_error("act_affine_root: not a root");
  // [alpha, nu j] -> [w(alpha), nu j - (w(alpha), b)]
  int p = pair_coroot(x.translation, *nr) * (pr ? 1 : -1);
  out.j = r.j - p;
  return out;
}

Wt RootDatum::act_affine_point(const ExtAffineElement& x, const Wt& z) const {
  Wt r = apply_word(x.finite_word, z);
  for (int i = 0; i < n_; ++i) r[i] += x.translation[i];
  return r;
}

Wt RootDatum::affine_reflect_point(int i, const Wt& z) const {
  if (i > 0) return reflect(z, i);
  const Root& th = theta_short();
  Wt r = reflect_root(z, th);
  for (int j = 0; j < n_; ++j) r[j] += th.w[j];
  return r;
}

bool RootDatum::affine_root_positive(const AffineRoot& r) const {
  if (r.j > 0) return true;
  if (r.j < 0) return false;
  return find_positive_root(r.alpha) != nullptr;
}

mpq_class RootDatum::alpha_pairing_affine(int i, const Wt& z) const {
  if (i > 0) {
    mpq_class x = nu_[i - 1];
    return x * z[i - 1];
  }
  const Root& th = theta_short();
  mpq_class acc = 1;
  Wt thw = th.w;
  acc -= pairing(thw, z);
  return acc;
}

RootDatum::ReducedWord RootDatum::reduced_word(const ExtAffineElement& x) const {
  ReducedWord out;
  ExtAffineElement cur = x;
  std::vector<AffineRoot> simple_affine;
  for (int i = 0; i <= n_; ++i) {
    if (i == 0)
      simple_affine.push_back(AffineRoot{[&] {
                                           Wt w = theta_short().w;
                                           for (auto& v : w) v = -v;
                                           return w;
                                         }(),
                                         1});
    else
      simple_affine.push_back(AffineRoot{Wt(cartan_[i - 1].begin(), cartan_[i - 1].end()), 0});
  }
  while (true) {
    int desc = -1;
    for (int i = 0; i <= n_; ++i) {
      AffineRoot img = act_affine_root(cur, simple_affine[static_cast<std::size_t>(i)]);
      if (!affine_root_positive(img)) {
        desc = i;
        break;
      }
    }
    if (desc < 0) break;
    out.word.push_back(desc);
    cur = compose(cur, simple_reflection(desc));
  }
  out.pi = cur;
  out.pi_index = 0;
  if (!equal_elements(cur, identity_element())) {
    bool matched = false;
    for (int r : minuscule_) {
      if (equal_elements(cur, pi_r(r))) {
        out.pi_index = r;
        matched = true;
        break;
      }
    }
    if (!matched) throw std::logic_error("length-zero remainder is not a diagram rotation");
  }
  return out;
}

int RootDatum::length(const ExtAffineElement& x) const {
  return static_cast<int>(reduced_word(x).word.size());
}

std::vector<int> RootDatum::length_nu(const ExtAffineElement& x) const {
  auto rw = reduced_word(x);
  std::vector<int> counts(2, 0);
  for (int i : rw.word) {
    int nu = (i == 0) ? 1 : nu_[i - 1];
    ++counts[static_cast<std::size_t>(nu_index(nu))];
  }
  return counts;
}

std::vector<AffineRoot> RootDatum::lambda_set(const ExtAffineElement& x) const {
  auto rw = reduced_word(x);
  std::vector<AffineRoot> out;
  ExtAffineElement prefix = identity_element();
  for (int k : rw.word) {
    AffineRoot a = (k == 0) ? AffineRoot{[&] {
                                Wt w = theta_short().w;
                                for (auto& v : w) v = -v;
                                return w;
                              }(),
                              1}
                            : AffineRoot{Wt(cartan_[k - 1].begin(), cartan_[k - 1].end()), 0};
    out.push_back(act_affine_root(prefix, a));
    prefix = compose(prefix, simple_reflection(k));
  }
  return out;
}

std::vector<AffineRoot> RootDatum::lambda_set_translation(const Wt& b) const {
  std::vector<AffineRoot> out;
  for (auto& r : pos_roots_) {
    int p = pair_coroot(b, r);
    for (int j = 0; j < p; ++j) out.push_back(AffineRoot{r.w, j});
    Wt neg = r.w;
    for (auto& v : neg) v = -v;
    int pn = -p;  // (b, (-alpha)^vee)
    for (int j = 1; j <= pn; ++j) out.push_back(AffineRoot{neg, j});
  }
  return out;
}

RootDatum::PiomDecomposition RootDatum::antidominant_decomposition(const Wt& b) const {
  PiomDecomposition out;
  out.u_word = u_b_word(b);
  out.b_minus = apply_word(out.u_word, b);
  ExtAffineElement u{Wt(n_, 0), out.u_word};
  out.pi_b = compose(translation_element(b), inverse(u));
  return out;
}

std::vector<std::pair<const Root*, int>> RootDatum::lambda_prime_pi(const Wt& b) const {
  auto dec = antidominant_decomposition(b);
  auto lam = lambda_set(dec.pi_b);
  std::vector<std::pair<const Root*, int>> out;
  for (auto& ar : lam) {
    Wt neg = ar.alpha;
    for (auto& v : neg) v = -v;
    const Root* r = find_positive_root(neg);
    if (!r || ar.j <= 0) throw std::logic_error("lambda(pi_b) has unexpected shape");
    out.emplace_back(r, ar.j);
  }
  return out;
}

ExtAffineElement RootDatum::pi_r(int r) const {
  Wt omega(n_, 0);
  omega[r - 1] = 1;
  Wt om = omega;
  ExtAffineElement u{Wt(n_, 0), u_b_word(om)};
  return compose(translation_element(om), inverse(u));
}

int RootDatum::pi_r_on_node(int r, int i) const {
  ExtAffineElement pr = pi_r(r);
  AffineRoot a = (i == 0) ? AffineRoot{[&] {
                              Wt w = theta_short().w;
                              for (auto& v : w) v = -v;
                              return w;
                            }(),
                            1}
                          : AffineRoot{Wt(cartan_[i - 1].begin(), cartan_[i - 1].end()), 0};
  AffineRoot img = act_affine_root(pr, a);
  if (img.j == 1) {
    Wt neg = img.alpha;
    for (auto& v : neg) v = -v;
    if (neg == theta_short().w) return 0;
  }
  if (img.j == 0) {
    for (int k = 0; k < n_; ++k)
      if (img.alpha == Wt(cartan_[k].begin(), cartan_[k].end())) return k + 1;
  }
  throw std::logic_error("pi_r does not permute the affine simple roots");
}

RootDatum::EvalPoint RootDatum::spectral_vector(const Wt& b) const {
  EvalPoint p;
  p.lattice.assign(b.begin(), b.end());
  auto dec = antidominant_decomposition(b);
  std::vector<int> uinv(dec.u_word.rbegin(), dec.u_word.rend());
  p.tshift.resize(static_cast<std::size_t>(nu_count()));
  for (int idx = 0; idx < nu_count(); ++idx) {
    int nu = (idx == 0) ? 1 : nu_long_;
    Wt rv = rho_nu(nu);
    Wt moved = apply_word(uinv, rv);
    std::vector<mpq_class> sh(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) sh[static_cast<std::size_t>(i)] = mpq_class(-moved[i]) / nu;
    p.tshift[static_cast<std::size_t>(idx)] = std::move(sh);
  }
  return p;
}

RootDatum::EvalPoint RootDatum::minus_rho_k() const { return spectral_vector(Wt(n_, 0)); }

RootDatum::EvalPoint RootDatum::plus_rho_k() const {
  EvalPoint p = minus_rho_k();
  for (auto& sh : p.tshift)
    for (auto& c : sh) c = -c;
  return p;
}

RootDatum::EvalPoint RootDatum::lattice_minus_rho_k(const Wt& c) const {
  EvalPoint p = minus_rho_k();
  for (int i = 0; i < n_; ++i) p.lattice[static_cast<std::size_t>(i)] = c[i];
  return p;
}

RootDatum::EvalPoint RootDatum::lattice_point(const Wt& c) const {
  EvalPoint p;
  p.lattice.assign(c.begin(), c.end());
  p.tshift.assign(static_cast<std::size_t>(nu_count()),
                  std::vector<mpq_class>(static_cast<std::size_t>(n_), 0));
  return p;
}

std::vector<Wt> RootDatum::lattice_ball(const mpq_class& norm_bound) const {
  std::vector<Wt> out;
  int s = 0;
  while (true) {
    bool shell_hit = false;
    mpq_class shell_min = -1;
    std::vector<int> c(static_cast<std::size_t>(n_), -s);
    while (true) {
      int maxabs = 0;
      for (int v : c) maxabs = std::max(maxabs, v < 0 ? -v : v);
      if (maxabs == s) {
        Wt b(c.begin(), c.end());
        mpq_class nn = pairing(b, b);
        if (shell_min < 0 || nn < shell_min) shell_min = nn;
        if (nn <= norm_bound && in_lattice(b)) {
          out.push_back(b);
          shell_hit = true;
        }
      }
      int k = 0;
      while (k < n_ && c[static_cast<std::size_t>(k)] == s) c[static_cast<std::size_t>(k++)] = -s;
      if (k == n_) break;
      ++c[static_cast<std::size_t>(k)];
    }
    if (!shell_hit && s > 0 && shell_min > norm_bound) break;
    ++s;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Wt> RootDatum::box(int bound) const {
  std::vector<Wt> out;
  std::vector<int> c(static_cast<std::size_t>(n_), -bound);
  while (true) {
    Wt b(c.begin(), c.end());
    if (in_lattice(b)) out.push_back(b);
    int k = 0;
    while (k < n_ && c[static_cast<std::size_t>(k)] == bound) c[static_cast<std::size_t>(k++)] = -bound;
    if (k == n_) break;
    ++c[static_cast<std::size_t>(k)];
  }
  return out;
}

std::vector<Wt> RootDatum::antidominant_box(int bound) const {
  std::vector<Wt> out;
  for (auto& b : box(bound))
    if (is_antidominant(b)) out.push_back(b);
  return out;
}

std::string RootDatum::json_dump() const {
  nlohmann::json j;
  j["type"] = type_string();
  j["rank"] = n_;
  j["cartan"] = cartan_;
  j["nu"] = nu_;
  j["m_tilde"] = m_tilde_;
  j["minuscule"] = minuscule_;
  std::vector<std::vector<int>> roots;
  std::vector<int> nus;
  for (auto& r : pos_roots_) {
    roots.push_back(std::vector<int>(r.w.begin(), r.w.end()));
    nus.push_back(r.nu);
  }
  j["positive_roots"] = roots;
  j["root_nu"] = nus;
  j["theta_short"] = std::vector<int>(theta_short().w.begin(), theta_short().w.end());
  j["theta_long"] = std::vector<int>(theta_long().w.begin(), theta_long().w.end());
  j["coxeter_h"] = {coxeter_number(1), coxeter_number(nu_long_)};
  return j.dump(2);
}

VarNames RootDatum::var_names() const {
  VarNames v;
  v.two_mt = two_mt();
  v.collapse_t = simply_laced();
  return v;
}

}  // namespace whitdaha
