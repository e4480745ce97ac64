#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "whitdaha/mpoly.hpp"

namespace whitdaha {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };
enum class LatticeChoice { Q, P };

Family family_from_char(char c);

// Lattice vectors are stored by their fundamental-weight coordinates
// l_i = (b, alpha_i^vee); these are integers for any lattice between Q and P.
using Wt = std::vector<int>;

struct Root {
  Wt w;                    // weight coordinates (b, alpha_i^vee)
  std::vector<int> a;      // coordinates in the simple-root basis
  int nu = 1;              // (alpha, alpha)/2
  int height = 0;          // sum of simple-root coordinates
};

// Affine root [alpha, nu_alpha * j]; alpha is a finite root, j an integer.
struct AffineRoot {
  Wt alpha;
  int j = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend bool operator<(const AffineRoot& x, const AffineRoot& y) {
    return std::tie(x.j, x.alpha) < std::tie(y.j, y.alpha);
  }
};

// Element of the extended affine Weyl group in the normal form
// (translation b) * (finite w); the finite part is kept as a word in the
// simple reflections of W.  Affine action: z -> b + w(z).
struct ExtAffineElement {
  Wt translation;
  std::vector<int> finite_word;  // indices in 1..n, applied right-to-left
};

class RootDatum {
 public:
  static RootDatum build(Family family, int rank, LatticeChoice lattice);

  Family family() const { return family_; }
  int rank() const { return n_; }
  LatticeChoice lattice() const { return lattice_; }
  std::string type_string() const;

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<int>& nu() const { return nu_; }
  int nu_short() const { return 1; }
  int nu_long() const { return nu_long_; }
  bool simply_laced() const { return nu_long_ == 1; }
  int m_tilde() const { return m_tilde_; }
  int two_mt() const { return 2 * m_tilde_; }

  const std::vector<Root>& positive_roots() const { return pos_roots_; }
  const Root& theta_short() const { return pos_roots_[theta_short_idx_]; }  // max short
  const Root& theta_long() const { return pos_roots_[theta_long_idx_]; }    // max root
  const Root* find_positive_root(const Wt& w) const;

  // rho_nu weight coordinates: (rho_nu)_i = 1 if nu_i == nu else 0.
  Wt rho_nu(int nu) const;
  Wt rho() const;  // all ones
  int coxeter_number(int nu) const;  // h_nu = 1 + (rho, theta'^vee)

  const std::vector<int>& minuscule_indices() const { return minuscule_; }
  bool in_lattice(const Wt& b) const;  // membership in B

  // --- exact pairings (values in (1/m_tilde) Z, returned as mpq) ---
  mpq_class pairing(const Wt& b, const Wt& c) const;          // (b, c)
  mpq_class pairing_q(const std::vector<mpq_class>& b, const std::vector<mpq_class>& c) const;
  // (rho^vee, b) with rho^vee = sum_{alpha>0} alpha^vee / 2; equals the usual
  // height on the root lattice.
  mpq_class coroot_height(const Wt& b) const;
  int pair_coroot(const Wt& b, const Root& alpha) const;      // (b, alpha^vee)
  mpq_class norm_half(const Wt& b) const { return pairing(b, b) / 2; }
  // 2*m_tilde*(b,c) as an exact integer (the v-exponent of q^{(b,c)}).
  int v_exponent_of_pairing(const Wt& b, const Wt& c) const;

  // --- finite Weyl group ---
  Wt reflect(const Wt& b, int i) const;                 // s_i(b), 1 <= i <= n
  Wt reflect_root(const Wt& b, const Root& alpha) const;
  Wt apply_word(const std::vector<int>& word, Wt b) const;  // word right-to-left
  Wt w0(const Wt& b) const;                             // longest element action
  std::vector<int> w0_word() const { return w0_word_; }
  Wt dominant_rep(const Wt& b) const;                   // b_+
  Wt antidominant_rep(const Wt& b) const;               // b_-
  bool is_dominant(const Wt& b) const;
  bool is_antidominant(const Wt& b) const;
  std::vector<Wt> orbit(const Wt& b) const;             // W(b), BFS order
  // Orbit with, for each element, a minimal-length word w_c with c = w_c(b_+).
  std::vector<std::pair<Wt, std::vector<int>>> orbit_with_words(const Wt& b_plus) const;
  // Minimal-length u with u(b) = b_- and (alpha,b) != 0 for alpha in its
  // inversion set.
  std::vector<int> u_b_word(const Wt& b) const;

  // --- partial orders ---
  bool in_Qplus(const Wt& diff) const;    // diff in Q_+
  bool le_Q(const Wt& b, const Wt& c) const { Wt d(c); for (int i = 0; i < n_; ++i) d[i] -= b[i]; return in_Qplus(d); }
  bool preceq(const Wt& b, const Wt& c) const;
  bool prec(const Wt& b, const Wt& c) const;

  // --- extended affine Weyl group ---
  ExtAffineElement identity_element() const;
  ExtAffineElement translation_element(const Wt& b) const;
  ExtAffineElement simple_reflection(int i) const;      // 0 <= i <= n
  ExtAffineElement compose(const ExtAffineElement& x, const ExtAffineElement& y) const;
  ExtAffineElement inverse(const ExtAffineElement& x) const;
  bool equal_elements(const ExtAffineElement& x, const ExtAffineElement& y) const;

  // Linear action on affine roots and affine action on lattice points.
  AffineRoot act_affine_root(const ExtAffineElement& x, const AffineRoot& r) const;
  Wt act_affine_point(const ExtAffineElement& x, const Wt& z) const;
  // s_i((z)) for 0 <= i <= n.
  Wt affine_reflect_point(int i, const Wt& z) const;
  bool affine_root_positive(const AffineRoot& r) const;
  // (alpha_i, z + d): the affine pairing used by the intertwiner conditions.
  mpq_class alpha_pairing_affine(int i, const Wt& z) const;

  // Greedy reduced word: x = pi_r s_{i_l} ... s_{i_1}; returns word (i_1..i_l)
  // and the terminal length-zero element pi (as an ExtAffineElement).
  struct ReducedWord {
    std::vector<int> word;            // i_1 first
    ExtAffineElement pi;              // length-zero remainder
    int pi_index = 0;                 // r with pi = pi_r (0 means identity)
  };
  ReducedWord reduced_word(const ExtAffineElement& x) const;
  int length(const ExtAffineElement& x) const;
  std::vector<int> length_nu(const ExtAffineElement& x) const;  // per nu in {1,nu_long}

  std::vector<AffineRoot> lambda_set(const ExtAffineElement& x) const;
  // lambda(b) for a pure translation, from the closed description by pairings.
  std::vector<AffineRoot> lambda_set_translation(const Wt& b) const;

  // Reduction modulo W: b = pi_b u_b.
  struct PiomDecomposition {
    Wt b_minus;
    std::vector<int> u_word;          // u_b as a word
    ExtAffineElement pi_b;            // b * u_b^{-1}
  };
  PiomDecomposition antidominant_decomposition(const Wt& b) const;

  // lambda'(pi_b) = { [alpha, j] : [-alpha, nu_alpha j] in lambda(pi_b) }.
  std::vector<std::pair<const Root*, int>> lambda_prime_pi(const Wt& b) const;

  // pi_r for a minuscule index r, and the affine-diagram permutation it induces.
  ExtAffineElement pi_r(int r) const;
  int pi_r_on_node(int r, int i) const;  // j with pi_r(alpha_i) = alpha_j

  // Spectral vectors: q^{b_sharp} = q^(b - u_b^{-1}(rho_k)).  The t-shift is
  // stored per nu as the rational weight-coordinate vector of -u_b^{-1}(rho_nu^vee).
  struct EvalPoint {
    std::vector<mpq_class> lattice;               // rational lattice part
    std::vector<std::vector<mpq_class>> tshift;   // per nu index: coeff vector
  };
  EvalPoint spectral_vector(const Wt& b) const;
  EvalPoint minus_rho_k() const;   // q^{-rho_k}
  EvalPoint plus_rho_k() const;    // q^{+rho_k}
  // q^{c - rho_k} for c in B.
  EvalPoint lattice_minus_rho_k(const Wt& c) const;
  EvalPoint lattice_point(const Wt& c) const;

  int nu_index(int nu) const { return nu == 1 ? 0 : 1; }
  int nu_count() const { return simply_laced() ? 1 : 2; }

  // Enumerate lattice points b with (b,b) <= bound (exact rational compare).
  std::vector<Wt> lattice_ball(const mpq_class& norm_bound) const;
  // All dominant / antidominant points with max |coordinate| <= box.
  std::vector<Wt> box(int bound) const;
  std::vector<Wt> antidominant_box(int bound) const;

  std::string json_dump() const;
  VarNames var_names() const;

 private:
  Family family_;
  int n_ = 0;
  LatticeChoice lattice_ = LatticeChoice::P;
  std::vector<std::vector<int>> cartan_;   // a_ij = (alpha_i, alpha_j^vee)
  std::vector<int> nu_;
  int nu_long_ = 1;
  int m_tilde_ = 1;
  std::vector<Root> pos_roots_;
  std::map<Wt, int> root_index_;
  std::size_t theta_short_idx_ = 0, theta_long_idx_ = 0;
  std::vector<int> minuscule_;
  std::vector<int> w0_word_;
  std::vector<std::vector<mpq_class>> gram_;      // (omega_i, omega_j)
  std::vector<std::vector<mpq_class>> inv_cartan_t_;  // (A^T)^{-1}

  void enumerate_roots();
  void compute_gram();
  void compute_w0();
  void compute_minuscule();
};

std::string wt_str(const Wt& b);

}  // namespace whitdaha
