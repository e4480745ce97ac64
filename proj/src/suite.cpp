#include "whitdaha/suite.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>
#include <stdexcept>

namespace whitdaha {

namespace {

using Job = std::pair<std::string, std::function<CheckResult()>>;

std::vector<CheckResult> run_jobs(std::vector<Job> jobs, int parallel) {
  std::vector<CheckResult> out(jobs.size());
  auto run_one = [&](std::size_t i) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = jobs[i].second();
    } catch (const std::exception& e) {
      r = CheckResult::fail(jobs[i].first, "", std::string("exception: ") + e.what());
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    out[i] = std::move(r);
  };
  if (parallel <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
  } else {
    std::vector<std::future<void>> fs;
    std::size_t next = 0;
    while (next < jobs.size()) {
      while (fs.size() < static_cast<std::size_t>(parallel) && next < jobs.size()) {
        std::size_t i = next++;
        fs.push_back(std::async(std::launch::async, run_one, i));
      }
      for (auto& f : fs) f.wait();
      fs.clear();
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return out;
}

CheckResult bool_check(const std::string& id, const std::string& anchor, bool ok,
                       const std::string& fail_detail = "mismatch") {
  return ok ? CheckResult::pass(id, anchor) : CheckResult::fail(id, anchor, fail_detail);
}

void add_relation_jobs(std::vector<Job>& jobs, const RootDatum& d, int degree) {
  jobs.emplace_back("relations_" + d.type_string(), [&d, degree] {
    auto reps = verify_daha_relations(d, degree);
    for (auto& r : reps)
      if (!r.pass)
        return CheckResult::fail("relations_" + d.type_string(), "double",
                                 r.relation_id + " witness " + r.witness);
    return CheckResult::pass("relations_" + d.type_string(), "double");
  });
}

void add_macdonald_jobs(std::vector<Job>& jobs, const RootDatum& d, MacCalc& M, int box,
                        int cutoff) {
  jobs.emplace_back("macdonald_eval_duality_" + d.type_string(), [&d, &M, box] {
    std::string id = "macdonald_eval_duality_" + d.type_string();
    for (auto& b : d.box(box)) {
      if (!M.check_evaluation_E(b))
        return CheckResult::fail(id, "ebebs", "evaluation fails at " + wt_str(b));
      if (!M.check_y_eigen(b))
        return CheckResult::fail(id, "Yone", "eigen-equation fails at " + wt_str(b));
    }
    int dbox = std::min(box, 1);
    for (auto& b : d.box(dbox))
      for (auto& c : d.box(dbox))
        if (!M.check_duality_E(b, c))
          return CheckResult::fail(id, "ebdual", "duality fails at " + wt_str(b) + wt_str(c));
    for (auto& b : d.antidominant_box(box)) {
      if (!M.check_evaluation_P(b))
        return CheckResult::fail(id, "pebebs", "P evaluation fails at " + wt_str(b));
      for (auto& c : d.antidominant_box(std::min(box, 1)))
        if (!M.check_duality_P(b, c))
          return CheckResult::fail(id, "pebdual", "P duality fails at " + wt_str(b) + wt_str(c));
    }
    return CheckResult::pass(id, "ebebs");
  });
  jobs.emplace_back("macdonald_norms_" + d.type_string(), [&d, &M, box, cutoff] {
    std::string id = "macdonald_norms_" + d.type_string();
    for (auto& b : d.antidominant_box(box))
      if (!M.check_norm_spherical(b))
        return CheckResult::fail(id, "normpipols", "spherical norm fails at " + wt_str(b));
    int nbox = std::min(box, 1);
    for (auto& b : d.antidominant_box(nbox))
      for (auto& c : d.antidominant_box(nbox)) {
        if (!M.check_norm_series(b, c, cutoff, false))
          return CheckResult::fail(id, "normppols", "norm fails at " + wt_str(b) + wt_str(c));
        if (!M.check_norm_series(b, c, cutoff, true))
          return CheckResult::fail(id, "normppolsbar", "bar norm fails at " + wt_str(b) + wt_str(c));
      }
    return CheckResult::pass(id, "normppols");
  });
  jobs.emplace_back("macdonald_bar_" + d.type_string(), [&d, &M, box] {
    std::string id = "macdonald_bar_" + d.type_string();
    for (auto& b : d.box(std::min(box, 2))) {
      if (!M.check_bar_positive(b))
        return CheckResult::fail(id, "barpform", "positivity fails at " + wt_str(b));
    }
    for (auto& b : d.antidominant_box(std::min(box, 2))) {
      if (!M.check_bar_routes(b))
        return CheckResult::fail(id, "BAREP", "route mismatch at " + wt_str(b));
      if (!M.check_p_inversion(b))
        return CheckResult::fail(id, "eplimbar", "inversion fails at " + wt_str(b));
      if (!M.check_classical_character(b))
        return CheckResult::fail(id, "shintqg", "character limit fails at " + wt_str(b));
    }
    return CheckResult::pass(id, "barpform");
  });
  jobs.emplace_back("macdonald_oracle_" + d.type_string(), [&d, &M, box, cutoff] {
    std::string id = "macdonald_oracle_" + d.type_string();
    int gbox = std::min(box, 2);
    for (auto& b : d.box(gbox)) {
      GramSchmidtResult gs = gram_schmidt_E(d, b, cutoff, false);
      if (gs.certified_order <= 0)
        return CheckResult::fail(id, "macd", "no certified order at " + wt_str(b));
      LatticePolynomial e = M.E(b);
      for (auto& [c, kappa] : gs.coefficients) {
        RatCoeff exact = e.coeff(LatticePolynomial::Exp(c.begin(), c.end()));
        TruncatedQSeries expanded = TruncatedQSeries::from_ratcoeff(exact, 0, kappa.cutoff());
        if (!expanded.equal_to_order(kappa, kappa.cutoff()))
          return CheckResult::fail(id, "macd",
                                   "routes differ at b=" + wt_str(b) + " c=" + wt_str(c));
      }
    }
    return CheckResult::pass(id, "macd");
  });
}

void add_gauss_jobs(std::vector<Job>& jobs, const RootDatum& d, MacCalc& M, int box, int cutoff) {
  jobs.emplace_back("mehta_" + d.type_string(), [&M, cutoff] {
    return mehta_macdonald_check(M, cutoff, false);
  });
  jobs.emplace_back("mehta_bar_" + d.type_string(), [&M, cutoff] {
    return mehta_macdonald_check(M, cutoff, true);
  });
  jobs.emplace_back("constant_term_" + d.type_string(), [&M, cutoff] {
    return constant_term_check(M, cutoff, false);
  });
  int gbox = std::min(box, 1);
  for (auto& b : d.antidominant_box(gbox))
    for (auto& c : d.antidominant_box(gbox)) {
      jobs.emplace_back("gauss_" + d.type_string() + wt_str(b) + wt_str(c), [&M, b, c, cutoff] {
        return gauss_integral_check(M, b, c, cutoff, false);
      });
      jobs.emplace_back("gauss_bar_" + d.type_string() + wt_str(b) + wt_str(c),
                        [&M, b, c, cutoff] { return gauss_integral_check(M, b, c, cutoff, true); });
    }
}

void add_shintani_jobs(std::vector<Job>& jobs, const RootDatum& d, MacCalc& M, int box,
                       int cutoff) {
  for (auto& c : d.antidominant_box(std::min(box, 1))) {
    jobs.emplace_back("shintani_" + d.type_string() + wt_str(c),
                      [&M, c, cutoff] { return shintani_check(M, c, cutoff); });
    jobs.emplace_back("spherical_shintani_" + d.type_string() + wt_str(c), [&M, c, cutoff] {
      return spherical_shintani_check(M, c, std::max(8, cutoff / 2), false);
    });
  }
  jobs.emplace_back("whittaker_limit_" + d.type_string(),
                    [&M, cutoff] { return whittaker_limit_check(M, cutoff); });
  jobs.emplace_back("psi_symmetry_" + d.type_string(),
                    [&M, cutoff] { return psi_qt_symmetry_check(M, cutoff); });
}

void add_toda_jobs(std::vector<Job>& jobs, const RootDatum& d, MacCalc& M, int cutoff) {
  if (d.rank() == 1) {
    jobs.emplace_back("toda_rank1_x", [&M, cutoff] {
      return toda_eigencheck(M, TodaKind::Rank1X, {1}, cutoff);
    });
    jobs.emplace_back("toda_rank1_lambda", [&M, cutoff] {
      return toda_eigencheck(M, TodaKind::Rank1Lambda, {1}, cutoff);
    });
  }
  Wt aplus(static_cast<std::size_t>(d.rank()), 0);
  if (!d.minuscule_indices().empty())
    aplus[static_cast<std::size_t>(d.minuscule_indices()[0] - 1)] = 1;
  else
    aplus[0] = 1;
  jobs.emplace_back("toda_minuscule_x_" + d.type_string(), [&M, aplus, cutoff] {
    return toda_eigencheck(M, TodaKind::MinusculeX, aplus, cutoff);
  });
  jobs.emplace_back("toda_lambda_" + d.type_string(), [&M, aplus, cutoff] {
    return toda_eigencheck(M, TodaKind::LambdaGeneral, aplus, cutoff);
  });
}

void add_jackson_jobs(std::vector<Job>& jobs, const RootDatum& d, MacCalc& M, int cutoff) {
  jobs.emplace_back("jackson_whittaker_" + d.type_string(),
                    [&M, cutoff] { return jackson_whittaker_check(M, cutoff); });
  jobs.emplace_back("q_exponential_limit_" + d.type_string(),
                    [&M, cutoff] { return q_exponential_limit_check(M, cutoff); });
  jobs.emplace_back("star_correspondence_" + d.type_string(),
                    [&M] { return star_correspondence_check(M, 4); });
}

void add_asympt_jobs(std::vector<Job>& jobs, const RootDatum& d, const RunConfig& cfg) {
  NumericPoint pt;
  pt.q = cfg.q;
  pt.k_short = pt.k_long = cfg.k;
  pt.x.assign(cfg.x.begin(), cfg.x.end());
  pt.x.resize(static_cast<std::size_t>(d.rank()), cplx(0.8, 0));
  pt.lambda.assign(cfg.lambda.begin(), cfg.lambda.end());
  pt.lambda.resize(static_cast<std::size_t>(d.rank()), cplx(0.9, 0));
  int n_max = cfg.n_max;
  jobs.emplace_back("sigma_limit_" + d.type_string(), [&d, pt, n_max] {
    return sigma_limit_check(d, pt, n_max, 1e-6).result;
  });
  if (d.rank() == 1) {
    jobs.emplace_back("harish_spherical_A1", [&d, pt, n_max] {
      return harish_chandra_limit_check(d, pt, HarishKind::Spherical, n_max, 1e-6).result;
    });
    jobs.emplace_back("harish_whittaker_A1", [&d, pt, n_max] {
      return harish_chandra_limit_check(d, pt, HarishKind::Whittaker, n_max, 1e-6).result;
    });
    jobs.emplace_back("harish_whittaker_lambda_A1", [&d, pt, n_max] {
      return harish_chandra_limit_check(d, pt, HarishKind::WhittakerLambda, n_max, 1e-8).result;
    });
  }
  double u = 0.7;
  jobs.emplace_back("theta_functional_equation_" + d.type_string(), [&d, u] {
    std::vector<cplx> x(static_cast<std::size_t>(d.rank()), cplx(0.2, 0.05));
    return theta_functional_equation_check(d, u, x, 1e-10);
  });
}

}  // namespace

std::vector<CheckResult> run_task(const RunConfig& cfg) {
  RootDatum d = RootDatum::build(family_from_char(cfg.family), cfg.rank,
                                 cfg.lattice == 'Q' ? LatticeChoice::Q : LatticeChoice::P);
  MacCalc M(d);
  std::vector<Job> jobs;
  const std::string& t = cfg.task;
  bool all = t == "verify_all";
  if (all || t == "verify_relations") add_relation_jobs(jobs, d, cfg.sweep_box);
  if (all || t == "verify_macdonald") add_macdonald_jobs(jobs, d, M, cfg.sweep_box, cfg.cutoff);
  if (all || t == "verify_gauss") add_gauss_jobs(jobs, d, M, cfg.sweep_box, cfg.cutoff);
  if (all || t == "verify_shintani") add_shintani_jobs(jobs, d, M, cfg.sweep_box, cfg.cutoff);
  if (all || t == "verify_toda") add_toda_jobs(jobs, d, M, cfg.cutoff);
  if (all || t == "verify_jackson") add_jackson_jobs(jobs, d, M, cfg.cutoff);
  if (all || t == "verify_asymptotics") add_asympt_jobs(jobs, d, cfg);
  if (jobs.empty() && !all)
    throw std::invalid_argument("unknown task: " + t);
  return run_jobs(std::move(jobs), cfg.parallel);
}

std::string emit_polynomial(const RunConfig& cfg, const std::string& kind, const Wt& weight) {
  RootDatum d = RootDatum::build(family_from_char(cfg.family), cfg.rank,
                                 cfg.lattice == 'Q' ? LatticeChoice::Q : LatticeChoice::P);
  for (int v : weight)
    if (std::abs(v) > cfg.sweep_box)
      throw std::invalid_argument("weight outside the sweep box");
  MacCalc M(d);
  LatticePolynomial p;
  if (kind == "E")
    p = M.E(weight);
  else if (kind == "P")
    p = M.P(d.antidominant_rep(weight));
  else if (kind == "barE")
    p = M.Ebar(weight);
  else if (kind == "barP")
    p = M.Pbar(d.antidominant_rep(weight));
  else
    throw std::invalid_argument("unknown polynomial kind: " + kind);
  return canonical_str(d, p);
}

std::string results_to_text(const std::vector<CheckResult>& rs) {
  std::ostringstream os;
  for (auto& r : rs) {
    os << (r.status == "pass" ? "[PASS]" : r.status == "skipped" ? "[SKIP]" : "[FAIL]") << " "
       << r.id;
    if (!r.anchor.empty()) os << " (" << r.anchor << ")";
    if (!r.detail.empty()) os << " -- " << r.detail;
    os << "\n";
  }
  return os.str();
}

std::string config_echo(const RunConfig& cfg) {
  std::ostringstream os;
  os << cfg.family << cfg.rank << "/" << cfg.lattice << " task=" << cfg.task
     << " box=" << cfg.sweep_box << " cutoff=" << cfg.cutoff << " q=" << cfg.q << " k=" << cfg.k
     << " n_max=" << cfg.n_max;
  return os.str();
}

}  // namespace whitdaha
