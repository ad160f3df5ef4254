// Command-line frontend for the reverse-embedding verification library.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rcm/accept.hpp"
#include "rcm/ball.hpp"
#include "rcm/carleson.hpp"
#include "rcm/spaces.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
  rcm::QuadConfig quad;
  int level_max = 10;
  int depth = 8;
  bool deterministic = false;
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--n-circle", opts.quad.n_circle,
                  "circle nodes (power of two, >= 16)");
  cmd->add_option("--l-radial", opts.quad.l_radial, "radial panels");
  cmd->add_option("--k-panel", opts.quad.k_panel, "Gauss nodes per panel");
  cmd->add_option("--n-mc", opts.quad.n_mc, "Monte-Carlo samples");
  cmd->add_option("--seed", opts.quad.seed, "Monte-Carlo seed");
  cmd->add_option("--level", opts.level_max, "dyadic arc scan depth");
  cmd->add_option("--depth", opts.depth, "lambda grid depth");
  cmd->add_flag("--deterministic", opts.deterministic,
                "serialize reductions for bit-identical reports");
  cmd->add_option("--format", opts.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", opts.output, "write the report to a file");
}

json config_echo(const CommonOpts& opts) {
  return {{"n_circle", opts.quad.n_circle},
          {"l_radial", opts.quad.l_radial},
          {"k_panel", opts.quad.k_panel},
          {"n_mc", opts.quad.n_mc},
          {"seed", opts.quad.seed},
          {"level_max", opts.level_max},
          {"lambda_depth", opts.depth},
          {"deterministic", opts.deterministic}};
}

void emit(const CommonOpts& opts, const json& report,
          const std::string& csv_text) {
  std::string text =
      opts.format == "csv" ? csv_text : report.dump(2) + "\n";
  if (opts.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opts.output);
    if (!out)
      throw rcm::ParameterError("cannot open output file: " + opts.output);
    out << text;
  }
}

// Certificate rows as CSV: parameter, value, bound.
std::string certificate_csv(const rcm::Certificate& cert) {
  std::ostringstream os;
  os << "parameter,value,bound\n";
  for (const auto& row : cert.rows)
    os << row.param << "," << row.lhs << ","
       << std::max(row.interior_term + row.boundary_term, row.interior_bound)
       << "\n";
  return os.str();
}

rcm::Measure load_measure(const std::string& arg) {
  if (std::filesystem::exists(arg)) return rcm::Measure::from_file(arg);
  for (const std::string& name : rcm::corpus::names())
    if (name == arg) return rcm::corpus::by_name(name);
  throw rcm::IngestionError("measure '" + arg +
                            "' is neither a file nor a built-in name");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw rcm::ParameterError("empty list: " + text);
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw rcm::ParameterError("empty list: " + text);
  return out;
}

double parse_exponent(const std::string& text) {
  if (text == "inf" || text == "infinity") return rcm::kInfExponent;
  return std::stod(text);
}

int run(int argc, char** argv) {
  CLI::App app{"reverse embedding verification toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;

  // norm
  auto* norm = app.add_subcommand("norm", "evaluate a space (quasi)norm");
  std::string norm_space = "hardy", norm_fn, norm_q = "2";
  double norm_p = 2.0, norm_s = 0.0;
  int norm_m = 0;
  bool seminorm = false;
  norm->add_option("--space", norm_space, "hardy|bloch|bmoa|triebel|besov")
      ->required();
  norm->add_option("--function", norm_fn, "function DSL")->required();
  norm->add_option("--p", norm_p, "integrability exponent");
  norm->add_option("--q", norm_q, "inner exponent (number or 'inf')");
  norm->add_option("--s", norm_s, "smoothness parameter");
  norm->add_option("--m", norm_m, "derivative order (0 = floor(s)+1)");
  norm->add_flag("--seminorm", seminorm, "omit derivative values at 0");
  add_common(norm, opts);

  // qvar
  auto* qvar = app.add_subcommand("qvar", "partial weighted q-variation");
  std::string qvar_fn;
  double qvar_q = 1.5, qvar_t = 0.0, qvar_rmax = 0.99;
  qvar->add_option("--function", qvar_fn)->required();
  qvar->add_option("--q", qvar_q);
  qvar->add_option("--t", qvar_t, "angle in turns");
  qvar->add_option("--r-max", qvar_rmax);
  add_common(qvar, opts);

  // equiv
  auto* equiv = app.add_subcommand(
      "equiv", "geometric/kernel/direct constants with verdict");
  std::string equiv_mu;
  double equiv_p = 2.0;
  int equiv_l = 1;
  equiv->add_option("--measure", equiv_mu, "file or built-in name")
      ->required();
  equiv->add_option("--p", equiv_p);
  equiv->add_option("--l", equiv_l);
  add_common(equiv, opts);

  // phih
  auto* phih = app.add_subcommand("phih", "window potential at a point");
  double ph_re = 0.0, ph_im = 0.0, ph_start = 0.0, ph_len = 0.25,
         ph_h = 0.125, ph_q = 2.0;
  phih->add_option("--z-re", ph_re);
  phih->add_option("--z-im", ph_im);
  phih->add_option("--arc-start", ph_start);
  phih->add_option("--arc-length", ph_len);
  phih->add_option("--height", ph_h, "window depth h");
  phih->add_option("--q", ph_q);
  add_common(phih, opts);

  // balayage
  auto* bal = app.add_subcommand("balayage", "interior decay under z^n");
  std::string bal_mu, bal_fn = "poly:1", bal_ns = "0,1,2,4,8,16,32";
  double bal_q = 2.0;
  bal->add_option("--measure", bal_mu)->required();
  bal->add_option("--function", bal_fn);
  bal->add_option("--q", bal_q);
  bal->add_option("--n-list", bal_ns);
  add_common(bal, opts);

  // beta-test
  auto* beta = app.add_subcommand("beta-test",
                                  "q > p boundary density criterion");
  std::string beta_mu;
  double beta_p = 1.0, beta_q = 2.0;
  beta->add_option("--measure", beta_mu, "measure providing the density")
      ->required();
  beta->add_option("--p", beta_p);
  beta->add_option("--q", beta_q);
  add_common(beta, opts);

  // qlessp
  auto* qlessp = app.add_subcommand("qlessp",
                                    "q < p mass divergence certificate");
  double ql_p = 2.0, ql_q = 1.0;
  std::string ql_eps = "1e-2,1e-4,1e-6,1e-8";
  qlessp->add_option("--p", ql_p);
  qlessp->add_option("--q", ql_q);
  qlessp->add_option("--eps-list", ql_eps);
  add_common(qlessp, opts);

  // certificate
  auto* cert = app.add_subcommand("certificate", "nonexistence certificates");
  cert->require_subcommand(1);
  auto* cert_bloch = cert->add_subcommand("bloch", "witness vs integrals");
  std::string cb_mu = "lebesgue", cb_ns = "64,256,1024";
  double cb_phi = 0.3;
  cert_bloch->add_option("--measure", cb_mu);
  cert_bloch->add_option("--n-list", cb_ns);
  cert_bloch->add_option("--phi", cb_phi, "phase in radians");
  add_common(cert_bloch, opts);

  auto* cert_ts = cert->add_subcommand("triebel-s", "monomial blow-up");
  std::string ts_ns = "10,100,10000";
  double ts_s = 0.5;
  cert_ts->add_option("--n-list", ts_ns);
  cert_ts->add_option("--s", ts_s);
  add_common(cert_ts, opts);

  auto* cert_tq = cert->add_subcommand(
      "triebel-q", "lacunary variation vs harmonic sums");
  double tq_q = 1.5, tq_t = 0.137;
  int tq_trunc = 14;
  std::string tq_ns = "6,8,10,12,14";
  cert_tq->add_option("--q", tq_q);
  cert_tq->add_option("--t", tq_t, "angle in turns");
  cert_tq->add_option("--trunc", tq_trunc, "series truncation");
  cert_tq->add_option("--n-list", tq_ns, "r_max = 1-2^{-N} sweep");
  add_common(cert_tq, opts);

  auto* cert_bb = cert->add_subcommand("besov-blaschke",
                                       "Blaschke Besov growth");
  std::string bb_ns = "4,8,16";
  double bb_p = 4.0, bb_q = 2.0;
  cert_bb->add_option("--n-list", bb_ns);
  cert_bb->add_option("--p", bb_p);
  cert_bb->add_option("--q", bb_q);
  add_common(cert_bb, opts);

  // verify
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");

  // ball
  auto* ball = app.add_subcommand("ball", "unit ball of C^2");
  ball->require_subcommand(1);
  auto* ball_mass_cmd = ball->add_subcommand("mass", "non-isotropic ball mass");
  std::string bm_mu;
  std::vector<double> bm_center = {1.0, 0.0, 0.0, 0.0};
  double bm_delta = 0.1, bm_depth = 0.1;
  bool bm_window = false;
  ball_mass_cmd->add_option("--measure", bm_mu, "ball measure file")
      ->required();
  ball_mass_cmd->add_option("--center", bm_center,
                            "re1 im1 re2 im2 of the sphere center")
      ->expected(4);
  ball_mass_cmd->add_option("--delta", bm_delta);
  ball_mass_cmd->add_flag("--window", bm_window, "use the window S_Q");
  ball_mass_cmd->add_option("--window-depth", bm_depth);
  add_common(ball_mass_cmd, opts);

  auto* ball_norm_cmd = ball->add_subcommand("kernel-norm",
                                             "L^p norm of a kernel power");
  std::vector<double> bn_w = {0.9, 0.0, 0.0, 0.0};
  int bn_l = 1;
  double bn_p = 2.0;
  ball_norm_cmd->add_option("--w", bn_w, "re1 im1 re2 im2")->expected(4);
  ball_norm_cmd->add_option("--l", bn_l);
  ball_norm_cmd->add_option("--p", bn_p);
  add_common(ball_norm_cmd, opts);

  auto* ball_test_cmd = ball->add_subcommand("kernel-test",
                                             "kernel test constant");
  std::string bt_mu;
  int bt_l = 1;
  double bt_p = 2.0;
  ball_test_cmd->add_option("--measure", bt_mu, "ball measure file")
      ->required();
  ball_test_cmd->add_option("--l", bt_l);
  ball_test_cmd->add_option("--p", bt_p);
  add_common(ball_test_cmd, opts);

  CLI11_PARSE(app, argc, argv);

  json report;
  report["config"] = config_echo(opts);
  std::string csv;

  if (norm->parsed()) {
    rcm::SpaceSpec spec;
    spec.kind = rcm::space_kind_from_string(norm_space);
    spec.p = norm_p;
    spec.q = parse_exponent(norm_q);
    spec.s = norm_s;
    spec.m = norm_m > 0 ? norm_m : static_cast<int>(std::floor(norm_s)) + 1;
    spec.validate();
    rcm::HoloFunction f = rcm::HoloFunction::parse(norm_fn);
    rcm::NormResult res =
        rcm::space_norm(f, spec, opts.quad, opts.level_max, seminorm);
    report["space"] = norm_space;
    report["function"] = f.describe();
    report["value"] = res.value;
    report["lower_bound_certified"] = res.lower_bound_certified;
    if (!res.refinement.empty()) report["refinement"] = res.refinement;
    csv = "value\n" + std::to_string(res.value) + "\n";
  } else if (qvar->parsed()) {
    rcm::HoloFunction f = rcm::HoloFunction::parse(qvar_fn);
    double v = rcm::q_variation(f, qvar_q, qvar_t, qvar_rmax, opts.quad);
    report["function"] = f.describe();
    report["q"] = qvar_q;
    report["t"] = qvar_t;
    report["r_max"] = qvar_rmax;
    report["value"] = v;
    csv = "value\n" + std::to_string(v) + "\n";
  } else if (equiv->parsed()) {
    rcm::Measure mu = load_measure(equiv_mu);
    rcm::ConditionReport rep = rcm::equivalence_report(
        mu, equiv_p, equiv_l, opts.level_max, opts.depth, opts.quad);
    report["measure"] = equiv_mu;
    report["p"] = rep.p;
    report["l"] = rep.l;
    report["geometric_constant"] = rep.geometric_constant;
    report["kernel_constant"] = rep.kernel_constant;
    report["direct_constant"] = rep.direct_constant;
    report["tau_geometric"] = rep.tau_geometric;
    report["tau_kernel"] = rep.tau_kernel;
    report["verdict"] = rcm::to_string(rep.verdict);
    std::ostringstream os;
    os << "constant,value\ngeometric," << rep.geometric_constant << "\nkernel,"
       << rep.kernel_constant << "\ndirect," << rep.direct_constant << "\n";
    csv = os.str();
  } else if (phih->parsed()) {
    double v = rcm::phi_h(rcm::DiscPoint(ph_re, ph_im),
                          rcm::Arc(ph_start, ph_len), ph_h, ph_q, opts.quad);
    report["value"] = v;
    csv = "value\n" + std::to_string(v) + "\n";
  } else if (bal->parsed()) {
    rcm::Measure mu = load_measure(bal_mu);
    rcm::HoloFunction f = rcm::HoloFunction::parse(bal_fn);
    auto rows =
        rcm::balayage_decay(mu, f, bal_q, parse_int_list(bal_ns), opts.quad);
    auto arr = json::array();
    std::ostringstream os;
    os << "parameter,value,bound\n";
    for (const auto& row : rows) {
      arr.push_back(
          {{"n", row.n}, {"value", row.value}, {"envelope", row.envelope}});
      os << row.n << "," << row.value << "," << row.envelope << "\n";
    }
    report["rows"] = arr;
    csv = os.str();
  } else if (beta->parsed()) {
    rcm::Measure mu = load_measure(beta_mu);
    rcm::BetaTestResult res =
        rcm::beta_rcm_test(mu.density(), beta_p, beta_q);
    report["decision"] = res.decision;
    report["integral"] = std::isinf(res.integral)
                             ? json("inf")
                             : json(res.integral);
    report["holder_constant"] = std::isinf(res.holder_constant)
                                    ? json("inf")
                                    : json(res.holder_constant);
    report["refinement_gap"] = res.refinement_gap;
    csv = "decision,integral\n" + std::to_string(res.decision) + "," +
          std::to_string(res.integral) + "\n";
  } else if (qlessp->parsed()) {
    rcm::Certificate cert_res =
        rcm::q_less_p_certificate(ql_p, ql_q, parse_double_list(ql_eps));
    auto arr = json::array();
    for (const auto& row : cert_res.rows)
      arr.push_back({{"eps", row.param}, {"mass_bound", row.lhs}});
    report["family"] = cert_res.family;
    report["rows"] = arr;
    csv = certificate_csv(cert_res);
  } else if (cert_bloch->parsed()) {
    rcm::Measure mu = load_measure(cb_mu);
    rcm::Certificate cert_res = rcm::bloch_certificate(
        mu, parse_int_list(cb_ns), cb_phi, opts.quad);
    auto arr = json::array();
    for (const auto& row : cert_res.rows)
      arr.push_back({{"n", row.param},
                     {"witness", row.lhs},
                     {"interior_term", row.interior_term},
                     {"boundary_term", row.boundary_term},
                     {"interior_bound", row.interior_bound}});
    report["family"] = cert_res.family;
    report["rows"] = arr;
    csv = certificate_csv(cert_res);
  } else if (cert_ts->parsed()) {
    auto arr = json::array();
    std::ostringstream os;
    os << "parameter,value,bound\n";
    for (int n : parse_int_list(ts_ns)) {
      rcm::GrowthPair g = rcm::triebel_s_growth(n, ts_s, opts.quad);
      arr.push_back({{"n", n},
                     {"numeric", g.numeric},
                     {"closed_form", g.closed_form},
                     {"arg_r", g.arg_r}});
      os << n << "," << g.numeric << "," << g.closed_form << "\n";
    }
    report["s"] = ts_s;
    report["rows"] = arr;
    csv = os.str();
  } else if (cert_tq->parsed()) {
    rcm::HoloFunction g = rcm::HoloFunction::lacunary(tq_q, tq_trunc);
    auto arr = json::array();
    std::ostringstream os;
    os << "parameter,value,bound\n";
    double h = 0.0;
    int last = 0;
    for (int n : parse_int_list(tq_ns)) {
      for (int k = last + 1; k <= n; ++k) h += 1.0 / k;
      last = n;
      double r_max = 1.0 - std::ldexp(1.0, -n);
      double v = rcm::q_variation(g, tq_q, tq_t, r_max, opts.quad);
      arr.push_back({{"N", n},
                     {"integral", v},
                     {"harmonic_sum", h},
                     {"ratio", v / h}});
      os << n << "," << v << "," << h << "\n";
    }
    report["q"] = tq_q;
    report["t"] = tq_t;
    report["trunc"] = tq_trunc;
    report["rows"] = arr;
    csv = os.str();
  } else if (cert_bb->parsed()) {
    auto arr = json::array();
    std::ostringstream os;
    os << "parameter,value,bound\n";
    for (int n : parse_int_list(bb_ns)) {
      double v = rcm::besov_norm(rcm::HoloFunction::blaschke(n),
                                 rcm::SpaceSpec::besov(0.0, bb_p, bb_q, 1),
                                 opts.quad)
                     .value;
      arr.push_back({{"n", n}, {"besov_norm", v}});
      os << n << "," << v << ",\n";
    }
    report["p"] = bb_p;
    report["q"] = bb_q;
    report["rows"] = arr;
    csv = os.str();
  } else if (verify->parsed()) {
    auto results = rcm::accept::run_all(std::cout);
    return rcm::accept::all_passed(results) ? 0 : 1;
  } else if (ball_mass_cmd->parsed()) {
    rcm::BallMeasure mu = rcm::BallMeasure::from_file(bm_mu);
    rcm::NonIsotropicBall q(
        rcm::BallPoint{{bm_center[0], bm_center[1]},
                       {bm_center[2], bm_center[3]}},
        bm_delta);
    rcm::BallMass mass =
        rcm::ball_region_mass(mu, q, bm_window, bm_depth, opts.quad);
    rcm::BallMass sigma = rcm::sigma_mass(q, opts.quad);
    report["mass"] = mass.value;
    report["mass_std_error"] = mass.std_error;
    report["sigma_mass"] = sigma.value;
    report["sigma_std_error"] = sigma.std_error;
    csv = "mass,sigma\n" + std::to_string(mass.value) + "," +
          std::to_string(sigma.value) + "\n";
  } else if (ball_norm_cmd->parsed()) {
    rcm::BallNorm norm_res = rcm::ball_kernel_norm(
        rcm::BallPoint{{bn_w[0], bn_w[1]}, {bn_w[2], bn_w[3]}}, bn_l, bn_p,
        opts.quad);
    report["value"] = norm_res.value;
    report["value_pth_power"] = norm_res.value_pth;
    report["std_error"] = norm_res.std_error;
    report["asymptotic_regime"] = norm_res.asymptotic_regime;
    if (!norm_res.asymptotic_regime)
      report["warning"] =
          "pl <= 1: the integral stays bounded and the blow-up asymptotic "
          "does not apply";
    csv = "value\n" + std::to_string(norm_res.value) + "\n";
  } else if (ball_test_cmd->parsed()) {
    rcm::BallMeasure mu = rcm::BallMeasure::from_file(bt_mu);
    rcm::BallScan scan = rcm::ball_kernel_test_constant(
        mu, bt_p, bt_l, rcm::default_w_grid(), opts.quad);
    report["constant"] = scan.constant;
    csv = "constant\n" + std::to_string(scan.constant) + "\n";
  }

  emit(opts, report, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rcm::EvaluationError& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return 2;
  } catch (const rcm::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
