#include "rcm/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rcm {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kInf = std::numeric_limits<double>::infinity();

cplx unit(double t) { return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)}; }

void require_pl(double p, int l) {
  if (!(p > 0) || l < 1 || !(p * l > 1.0))
    throw ParameterError("the kernel test requires pl > 1");
}
}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent:
      return "consistent";
    case Verdict::inconsistent:
      return "inconsistent";
    default:
      return "inconclusive";
  }
}

double geometric_constant(const Measure& mu, int level_max) {
  double best = kInf;
  for (const Arc& arc : dyadic_arc_family(level_max))
    best = std::min(best, mu.arc_mass(arc) / arc.length);
  return best;
}

double direct_constant(const Measure& mu, int level_max) {
  double best = 0.0;
  for (const Arc& arc : dyadic_arc_family(level_max)) {
    CarlesonWindow w(arc, arc.length);
    best = std::max(best, mu.window_mass(w) / arc.length);
  }
  return best;
}

KernelScan kernel_test_constant(const Measure& mu, double p, int l, int depth,
                                const QuadConfig& cfg) {
  require_pl(p, l);
  if (depth < 1 || depth > 20)
    throw ParameterError("kernel_test_constant: depth must be in [1, 20]");
  cfg.validate();
  const double e = p * l;

  // Profile grid: fine enough for the quadrature resolution and a
  // multiple of every angle count 2^{j+3}, j <= depth.
  int m_nodes = std::max(cfg.n_circle, 1 << (depth + 3));

  const BoundaryDensity& dens = mu.density();
  std::vector<double> beta;
  if (!dens.empty()) {
    beta.resize(static_cast<std::size_t>(m_nodes));
    for (int k = 0; k < m_nodes; ++k)
      beta[static_cast<std::size_t>(k)] = dens.value_at((k + 0.5) / m_nodes);
  }

  KernelScan scan;
  scan.constant = kInf;
  std::vector<double> prof(static_cast<std::size_t>(m_nodes));
  for (int j = 1; j <= depth; ++j) {
    const double rho = 1.0 - std::ldexp(1.0, -j);
    // prof[d] = |1 - rho e^{2 pi i (d+0.5)/M}|^{-pl}; the offset 0.5
    // matches the density midpoints so shifts below stay integral.
    for (int d = 0; d < m_nodes; ++d) {
      double c = std::cos(kTwoPi * (d + 0.5) / m_nodes);
      prof[static_cast<std::size_t>(d)] =
          std::pow(1.0 + rho * rho - 2.0 * rho * c, -0.5 * e);
    }
    double denom = 0.0;
    for (double v : prof) denom += v;
    denom /= m_nodes;

    const int n_ang = 1 << (j + 3);
    const int stride = m_nodes / n_ang;
    for (int i = 0; i < n_ang; ++i) {
      double t_l = static_cast<double>(i) / n_ang;
      double num = 0.0;
      if (!beta.empty()) {
        const int shift = i * stride;
        double acc = 0.0;
        for (int k = 0; k < m_nodes; ++k) {
          int d = k - shift;
          if (d < 0) d += m_nodes;
          acc += beta[static_cast<std::size_t>(k)] *
                 prof[static_cast<std::size_t>(d)];
        }
        num += acc / m_nodes;
      }
      for (const auto& a : mu.boundary_atoms()) {
        double c = std::cos(kTwoPi * (a.t - t_l));
        num += a.w * std::pow(1.0 + rho * rho - 2.0 * rho * c, -0.5 * e);
      }
      if (!mu.interior_atoms().empty()) {
        cplx lam_bar = std::conj(rho * unit(t_l));
        for (const auto& a : mu.interior_atoms())
          num += a.w * std::pow(std::abs(1.0 - lam_bar * a.z.value()), -e);
      }
      double ratio = num / denom;
      if (ratio < scan.constant) {
        scan.constant = ratio;
        scan.arg_lambda = rho * unit(t_l);
      }
    }
  }
  return scan;
}

ConditionReport equivalence_report(const Measure& mu, double p, int l,
                                   int level_max, int depth,
                                   const QuadConfig& cfg) {
  require_pl(p, l);
  ConditionReport rep;
  rep.p = p;
  rep.l = l;
  rep.level_max = level_max;
  rep.lambda_depth = depth;
  rep.geometric_constant = geometric_constant(mu, level_max);
  rep.direct_constant = direct_constant(mu, level_max);
  rep.kernel_constant = kernel_test_constant(mu, p, l, depth, cfg).constant;
  rep.tau_geometric = 0.01;
  rep.tau_kernel =
      0.01 *
      kernel_test_constant(corpus::lebesgue(), p, l, depth, cfg).constant;

  auto in_grey = [](double v, double tau) {
    return v >= tau / 10.0 && v <= tau * 10.0;
  };
  if (in_grey(rep.geometric_constant, rep.tau_geometric) ||
      in_grey(rep.kernel_constant, rep.tau_kernel)) {
    rep.verdict = Verdict::inconclusive;
  } else {
    bool geo = rep.geometric_constant > rep.tau_geometric;
    bool ker = rep.kernel_constant > rep.tau_kernel;
    rep.verdict = geo == ker ? Verdict::consistent : Verdict::inconsistent;
  }
  return rep;
}

double phi_h(const DiscPoint& z, const Arc& arc, double h, double q,
             const QuadConfig& cfg) {
  if (!(q > 1.0)) throw ParameterError("phi_h: q must be > 1");
  if (!(h > 0.0 && h <= 1.0)) throw ParameterError("phi_h: h must be in (0,1]");
  const cplx zv = z.value();
  CarlesonWindow window(arc, h);
  double integral = window_integral(
      [&](cplx lam) {
        return std::pow(1.0 - std::abs(lam), q - 1.0) /
               std::pow(std::abs(1.0 - std::conj(lam) * zv), q);
      },
      window, cfg);
  return integral / h;
}

std::vector<BalayageRow> balayage_decay(const Measure& mu,
                                        const HoloFunction& f, double q,
                                        const std::vector<int>& n_list,
                                        const QuadConfig& cfg) {
  if (!(q > 0)) throw ParameterError("balayage_decay: q must be positive");
  double rho = 0.0, mass_int = 0.0;
  for (const auto& a : mu.interior_atoms()) {
    rho = std::max(rho, a.z.radius());
    mass_int += a.w;
  }
  double sup_f = 0.0;
  for (const cplx& v : f.boundary_samples(cfg.n_circle))
    sup_f = std::max(sup_f, std::abs(v));

  std::vector<BalayageRow> rows;
  for (int n : n_list) {
    if (n < 0) throw ParameterError("balayage_decay: n must be >= 0");
    BalayageRow row;
    row.n = n;
    for (const auto& a : mu.interior_atoms()) {
      double r = a.z.radius();
      row.value += a.w * std::pow(r, n * q) *
                   std::pow(std::abs(f(a.z.value())), q);
    }
    row.envelope = std::pow(rho, n * q) * std::pow(sup_f, q) * mass_int;
    rows.push_back(row);
  }
  return rows;
}

BetaTestResult beta_rcm_test(const BoundaryDensity& beta, double p, double q) {
  if (!(p > 0) || !(q > p))
    throw ParameterError(
        "beta_rcm_test requires 0 < p < q; for q <= p use the arithmetic "
        "nonexistence certificate instead");
  if (beta.empty()) throw ParameterError("beta_rcm_test: empty density");
  const double e = p / (q - p);
  const int n = beta.n_grid;

  BetaTestResult res;
  double sum = 0.0;
  for (double v : beta.values) {
    if (v <= 0.0) {
      res.integral = kInf;
      res.holder_constant = kInf;
      res.decision = false;
      return res;
    }
    sum += std::pow(v, -e);
  }
  sum /= n;
  res.integral = sum;
  res.holder_constant = std::pow(sum, (q - p) / q);

  // The cell sum is finite on any finite grid even when the limiting
  // integral diverges; pairwise coarsening exposes the divergence as a
  // persistent drop of the sum.
  if (n % 2 == 0 && n >= 4) {
    double coarse = 0.0;
    for (int i = 0; i < n / 2; ++i)
      coarse += std::pow(0.5 * (beta.values[2 * i] + beta.values[2 * i + 1]),
                         -e);
    coarse /= n / 2;
    res.refinement_gap = (sum - coarse) / sum;
  }
  res.decision = res.refinement_gap <= 0.01;
  return res;
}

Certificate q_less_p_certificate(double p, double q,
                                 const std::vector<double>& eps_list) {
  if (!(q > 0) || !(q < p))
    throw ParameterError("q_less_p_certificate requires 0 < q < p");
  Certificate cert;
  cert.family = "mass lower bound eps^(q/p-1)";
  for (double eps : eps_list) {
    if (!(eps > 0 && eps <= 1))
      throw ParameterError("q_less_p_certificate: eps must be in (0, 1]");
    CertificateRow row;
    row.param = eps;
    row.lhs = std::pow(eps, q / p - 1.0);
    cert.rows.push_back(row);
  }
  return cert;
}

CertificateRow bloch_nonexistence_witness(const Measure& mu, int n, double phi,
                                          const QuadConfig& cfg) {
  if (n < 4) throw ParameterError("bloch_nonexistence_witness: n must be >= 4");
  HoloFunction f = HoloFunction::fejer(n, phi);
  double r_n = std::exp(-1.0 / n);
  cplx z_n = r_n * cplx(std::cos(phi), std::sin(phi));

  CertificateRow row;
  row.param = n;
  row.lhs = (1.0 - r_n) * std::abs(f.derivative(1, z_n));
  for (const auto& a : mu.interior_atoms()) {
    row.interior_term += a.w * std::abs(f(a.z.value()));
    double r = a.z.radius();
    double geo = r < 1e-300 ? 1.0
                            : (1.0 - std::pow(r, n + 1)) / (1.0 - r);
    row.interior_bound += a.w * (geo - 1.0);
  }
  row.interior_bound *= std::log(static_cast<double>(n)) / n;
  row.boundary_term = mu.restricted_to_boundary().integrate(
      [&](cplx z) { return std::abs(f(z)); }, cfg);
  return row;
}

Certificate bloch_certificate(const Measure& mu, const std::vector<int>& n_list,
                              double phi, const QuadConfig& cfg) {
  Certificate cert;
  cert.family = "bloch witness vs measure integrals";
  for (int n : n_list)
    cert.rows.push_back(bloch_nonexistence_witness(mu, n, phi, cfg));
  return cert;
}

double triebel_s_growth_closed_form(long n, double s) {
  if (n < 1) throw ParameterError("triebel_s_growth: n must be >= 1");
  if (!(s >= 0.0 && s < 1.0))
    throw ParameterError("triebel_s_growth: s must be in [0, 1)");
  if (n == 1) return 1.0;  // (1-r)^{1-s} peaks at r = 0
  double nn = static_cast<double>(n);
  // log of n r*^{n-1} (1-r*)^{1-s} at r* = (n-1)/(n-s).
  double log_v = std::log(nn) + (nn - 1.0) * std::log((nn - 1.0) / (nn - s)) +
                 (1.0 - s) * std::log((1.0 - s) / (nn - s));
  return std::exp(log_v);
}

GrowthPair triebel_s_growth(long n, double s, const QuadConfig& cfg) {
  GrowthPair pair;
  pair.closed_form = triebel_s_growth_closed_form(n, s);
  double nn = static_cast<double>(n);
  SupResult sup = radial_sup(
      [nn, s](double r) {
        if (r <= 0.0) return nn > 1.0 ? 0.0 : std::pow(1.0 - r, 1.0 - s);
        return std::exp(std::log(nn) + (nn - 1.0) * std::log(r) +
                        (1.0 - s) * std::log(1.0 - r));
      },
      cfg);
  pair.numeric = sup.value;
  pair.arg_r = sup.arg_r;
  return pair;
}

double kernel_window_smoke(const Measure& mu, double p, int l, const Arc& arc,
                           double h, const QuadConfig& cfg) {
  require_pl(p, l);
  const double q = p * l;
  return mu.integrate(
      [&](cplx z) { return phi_h(DiscPoint(z), arc, h, q, cfg); }, cfg);
}

}  // namespace rcm
