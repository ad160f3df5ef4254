#ifndef RCM_CARLESON_HPP
#define RCM_CARLESON_HPP

#include <complex>
#include <string>
#include <vector>

#include "rcm/funcs.hpp"
#include "rcm/measure.hpp"

namespace rcm {

enum class Verdict { consistent, inconsistent, inconclusive };

std::string to_string(Verdict v);

/// The three constants tied together by the one-dimensional reverse
/// embedding theorem, plus the verdict of their mutual consistency.
struct ConditionReport {
  double geometric_constant = 0.0;  // inf over arcs of mu(I)/m(I)
  double kernel_constant = 0.0;     // inf over lambda grid of kernel test
  double direct_constant = 0.0;     // sup over windows of mu(S_I)/m(I)
  double tau_geometric = 0.0;
  double tau_kernel = 0.0;
  Verdict verdict = Verdict::inconclusive;
  int level_max = 0;
  int lambda_depth = 0;
  double p = 0.0;
  int l = 0;
};

/// min over both dyadic families up to level_max of mu(I)/m(I); an
/// upper bound for the true infimum over all arcs.
double geometric_constant(const Measure& mu, int level_max);

/// max over dyadic windows S_I with h = m(I) of mu(S_I)/m(I); a lower
/// bound for the true supremum.
double direct_constant(const Measure& mu, int level_max);

struct KernelScan {
  double constant = 0.0;
  std::complex<double> arg_lambda;  // grid minimizer
};

/// min over the lambda grid (radii 1-2^{-j}, j = 1..depth, times 2^{j+3}
/// equispaced angles) of integral |k_lambda^l|^p dmu / ||k_lambda^l||_p^p.
/// Requires pl > 1.
KernelScan kernel_test_constant(const Measure& mu, double p, int l, int depth,
                                const QuadConfig& cfg);

/// Assembles the three constants and a verdict.  tau_geometric = 0.01;
/// tau_kernel = 0.01 times the Lebesgue kernel constant at the same
/// parameters.  Values within a decade of a threshold on either side
/// make the verdict inconclusive rather than forced.
ConditionReport equivalence_report(const Measure& mu, double p, int l,
                                   int level_max, int depth,
                                   const QuadConfig& cfg);

/// (1/h) int_{S_{I,h}} (1-|lambda|)^{q-1} / |1 - conj(lambda) z|^q dA,
/// with dA(full disc) = pi.  Requires q > 1.
double phi_h(const DiscPoint& z, const Arc& arc, double h, double q,
             const QuadConfig& cfg);

struct BalayageRow {
  int n = 0;
  double value = 0.0;     // integral over interior atoms of |z^n f|^q
  double envelope = 0.0;  // rho^{nq} sup|f|^q mu(interior)
};

/// Interior decay of z^n f in L^q(mu); only interior atoms contribute.
/// sup|f| is taken over boundary samples (maximum principle).
std::vector<BalayageRow> balayage_decay(const Measure& mu,
                                        const HoloFunction& f, double q,
                                        const std::vector<int>& n_list,
                                        const QuadConfig& cfg);

struct BetaTestResult {
  bool decision = false;    // 1/beta integrable in L^{p/(q-p)}
  double integral = 0.0;    // sum over cells, +inf when a cell vanishes
  double holder_constant = 0.0;
  /// Relative drop of the sum under pairwise cell coarsening; a gap
  /// above 1% marks the discretized integral as divergent.
  double refinement_gap = 0.0;
};

/// The q > p boundary-density criterion: 1/beta in L^{p/(q-p)}.
BetaTestResult beta_rcm_test(const BoundaryDensity& beta, double p, double q);

struct CertificateRow {
  double param = 0.0;
  double lhs = 0.0;
  double interior_term = 0.0;
  double boundary_term = 0.0;
  double interior_bound = 0.0;
};

struct Certificate {
  std::string family;
  std::vector<CertificateRow> rows;
};

/// q < p nonexistence: each eps yields the mass lower bound
/// eps^{q/p - 1}, diverging as eps -> 0.  Pure arithmetic.
Certificate q_less_p_certificate(double p, double q,
                                 const std::vector<double>& eps_list);

/// One row of the Bloch nonexistence certificate at parameter n:
/// lhs = (1 - |z_n|) |f_n'(z_n)| at z_n = e^{-1/n} e^{i phi}; interior
/// and boundary integrals of |f_n| against mu; the closed-form interior
/// bound (log n / n) sum w (-1 + (1-|z|^{n+1})/(1-|z|)).
CertificateRow bloch_nonexistence_witness(const Measure& mu, int n, double phi,
                                          const QuadConfig& cfg);

Certificate bloch_certificate(const Measure& mu, const std::vector<int>& n_list,
                              double phi, const QuadConfig& cfg);

struct GrowthPair {
  double numeric = 0.0;
  double closed_form = 0.0;
  double arg_r = 0.0;
};

/// sup_r n r^{n-1} (1-r)^{1-s}: scanned value vs the closed form at
/// r* = (n-1)/(n-s); computed in the log domain for large n.
GrowthPair triebel_s_growth(long n, double s, const QuadConfig& cfg);

/// Closed-form value alone; valid for n far beyond radial grid reach.
double triebel_s_growth_closed_form(long n, double s);

/// Diagnostic reproducing the kernel-to-window mechanism: the integral
/// of Phi_h against mu, to be compared with m(I).  Uses q = p*l.
double kernel_window_smoke(const Measure& mu, double p, int l, const Arc& arc,
                           double h, const QuadConfig& cfg);

}  // namespace rcm

#endif
