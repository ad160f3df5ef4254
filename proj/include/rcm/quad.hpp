#ifndef RCM_QUAD_HPP
#define RCM_QUAD_HPP

#include <complex>
#include <functional>
#include <vector>

#include "rcm/disc.hpp"
#include "rcm/errors.hpp"

namespace rcm {

/// Quadrature resolution knobs shared by all engines.
struct QuadConfig {
  int n_circle = 4096;  // circle nodes, power of two, >= 16
  int l_radial = 14;    // geometric radial panels
  int k_panel = 16;     // Gauss-Legendre nodes per panel
  long n_mc = 200000;   // Monte-Carlo samples on the sphere
  unsigned long long seed = 20240817ULL;

  void validate() const;
  QuadConfig with_circle(int n) const;
  QuadConfig with_radial(int l, int k) const;
};

/// Equal-weight rule (1/N) sum g(j/N); exact for trigonometric
/// polynomials of degree < N/2.
double circle_integral(const std::function<double(double)>& g,
                       const QuadConfig& cfg);
std::complex<double> circle_integral_c(
    const std::function<std::complex<double>(double)>& g,
    const QuadConfig& cfg);

/// int_0^{r_max} g(r) (1-r)^alpha dr over geometric panels
/// [1-2^{-j}, 1-2^{-j-1}] graded toward the endpoint; alpha > -1.
/// The weight is applied by the engine.
double radial_integral(const std::function<double(double)>& g, double alpha,
                       const QuadConfig& cfg, double r_max = 1.0);

struct SupResult {
  double value = 0.0;
  double arg_r = 0.0;
};

/// Certified lower bound of sup_{0<=r<1} g(r): graded-grid scan with
/// golden-section refinement in the winning cell.
SupResult radial_sup(const std::function<double(double)>& g,
                     const QuadConfig& cfg);

/// Product rule over the window S_{I,h} against area measure dA with
/// dA(full disc) = pi.
double window_integral(
    const std::function<double(std::complex<double>)>& g,
    const CarlesonWindow& window, const QuadConfig& cfg);

/// Point of the unit sphere of C^2.
struct SpherePoint {
  std::complex<double> z1;
  std::complex<double> z2;
};

struct McResult {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Mean of g against the probability-normalized surface measure of the
/// unit sphere of C^2, via seeded Gaussian sampling.
McResult sphere3_mc(const std::function<double(const SpherePoint&)>& g,
                    const QuadConfig& cfg);

/// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int k);

}  // namespace rcm

#endif
