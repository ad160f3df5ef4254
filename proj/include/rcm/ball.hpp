#ifndef RCM_BALL_HPP
#define RCM_BALL_HPP

#include <complex>
#include <string>
#include <vector>

#include "rcm/quad.hpp"

#include <json.hpp>

namespace rcm {

/// Point of the closed unit ball of C^2.
struct BallPoint {
  std::complex<double> z1;
  std::complex<double> z2;

  double norm() const;
  bool on_sphere(double tol = 1e-9) const;
};

/// Hermitian inner product <z, w> = z1 conj(w1) + z2 conj(w2).
std::complex<double> ball_inner(const BallPoint& z, const BallPoint& w);

/// Non-isotropic metric |1 - <zeta, xi>|^{1/2} on the sphere.
double ns_metric(const BallPoint& zeta, const BallPoint& xi);

/// Q(zeta, delta) = {xi on the sphere: |1 - <zeta, xi>| <= delta}.
struct NonIsotropicBall {
  BallPoint center;
  double delta = 0.0;

  NonIsotropicBall(BallPoint center_, double delta_);
  bool contains_sphere_point(const BallPoint& xi) const;
};

/// Finite positive measure on the closed ball: interior atoms, sphere
/// atoms, and a multiple of the normalized surface measure sigma.
class BallMeasure {
 public:
  struct Atom {
    BallPoint z;
    double w = 0.0;
  };

  BallMeasure() = default;
  BallMeasure(std::vector<Atom> interior, std::vector<Atom> sphere,
              double uniform_sphere_mass);

  static BallMeasure from_json(const nlohmann::json& doc);
  static BallMeasure from_file(const std::string& path);
  nlohmann::json to_json() const;

  double total_mass() const;
  const std::vector<Atom>& interior_atoms() const { return interior_; }
  const std::vector<Atom>& sphere_atoms() const { return sphere_; }
  double uniform_sphere_mass() const { return uniform_; }

 private:
  std::vector<Atom> interior_;
  std::vector<Atom> sphere_;
  double uniform_ = 0.0;
};

struct BallMass {
  double value = 0.0;
  double std_error = 0.0;  // Monte-Carlo error of the uniform part
};

/// mu(Q) or, with with_window, mu(S_Q) where S_Q adds interior points
/// with 1-depth <= |z| <= 1 projecting into Q.
BallMass ball_region_mass(const BallMeasure& mu, const NonIsotropicBall& q,
                          bool with_window, double depth,
                          const QuadConfig& cfg);

/// sigma(Q) by the same Monte-Carlo estimator (sigma normalized to 1).
BallMass sigma_mass(const NonIsotropicBall& q, const QuadConfig& cfg);

struct BallNorm {
  double value = 0.0;        // estimate of ||k_w^l||_p
  double value_pth = 0.0;    // estimate of ||k_w^l||_p^p
  double std_error = 0.0;    // MC error of value_pth
  bool asymptotic_regime = true;  // pl > 1, the blow-up regime
};

/// L^p(sigma) norm of the kernel power (1 - <z, w>)^{-2l} at d = 2.
/// w = 0 returns exactly 1.
BallNorm ball_kernel_norm(const BallPoint& w, int l, double p,
                          const QuadConfig& cfg);

struct BallScan {
  double constant = 0.0;
  BallPoint arg_w;
};

/// min over the w grid of integral |k_w^l|^p dmu / ||k_w^l||_p^p.  The
/// numerator's uniform part and the denominator reuse one seeded MC
/// stream, so for mu = c sigma the ratio is exactly c.
BallScan ball_kernel_test_constant(const BallMeasure& mu, double p, int l,
                                   const std::vector<BallPoint>& w_grid,
                                   const QuadConfig& cfg);

/// Radii {0.5, 0.9} times four sphere directions.
std::vector<BallPoint> default_w_grid();

}  // namespace rcm

#endif
