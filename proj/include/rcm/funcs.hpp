#ifndef RCM_FUNCS_HPP
#define RCM_FUNCS_HPP

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "rcm/errors.hpp"

namespace rcm {

using cplx = std::complex<double>;

/// Evaluable analytic function on the closed disc with closed-form
/// derivatives.  All variants are polynomials or kernel powers with
/// the pole outside the closed disc, so boundary evaluation is safe.
class HoloFunction {
 public:
  static HoloFunction taylor(std::vector<cplx> coeffs);
  /// (1 - conj(lambda) z)^{-l}, |lambda| < 1, l >= 1.
  static HoloFunction kernel_power(cplx lambda, int l);
  /// f_n(z) = sum_{j=1}^{n} z^j e^{i(n-j+1)phi} / (n-j+1).
  static HoloFunction fejer(int n, double phi);
  /// Truncated lacunary series sum_{n=1}^{N} z^{2^n} / n^{1/q}.
  static HoloFunction lacunary(double q, int n_trunc);
  /// B_n(z) = prod_{k=1}^{n} (z^{2^k} - a)/(1 - a z^{2^k}), a = 1-1/n.
  static HoloFunction blaschke(int n);
  static HoloFunction monomial(int n);

  /// DSL: "poly:c0,c1,..."; "kernel:lambda=a+bi,l=L"; "fejer:n=N,phi=P";
  /// "lacunary:q=Q,N=K"; "blaschke:n=N"; "monomial:n=N".
  static HoloFunction parse(const std::string& dsl);

  cplx operator()(cplx z) const { return derivative(0, z); }
  cplx derivative(int m, cplx z) const;
  /// Highest supported derivative order (INT_MAX when unbounded).
  int max_derivative_order() const;

  /// Values f(e^{2 pi i j/N}), j = 0..N-1.
  std::vector<cplx> boundary_samples(int n) const;

  /// c * f; supported for every variant (wraps in a scaled view).
  HoloFunction scaled_by(cplx c) const;

  std::string describe() const;

 private:
  struct Poly {
    std::vector<cplx> coeffs;
  };
  struct Kernel {
    cplx lambda;
    int l;
  };
  struct Fejer {
    int n;
    double phi;
    std::vector<cplx> coeffs;
  };
  struct Lacunary {
    double q;
    int n_trunc;
  };
  struct Blaschke {
    int n;
    double a;
  };
  struct Monomial {
    int n;
  };
  using Rep = std::variant<Poly, Kernel, Fejer, Lacunary, Blaschke, Monomial>;

  explicit HoloFunction(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
  cplx scale_ = 1.0;
};

}  // namespace rcm

#endif
