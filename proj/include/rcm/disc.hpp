#ifndef RCM_DISC_HPP
#define RCM_DISC_HPP

#include <complex>
#include <vector>

#include "rcm/errors.hpp"

namespace rcm {

/// Tolerance for closed-disc membership; boundary atoms may arrive in
/// floating point slightly outside |z| = 1.
inline constexpr double kDiscTol = 1e-12;

/// Point of the closed unit disc.
struct DiscPoint {
  double re = 0.0;
  double im = 0.0;

  DiscPoint() = default;
  DiscPoint(double re_, double im_);
  explicit DiscPoint(std::complex<double> z) : DiscPoint(z.real(), z.imag()) {}

  std::complex<double> value() const { return {re, im}; }
  double radius() const { return std::abs(value()); }
  /// Angle in turns, reduced to [0, 1). Undefined direction at the
  /// origin is reported as 0.
  double angle_turns() const;

  /// Point at radius r and angle t turns.
  static DiscPoint polar(double r, double t);
};

/// Reduce an angle in turns to [0, 1).
double wrap_turn(double t);

/// Boundary arc {e^{2 pi i t} : t in [start, start+length) mod 1}.
/// The circle carries total Lebesgue measure 1, so m(Arc) = length.
struct Arc {
  double start = 0.0;   // in [0, 1)
  double length = 1.0;  // in (0, 1]

  Arc() = default;
  Arc(double start_, double length_);

  bool contains(double t) const;
  static Arc full() { return Arc(0.0, 1.0); }
};

/// Carleson window S_{I,h} = {z: 1-h <= |z| <= 1, z/|z| in I}.
struct CarlesonWindow {
  Arc arc;
  double depth = 1.0;  // h in (0, 1]

  CarlesonWindow() = default;
  CarlesonWindow(Arc arc_, double depth_);

  bool contains(const DiscPoint& z) const;
};

/// Two interleaved dyadic families: the standard arcs
/// [k 2^{-j}, (k+1) 2^{-j}) for j = 0..level_max and the same arcs
/// shifted by 2^{-j-1}.  Every arc of length >= 2^{-level_max}
/// contains a member of at least a quarter of its length.
std::vector<Arc> dyadic_arc_family(int level_max);

}  // namespace rcm

#endif
