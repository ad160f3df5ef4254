#ifndef RCM_MEASURE_HPP
#define RCM_MEASURE_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "rcm/disc.hpp"
#include "rcm/quad.hpp"

#include <json.hpp>

namespace rcm {

struct InteriorAtom {
  DiscPoint z;   // |z| < 1
  double w = 0;  // weight >= 0
};

struct BoundaryAtom {
  double t = 0;  // angle in turns, [0,1)
  double w = 0;
};

/// Piecewise-constant density on a uniform grid of [0,1); represents
/// the absolutely continuous part of the boundary restriction.
struct BoundaryDensity {
  int n_grid = 0;
  std::vector<double> values;

  bool empty() const { return n_grid == 0; }
  double value_at(double t) const;
  double mass() const;
};

/// Finite positive Borel measure on the closed disc: interior atoms,
/// boundary atoms, and a piecewise-constant boundary density.
class Measure {
 public:
  Measure() = default;
  Measure(std::vector<InteriorAtom> interior, std::vector<BoundaryAtom> boundary,
          BoundaryDensity density);

  static Measure from_json(const nlohmann::json& doc);
  static Measure from_file(const std::string& path);
  nlohmann::json to_json() const;

  double total_mass() const { return total_mass_; }
  double boundary_mass() const;

  /// Mass of the boundary parts carried by the arc.
  double arc_mass(const Arc& arc) const;
  /// Mass of the window: boundary parts over the arc plus interior
  /// atoms with 1-h <= |z|.
  double window_mass(const CarlesonWindow& window) const;

  /// Integral of g over the closed disc: atoms exactly, density by the
  /// cell-midpoint rule refined to at least cfg.n_circle points.
  double integrate(const std::function<double(std::complex<double>)>& g,
                   const QuadConfig& cfg) const;

  Measure restricted_to_boundary() const;
  Measure scaled(double c) const;

  const std::vector<InteriorAtom>& interior_atoms() const { return interior_; }
  const std::vector<BoundaryAtom>& boundary_atoms() const { return boundary_; }
  const BoundaryDensity& density() const { return density_; }

 private:
  std::vector<InteriorAtom> interior_;
  std::vector<BoundaryAtom> boundary_;
  BoundaryDensity density_;
  double total_mass_ = 0.0;
};

/// Built-in corpus measures used by the verification suite.
namespace corpus {
Measure lebesgue();
Measure half_circle();
Measure comb();
Measure interior_cloud();
Measure mixed();
Measure by_name(const std::string& name);
std::vector<std::string> names();
}  // namespace corpus

}  // namespace rcm

#endif
