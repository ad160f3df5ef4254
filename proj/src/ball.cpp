#include "rcm/ball.hpp"

#include <cmath>
#include <fstream>

namespace rcm {

namespace {
constexpr int kDim = 2;

BallPoint from_sphere(const SpherePoint& s) { return {s.z1, s.z2}; }

void require_sphere(const BallPoint& z, const char* what) {
  if (!z.on_sphere())
    throw ParameterError(std::string(what) + ": point is not on the unit "
                         "sphere (|z| = " + std::to_string(z.norm()) + ")");
}
}  // namespace

double BallPoint::norm() const {
  return std::sqrt(std::norm(z1) + std::norm(z2));
}

bool BallPoint::on_sphere(double tol) const {
  return std::abs(std::norm(z1) + std::norm(z2) - 1.0) <= tol;
}

std::complex<double> ball_inner(const BallPoint& z, const BallPoint& w) {
  return z.z1 * std::conj(w.z1) + z.z2 * std::conj(w.z2);
}

double ns_metric(const BallPoint& zeta, const BallPoint& xi) {
  require_sphere(zeta, "ns_metric");
  require_sphere(xi, "ns_metric");
  return std::sqrt(std::abs(1.0 - ball_inner(zeta, xi)));
}

NonIsotropicBall::NonIsotropicBall(BallPoint center_, double delta_)
    : center(center_), delta(delta_) {
  require_sphere(center, "NonIsotropicBall");
  if (!(delta > 0)) throw ParameterError("NonIsotropicBall: delta must be > 0");
}

bool NonIsotropicBall::contains_sphere_point(const BallPoint& xi) const {
  return std::abs(1.0 - ball_inner(center, xi)) <= delta;
}

BallMeasure::BallMeasure(std::vector<Atom> interior, std::vector<Atom> sphere,
                         double uniform_sphere_mass)
    : interior_(std::move(interior)),
      sphere_(std::move(sphere)),
      uniform_(uniform_sphere_mass) {
  for (const auto& a : interior_) {
    if (a.w < 0) throw IngestionError("interior_atoms: negative weight");
    if (a.z.norm() >= 1.0)
      throw IngestionError("interior_atoms: |z| >= 1");
  }
  for (const auto& a : sphere_) {
    if (a.w < 0) throw IngestionError("sphere_atoms: negative weight");
    if (!a.z.on_sphere())
      throw IngestionError("sphere_atoms: point is off the unit sphere");
  }
  if (uniform_ < 0)
    throw IngestionError("uniform_sphere_mass must be nonnegative");
}

double BallMeasure::total_mass() const {
  double s = uniform_;
  for (const auto& a : interior_) s += a.w;
  for (const auto& a : sphere_) s += a.w;
  return s;
}

BallMeasure BallMeasure::from_json(const nlohmann::json& doc) {
  if (!doc.is_object())
    throw IngestionError("ball measure document must be an object");
  std::vector<Atom> interior, sphere;
  double uniform = 0.0;
  try {
    auto read_atoms = [](const nlohmann::json& arr) {
      std::vector<Atom> out;
      for (const auto& a : arr) {
        Atom atom;
        atom.z.z1 = {a.at("re1").get<double>(), a.at("im1").get<double>()};
        atom.z.z2 = {a.at("re2").get<double>(), a.at("im2").get<double>()};
        atom.w = a.at("w").get<double>();
        out.push_back(atom);
      }
      return out;
    };
    if (doc.contains("interior_atoms"))
      interior = read_atoms(doc.at("interior_atoms"));
    if (doc.contains("sphere_atoms")) sphere = read_atoms(doc.at("sphere_atoms"));
    if (doc.contains("uniform_sphere_mass"))
      uniform = doc.at("uniform_sphere_mass").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError(std::string("malformed ball measure document: ") +
                         e.what());
  }
  return BallMeasure(std::move(interior), std::move(sphere), uniform);
}

BallMeasure BallMeasure::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open ball measure file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError("invalid JSON in " + path + ": " + e.what());
  }
  return from_json(doc);
}

nlohmann::json BallMeasure::to_json() const {
  auto write_atoms = [](const std::vector<Atom>& atoms) {
    auto arr = nlohmann::json::array();
    for (const auto& a : atoms)
      arr.push_back({{"re1", a.z.z1.real()},
                     {"im1", a.z.z1.imag()},
                     {"re2", a.z.z2.real()},
                     {"im2", a.z.z2.imag()},
                     {"w", a.w}});
    return arr;
  };
  nlohmann::json doc = nlohmann::json::object();
  if (!interior_.empty()) doc["interior_atoms"] = write_atoms(interior_);
  if (!sphere_.empty()) doc["sphere_atoms"] = write_atoms(sphere_);
  if (uniform_ > 0) doc["uniform_sphere_mass"] = uniform_;
  return doc;
}

BallMass ball_region_mass(const BallMeasure& mu, const NonIsotropicBall& q,
                          bool with_window, double depth,
                          const QuadConfig& cfg) {
  if (with_window && !(depth > 0 && depth <= 1))
    throw ParameterError("ball_region_mass: window depth must be in (0, 1]");
  BallMass out;
  for (const auto& a : mu.sphere_atoms())
    if (q.contains_sphere_point(a.z)) out.value += a.w;
  if (with_window) {
    for (const auto& a : mu.interior_atoms()) {
      double r = a.z.norm();
      if (r < 1.0 - depth || r == 0.0) continue;
      BallPoint proj{a.z.z1 / r, a.z.z2 / r};
      if (q.contains_sphere_point(proj)) out.value += a.w;
    }
  }
  if (mu.uniform_sphere_mass() > 0) {
    McResult mc = sphere3_mc(
        [&](const SpherePoint& zeta) {
          return q.contains_sphere_point(from_sphere(zeta)) ? 1.0 : 0.0;
        },
        cfg);
    out.value += mu.uniform_sphere_mass() * mc.estimate;
    out.std_error = mu.uniform_sphere_mass() * mc.std_error;
  }
  return out;
}

BallMass sigma_mass(const NonIsotropicBall& q, const QuadConfig& cfg) {
  McResult mc = sphere3_mc(
      [&](const SpherePoint& zeta) {
        return q.contains_sphere_point(from_sphere(zeta)) ? 1.0 : 0.0;
      },
      cfg);
  return {mc.estimate, mc.std_error};
}

BallNorm ball_kernel_norm(const BallPoint& w, int l, double p,
                          const QuadConfig& cfg) {
  if (l < 1) throw ParameterError("ball_kernel_norm: l must be >= 1");
  if (!(p > 0)) throw ParameterError("ball_kernel_norm: p must be positive");
  if (!(w.norm() < 1.0))
    throw ParameterError("ball_kernel_norm: |w| must be < 1");
  BallNorm out;
  out.asymptotic_regime = p * l > 1.0;
  if (w.norm() == 0.0) {
    out.value = 1.0;
    out.value_pth = 1.0;
    return out;
  }
  const double e = p * l * kDim;
  McResult mc = sphere3_mc(
      [&](const SpherePoint& zeta) {
        return std::pow(std::abs(1.0 - ball_inner(from_sphere(zeta), w)), -e);
      },
      cfg);
  out.value_pth = mc.estimate;
  out.std_error = mc.std_error;
  out.value = std::pow(mc.estimate, 1.0 / p);
  return out;
}

BallScan ball_kernel_test_constant(const BallMeasure& mu, double p, int l,
                                   const std::vector<BallPoint>& w_grid,
                                   const QuadConfig& cfg) {
  if (!(p > 0) || l < 1 || !(p * l > 1.0))
    throw ParameterError("ball_kernel_test_constant requires pl > 1");
  if (w_grid.empty())
    throw ParameterError("ball_kernel_test_constant: empty w grid");
  const double e = p * l * kDim;

  BallScan scan;
  bool first = true;
  for (const BallPoint& w : w_grid) {
    BallNorm denom = ball_kernel_norm(w, l, p, cfg);
    double num = 0.0;
    for (const auto& a : mu.interior_atoms())
      num += a.w * std::pow(std::abs(1.0 - ball_inner(a.z, w)), -e);
    for (const auto& a : mu.sphere_atoms())
      num += a.w * std::pow(std::abs(1.0 - ball_inner(a.z, w)), -e);
    if (mu.uniform_sphere_mass() > 0) {
      // Same seed as the denominator stream: the uniform part and the
      // norm share samples, so mu = c sigma gives the ratio exactly c.
      if (w.norm() == 0.0) {
        num += mu.uniform_sphere_mass();
      } else {
        McResult mc = sphere3_mc(
            [&](const SpherePoint& zeta) {
              return std::pow(std::abs(1.0 - ball_inner(from_sphere(zeta), w)),
                              -e);
            },
            cfg);
        num += mu.uniform_sphere_mass() * mc.estimate;
      }
    }
    double ratio = num / denom.value_pth;
    if (first || ratio < scan.constant) {
      scan.constant = ratio;
      scan.arg_w = w;
      first = false;
    }
  }
  return scan;
}

std::vector<BallPoint> default_w_grid() {
  const double is2 = 0.70710678118654752;
  std::vector<BallPoint> dirs = {
      {1.0, 0.0},
      {0.0, 1.0},
      {is2, is2},
      {std::complex<double>(0.0, is2), is2},
  };
  std::vector<BallPoint> grid;
  for (double r : {0.5, 0.9})
    for (const BallPoint& d : dirs)
      grid.push_back({r * d.z1, r * d.z2});
  return grid;
}

}  // namespace rcm
