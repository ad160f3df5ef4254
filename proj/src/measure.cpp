#include "rcm/measure.hpp"

#include <cmath>
#include <fstream>

namespace rcm {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::complex<double> boundary_point(double t) {
  return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)};
}

// Integral of the density over [a,b] with 0 <= a <= b <= 1; cells are
// split proportionally at the endpoints so dyadic additivity is exact.
double density_segment(const BoundaryDensity& d, double a, double b) {
  if (d.empty() || b <= a) return 0.0;
  const int n = d.n_grid;
  int first = static_cast<int>(std::floor(a * n));
  int last = static_cast<int>(std::ceil(b * n));
  double sum = 0.0;
  for (int i = first; i < last && i < n; ++i) {
    double lo = std::max(a, static_cast<double>(i) / n);
    double hi = std::min(b, static_cast<double>(i + 1) / n);
    if (hi > lo) sum += d.values[static_cast<std::size_t>(i)] * (hi - lo);
  }
  return sum;
}
}  // namespace

double BoundaryDensity::value_at(double t) const {
  if (empty()) return 0.0;
  int i = static_cast<int>(std::floor(wrap_turn(t) * n_grid));
  if (i >= n_grid) i = n_grid - 1;
  return values[static_cast<std::size_t>(i)];
}

double BoundaryDensity::mass() const {
  if (empty()) return 0.0;
  double s = 0.0;
  for (double v : values) s += v;
  return s / n_grid;
}

Measure::Measure(std::vector<InteriorAtom> interior,
                 std::vector<BoundaryAtom> boundary, BoundaryDensity density)
    : interior_(std::move(interior)),
      boundary_(std::move(boundary)),
      density_(std::move(density)) {
  for (const auto& a : interior_) {
    if (a.w < 0) throw IngestionError("interior_atoms: negative weight");
    if (a.z.radius() >= 1.0)
      throw IngestionError("interior_atoms: |z| >= 1 at (" +
                           std::to_string(a.z.re) + ", " +
                           std::to_string(a.z.im) + ")");
  }
  for (const auto& a : boundary_) {
    if (a.w < 0) throw IngestionError("boundary_atoms: negative weight");
    if (!(a.t >= 0.0 && a.t < 1.0))
      throw IngestionError("boundary_atoms: angle t must lie in [0,1)");
  }
  if (!density_.empty()) {
    if (density_.n_grid <= 0)
      throw IngestionError("boundary_density.N_grid must be positive");
    if (static_cast<int>(density_.values.size()) != density_.n_grid)
      throw IngestionError("boundary_density: values.length != N_grid");
    for (double v : density_.values)
      if (v < 0) throw IngestionError("boundary_density: negative value");
  }
  total_mass_ = density_.mass();
  for (const auto& a : interior_) total_mass_ += a.w;
  for (const auto& a : boundary_) total_mass_ += a.w;
}

Measure Measure::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw IngestionError("measure document must be an object");
  std::vector<InteriorAtom> interior;
  std::vector<BoundaryAtom> boundary;
  BoundaryDensity density;
  try {
    if (doc.contains("interior_atoms")) {
      for (const auto& a : doc.at("interior_atoms")) {
        double re = a.at("re").get<double>();
        double im = a.at("im").get<double>();
        if (re * re + im * im >= 1.0)
          throw IngestionError("interior_atoms: |z| >= 1");
        interior.push_back({DiscPoint(re, im), a.at("w").get<double>()});
      }
    }
    if (doc.contains("boundary_atoms")) {
      for (const auto& a : doc.at("boundary_atoms"))
        boundary.push_back({a.at("t").get<double>(), a.at("w").get<double>()});
    }
    if (doc.contains("boundary_density")) {
      const auto& d = doc.at("boundary_density");
      density.n_grid = d.at("N_grid").get<int>();
      density.values = d.at("values").get<std::vector<double>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError(std::string("malformed measure document: ") + e.what());
  }
  return Measure(std::move(interior), std::move(boundary), std::move(density));
}

Measure Measure::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open measure file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError("invalid JSON in " + path + ": " + e.what());
  }
  return from_json(doc);
}

nlohmann::json Measure::to_json() const {
  nlohmann::json doc = nlohmann::json::object();
  if (!interior_.empty()) {
    auto arr = nlohmann::json::array();
    for (const auto& a : interior_)
      arr.push_back({{"re", a.z.re}, {"im", a.z.im}, {"w", a.w}});
    doc["interior_atoms"] = arr;
  }
  if (!boundary_.empty()) {
    auto arr = nlohmann::json::array();
    for (const auto& a : boundary_) arr.push_back({{"t", a.t}, {"w", a.w}});
    doc["boundary_atoms"] = arr;
  }
  if (!density_.empty())
    doc["boundary_density"] = {{"N_grid", density_.n_grid},
                               {"values", density_.values}};
  return doc;
}

double Measure::boundary_mass() const {
  double s = density_.mass();
  for (const auto& a : boundary_) s += a.w;
  return s;
}

double Measure::arc_mass(const Arc& arc) const {
  double sum = 0.0;
  for (const auto& a : boundary_)
    if (arc.contains(a.t)) sum += a.w;
  double end = arc.start + arc.length;
  if (end <= 1.0) {
    sum += density_segment(density_, arc.start, end);
  } else {
    sum += density_segment(density_, arc.start, 1.0);
    sum += density_segment(density_, 0.0, end - 1.0);
  }
  return sum;
}

double Measure::window_mass(const CarlesonWindow& window) const {
  double sum = arc_mass(window.arc);
  for (const auto& a : interior_)
    if (window.contains(a.z)) sum += a.w;
  return sum;
}

double Measure::integrate(
    const std::function<double(std::complex<double>)>& g,
    const QuadConfig& cfg) const {
  cfg.validate();
  double sum = 0.0;
  for (const auto& a : interior_) {
    double v = g(a.z.value());
    if (!std::isfinite(v))
      throw EvaluationError("integrate: non-finite value at interior atom (" +
                            std::to_string(a.z.re) + ", " +
                            std::to_string(a.z.im) + ")");
    sum += v * a.w;
  }
  for (const auto& a : boundary_) {
    double v = g(boundary_point(a.t));
    if (!std::isfinite(v))
      throw EvaluationError("integrate: non-finite value at boundary atom t=" +
                            std::to_string(a.t));
    sum += v * a.w;
  }
  if (!density_.empty()) {
    // Refine the density grid to at least n_circle midpoints, keeping
    // nodes aligned with cell boundaries so per-cell mass is exact.
    int sub = (cfg.n_circle + density_.n_grid - 1) / density_.n_grid;
    if (sub < 1) sub = 1;
    long m = static_cast<long>(sub) * density_.n_grid;
    for (long k = 0; k < m; ++k) {
      double t = (k + 0.5) / m;
      double v = g(boundary_point(t));
      if (!std::isfinite(v))
        throw EvaluationError("integrate: non-finite value at t=" +
                              std::to_string(t));
      sum += v * density_.values[static_cast<std::size_t>(k / sub)] / m;
    }
  }
  return sum;
}

Measure Measure::restricted_to_boundary() const {
  return Measure({}, boundary_, density_);
}

Measure Measure::scaled(double c) const {
  if (c < 0) throw ParameterError("Measure::scaled: factor must be >= 0");
  auto interior = interior_;
  auto boundary = boundary_;
  auto density = density_;
  for (auto& a : interior) a.w *= c;
  for (auto& a : boundary) a.w *= c;
  for (auto& v : density.values) v *= c;
  return Measure(std::move(interior), std::move(boundary), std::move(density));
}

namespace corpus {

Measure lebesgue() {
  return Measure({}, {}, BoundaryDensity{4, {1.0, 1.0, 1.0, 1.0}});
}

Measure half_circle() {
  return Measure({}, {}, BoundaryDensity{2, {2.0, 0.0}});
}

Measure comb() {
  std::vector<BoundaryAtom> atoms;
  for (int k = 0; k < 16; ++k)
    atoms.push_back({static_cast<double>(k) / 16.0, 1.0 / 16.0});
  return Measure({}, std::move(atoms), {});
}

Measure interior_cloud() {
  std::vector<InteriorAtom> atoms;
  const double radii[] = {0.3, 0.5, 0.7, 0.9};
  int i = 0;
  for (double r : radii) {
    for (int k = 0; k < 3; ++k) {
      double t = (i * 3 + k) / 12.0 + 0.02;
      atoms.push_back({DiscPoint::polar(r, t), 1.0 / 12.0});
    }
    ++i;
  }
  return Measure(std::move(atoms), {}, {});
}

Measure mixed() {
  std::vector<InteriorAtom> interior;
  interior.push_back({DiscPoint::polar(0.6, 0.1), 0.1});
  interior.push_back({DiscPoint::polar(0.8, 0.4), 0.1});
  interior.push_back({DiscPoint::polar(0.95, 0.7), 0.1});
  std::vector<BoundaryAtom> boundary{{0.25, 0.05}, {0.75, 0.05}};
  return Measure(std::move(interior), std::move(boundary),
                 BoundaryDensity{4, {0.5, 0.5, 0.5, 0.5}});
}

Measure by_name(const std::string& name) {
  if (name == "lebesgue") return lebesgue();
  if (name == "half_circle") return half_circle();
  if (name == "comb") return comb();
  if (name == "interior_cloud") return interior_cloud();
  if (name == "mixed") return mixed();
  throw ParameterError("unknown corpus measure: " + name);
}

std::vector<std::string> names() {
  return {"lebesgue", "half_circle", "comb", "interior_cloud", "mixed"};
}

}  // namespace corpus

}  // namespace rcm
