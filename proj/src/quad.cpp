#include "rcm/quad.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <random>

namespace rcm {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_finite(double v, double where, const char* engine) {
  if (!std::isfinite(v)) {
    throw EvaluationError(std::string(engine) + ": non-finite value at node " +
                          std::to_string(where));
  }
}

}  // namespace

void QuadConfig::validate() const {
  if (n_circle < 16 || !is_pow2(n_circle))
    throw ParameterError("QuadConfig.n_circle must be a power of two >= 16");
  if (l_radial < 4) throw ParameterError("QuadConfig.l_radial must be >= 4");
  if (k_panel < 4) throw ParameterError("QuadConfig.k_panel must be >= 4");
}

QuadConfig QuadConfig::with_circle(int n) const {
  QuadConfig c = *this;
  c.n_circle = n;
  return c;
}

QuadConfig QuadConfig::with_radial(int l, int k) const {
  QuadConfig c = *this;
  c.l_radial = l;
  c.k_panel = k;
  return c;
}

const GaussRule& gauss_legendre(int k) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;

  // Newton iteration on the Legendre polynomial P_k.
  GaussRule rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  for (int i = 0; i < k; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (k + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= k; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = k * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return cache.emplace(k, std::move(rule)).first->second;
}

double circle_integral(const std::function<double(double)>& g,
                       const QuadConfig& cfg) {
  cfg.validate();
  const int n = cfg.n_circle;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    double t = static_cast<double>(j) / n;
    double v = g(t);
    check_finite(v, t, "circle_integral");
    sum += v;
  }
  return sum / n;
}

std::complex<double> circle_integral_c(
    const std::function<std::complex<double>(double)>& g,
    const QuadConfig& cfg) {
  cfg.validate();
  const int n = cfg.n_circle;
  std::complex<double> sum = 0.0;
  for (int j = 0; j < n; ++j) {
    double t = static_cast<double>(j) / n;
    std::complex<double> v = g(t);
    check_finite(std::abs(v), t, "circle_integral");
    sum += v;
  }
  return sum / static_cast<double>(n);
}

double radial_integral(const std::function<double(double)>& g, double alpha,
                       const QuadConfig& cfg, double r_max) {
  cfg.validate();
  if (alpha <= -1.0)
    throw ParameterError("radial_integral: weight exponent alpha <= -1 "
                         "gives a divergent integral");
  if (r_max <= 0.0) return 0.0;

  const GaussRule& gl = gauss_legendre(cfg.k_panel);
  const bool to_one = r_max >= 1.0;
  const double top = to_one ? 1.0 : r_max;

  // Panel edges 0, 1/2, 3/4, ..., 1-2^{-L}, clipped at r_max.
  std::vector<double> edges{0.0};
  for (int j = 1; j <= cfg.l_radial; ++j) {
    double e = 1.0 - std::ldexp(1.0, -j);
    if (e < top) edges.push_back(e);
  }

  double total = 0.0;
  auto add_panel = [&](double a, double b) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < cfg.k_panel; ++i) {
      double r = mid + half * gl.nodes[i];
      double v = g(r) * std::pow(1.0 - r, alpha);
      check_finite(v, r, "radial_integral");
      total += half * gl.weights[i] * v;
    }
  };

  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    add_panel(edges[i], edges[i + 1]);

  const double tail_lo = edges.back();
  if (!to_one) {
    if (r_max > tail_lo) add_panel(tail_lo, r_max);
  } else {
    // Closing panel [1-2^{-L}, 1): the weight integrates in closed form
    // and g is sampled at the weighted mean of the panel.
    double eps = 1.0 - tail_lo;
    double tail_mass = std::pow(eps, alpha + 1.0) / (alpha + 1.0);
    double r_c = 1.0 - eps * (alpha + 1.0) / (alpha + 2.0);
    double v = g(r_c);
    check_finite(v, r_c, "radial_integral");
    total += v * tail_mass;
  }
  return total;
}

SupResult radial_sup(const std::function<double(double)>& g,
                     const QuadConfig& cfg) {
  cfg.validate();
  const int n = cfg.l_radial * cfg.k_panel;
  std::vector<double> grid(n + 1);
  SupResult best;
  best.value = -std::numeric_limits<double>::infinity();
  int best_idx = 0;
  for (int j = 0; j <= n; ++j) {
    double r = 1.0 - std::exp2(-static_cast<double>(j) / cfg.k_panel);
    grid[j] = r;
    double v = g(r);
    check_finite(v, r, "radial_sup");
    if (v > best.value) {
      best.value = v;
      best.arg_r = r;
      best_idx = j;
    }
  }

  // Golden-section refinement around the winning cell; the returned
  // value can only move up, so it stays a lower bound of the true sup.
  double lo = grid[best_idx > 0 ? best_idx - 1 : 0];
  double hi = best_idx < n ? grid[best_idx + 1]
                           : 0.5 * (1.0 + grid[n]);
  const double phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  for (int it = 0; it < 90; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = g(x1);
    }
  }
  double xr = f1 > f2 ? x1 : x2;
  double fr = std::max(f1, f2);
  check_finite(fr, xr, "radial_sup");
  if (fr > best.value) {
    best.value = fr;
    best.arg_r = xr;
  }
  return best;
}

double window_integral(
    const std::function<double(std::complex<double>)>& g,
    const CarlesonWindow& window, const QuadConfig& cfg) {
  cfg.validate();
  const double len = window.arc.length;
  const double h = window.depth;

  // Angular resolution tied to the window depth: the kernels this
  // engine feeds are peaked at scale ~h near the boundary.
  double want = len * std::max(static_cast<double>(cfg.n_circle), 16.0 / h);
  int n_arc = std::max(32, static_cast<int>(std::ceil(want)));

  const GaussRule& gl = gauss_legendre(cfg.k_panel);
  // Radial panels on [1-h, 1] graded toward the boundary.
  std::vector<double> edges;
  for (int j = 0; j <= cfg.l_radial; ++j)
    edges.push_back(1.0 - h * std::ldexp(1.0, -j));
  edges.push_back(1.0);

  double total = 0.0;
  const double dt = len / n_arc;
  for (int k = 0; k < n_arc; ++k) {
    double t = wrap_turn(window.arc.start + (k + 0.5) * dt);
    std::complex<double> dir(std::cos(kTwoPi * t), std::sin(kTwoPi * t));
    double line = 0.0;
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
      double mid = 0.5 * (edges[e] + edges[e + 1]);
      double half = 0.5 * (edges[e + 1] - edges[e]);
      for (int i = 0; i < cfg.k_panel; ++i) {
        double r = mid + half * gl.nodes[i];
        double v = g(r * dir) * r;
        check_finite(v, r, "window_integral");
        line += half * gl.weights[i] * v;
      }
    }
    total += line * dt * kTwoPi;
  }
  return total;
}

McResult sphere3_mc(const std::function<double(const SpherePoint&)>& g,
                    const QuadConfig& cfg) {
  cfg.validate();
  if (cfg.n_mc < 1000)
    throw ParameterError("sphere3_mc: n_mc must be at least 1000");

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double sum = 0.0, sumsq = 0.0;
  for (long i = 0; i < cfg.n_mc; ++i) {
    double a = gauss(rng), b = gauss(rng), c = gauss(rng), d = gauss(rng);
    double norm = std::sqrt(a * a + b * b + c * c + d * d);
    SpherePoint zeta{{a / norm, b / norm}, {c / norm, d / norm}};
    double v = g(zeta);
    if (!std::isfinite(v))
      throw EvaluationError("sphere3_mc: non-finite sample value");
    sum += v;
    sumsq += v * v;
  }
  double n = static_cast<double>(cfg.n_mc);
  double mean = sum / n;
  double var = std::max(0.0, sumsq / n - mean * mean);
  return {mean, std::sqrt(var / n)};
}

}  // namespace rcm
