#include "rcm/spaces.hpp"

#include <algorithm>
#include <cmath>

#include "rcm/disc.hpp"

namespace rcm {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

cplx unit(double t) { return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)}; }

bool is_inf(double q) { return std::isinf(q); }

// One-dimensional golden-section maximization on [a, b]; returns the
// best value seen, never less than max(g(initial probes)).
double golden_max(const std::function<double(double)>& g, double a, double b,
                  double* arg = nullptr) {
  const double phi = 0.6180339887498949;
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
  if (arg) *arg = f1 > f2 ? x1 : x2;
  return std::max(f1, f2);
}

double derivative_tail_at_zero(const HoloFunction& f, int m) {
  double s = 0.0;
  for (int j = 0; j < m; ++j) s += std::abs(f.derivative(j, 0.0));
  return s;
}
}  // namespace

SpaceKind space_kind_from_string(const std::string& name) {
  if (name == "hardy") return SpaceKind::hardy;
  if (name == "bloch") return SpaceKind::bloch;
  if (name == "bmoa") return SpaceKind::bmoa;
  if (name == "triebel") return SpaceKind::triebel;
  if (name == "besov") return SpaceKind::besov;
  throw ParameterError("unknown space kind: " + name);
}

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::hardy:
      return "hardy";
    case SpaceKind::bloch:
      return "bloch";
    case SpaceKind::bmoa:
      return "bmoa";
    case SpaceKind::triebel:
      return "triebel";
    default:
      return "besov";
  }
}

SpaceSpec SpaceSpec::hardy(double p) {
  SpaceSpec spec;
  spec.kind = SpaceKind::hardy;
  spec.p = p;
  spec.validate();
  return spec;
}

SpaceSpec SpaceSpec::bloch() {
  SpaceSpec spec;
  spec.kind = SpaceKind::bloch;
  return spec;
}

SpaceSpec SpaceSpec::bmoa() {
  SpaceSpec spec;
  spec.kind = SpaceKind::bmoa;
  return spec;
}

SpaceSpec SpaceSpec::triebel(double s, double p, double q, int m) {
  SpaceSpec spec;
  spec.kind = SpaceKind::triebel;
  spec.s = s;
  spec.p = p;
  spec.q = q;
  spec.m = m > 0 ? m : static_cast<int>(std::floor(s)) + 1;
  spec.validate();
  return spec;
}

SpaceSpec SpaceSpec::besov(double s, double p, double q, int m) {
  SpaceSpec spec = triebel(s, p, q, m);
  spec.kind = SpaceKind::besov;
  return spec;
}

void SpaceSpec::validate() const {
  if (kind == SpaceKind::hardy) {
    if (!(p > 0)) throw ParameterError("hardy: p must be positive");
    return;
  }
  if (kind == SpaceKind::bloch || kind == SpaceKind::bmoa) return;
  if (!(p > 0)) throw ParameterError("space spec: p must be positive");
  if (!(q > 0)) throw ParameterError("space spec: q must be positive");
  if (!(s >= 0)) throw ParameterError("space spec: s must be >= 0");
  if (m < 1) throw ParameterError("space spec: m must be >= 1");
  if (!(m > s)) throw ParameterError("space spec: m must exceed s");
}

NormResult hardy_norm(const HoloFunction& f, double p, const QuadConfig& cfg) {
  if (!(p > 0)) throw ParameterError("hardy_norm: p must be positive");
  double ip = circle_integral(
      [&](double t) { return std::pow(std::abs(f(unit(t))), p); }, cfg);
  NormResult res;
  res.value = std::pow(ip, 1.0 / p);
  return res;
}

NormResult bloch_norm(const HoloFunction& f, const QuadConfig& cfg) {
  if (f.max_derivative_order() < 1)
    throw ParameterError("bloch_norm: first derivative unavailable for " +
                         f.describe());
  cfg.validate();
  auto val = [&](double t, double r) {
    double v = (1.0 - r * r) * std::abs(f.derivative(1, r * unit(t)));
    if (!std::isfinite(v))
      throw EvaluationError("bloch_norm: non-finite value at r=" +
                            std::to_string(r));
    return v;
  };

  const int nr = cfg.l_radial * cfg.k_panel;
  std::vector<double> radii(nr + 1);
  for (int j = 0; j <= nr; ++j)
    radii[j] = 1.0 - std::exp2(-static_cast<double>(j) / cfg.k_panel);

  double best = 0.0, best_t = 0.0;
  int best_j = 0;
  for (int i = 0; i < cfg.n_circle; ++i) {
    double t = static_cast<double>(i) / cfg.n_circle;
    for (int j = 0; j <= nr; ++j) {
      double v = val(t, radii[j]);
      if (v > best) {
        best = v;
        best_t = t;
        best_j = j;
      }
    }
  }
  double grid_value = best;

  // Local refinement at the winner: radial, then angular, then radial
  // again; each pass only moves the value up.
  double r_lo = radii[best_j > 0 ? best_j - 1 : 0];
  double r_hi = best_j < nr ? radii[best_j + 1] : 0.5 * (1.0 + radii[nr]);
  double best_r = radii[best_j];
  best = std::max(best, golden_max([&](double r) { return val(best_t, r); },
                                   r_lo, r_hi, &best_r));
  double dt = 1.0 / cfg.n_circle;
  best = std::max(best, golden_max([&](double t) { return val(t, best_r); },
                                   best_t - dt, best_t + dt, &best_t));
  best = std::max(best, golden_max([&](double r) { return val(best_t, r); },
                                   r_lo, r_hi));

  NormResult res;
  res.value = std::abs(f(0.0)) + best;
  res.lower_bound_certified = true;
  res.refinement = {std::abs(f(0.0)) + grid_value, res.value};
  return res;
}

NormResult bmoa_norm(const HoloFunction& f, const QuadConfig& cfg,
                     int level_max) {
  cfg.validate();
  const int n = cfg.n_circle;
  if ((1 << level_max) > n)
    throw ParameterError("bmoa_norm: 2^level_max must not exceed n_circle");
  std::vector<cplx> samples = f.boundary_samples(n);

  double best = 0.0;
  for (const Arc& arc : dyadic_arc_family(level_max)) {
    // Sample indices i with i/n in [start, start+length); the shifted
    // family may straddle the wrap point.
    long first = static_cast<long>(std::ceil(arc.start * n - 1e-9));
    long count = static_cast<long>(std::llround(arc.length * n));
    if (count <= 0) continue;
    cplx mean = 0.0;
    for (long k = 0; k < count; ++k)
      mean += samples[static_cast<std::size_t>((first + k) % n)];
    mean /= static_cast<double>(count);
    double osc = 0.0;
    for (long k = 0; k < count; ++k)
      osc += std::abs(samples[static_cast<std::size_t>((first + k) % n)] -
                      mean);
    osc /= static_cast<double>(count);
    best = std::max(best, osc);
  }
  NormResult res;
  res.value = best;
  res.lower_bound_certified = true;
  return res;
}

NormResult triebel_norm(const HoloFunction& f, const SpaceSpec& spec,
                        const QuadConfig& cfg, bool seminorm_only) {
  if (spec.kind != SpaceKind::triebel)
    throw ParameterError("triebel_norm: spec.kind mismatch");
  spec.validate();
  if (f.max_derivative_order() < spec.m)
    throw ParameterError("triebel_norm: derivative order " +
                         std::to_string(spec.m) + " unavailable for " +
                         f.describe());
  const int m = spec.m;
  const double s = spec.s, p = spec.p, q = spec.q;

  std::function<double(double)> inner;
  bool certified = false;
  if (is_inf(q)) {
    inner = [&, m, s](double t) {
      return radial_sup(
                 [&, t](double r) {
                   return std::abs(f.derivative(m, r * unit(t))) *
                          std::pow(1.0 - r, m - s);
                 },
                 cfg)
          .value;
    };
    certified = true;
  } else {
    double alpha = (m - s) * q - 1.0;
    inner = [&, m, q, alpha](double t) {
      return radial_integral(
          [&, t](double r) {
            return std::pow(std::abs(f.derivative(m, r * unit(t))), q);
          },
          alpha, cfg);
    };
  }

  double outer = circle_integral(
      [&](double t) {
        double v = inner(t);
        return is_inf(q) ? std::pow(v, p) : std::pow(v, p / q);
      },
      cfg);
  NormResult res;
  res.value = std::pow(outer, 1.0 / p);
  if (!seminorm_only) res.value += derivative_tail_at_zero(f, m);
  res.lower_bound_certified = certified;
  return res;
}

NormResult besov_norm(const HoloFunction& f, const SpaceSpec& spec,
                      const QuadConfig& cfg, bool seminorm_only) {
  if (spec.kind != SpaceKind::besov)
    throw ParameterError("besov_norm: spec.kind mismatch");
  spec.validate();
  if (f.max_derivative_order() < spec.m)
    throw ParameterError("besov_norm: derivative order " +
                         std::to_string(spec.m) + " unavailable for " +
                         f.describe());
  const int m = spec.m;
  const double s = spec.s, p = spec.p, q = spec.q;

  auto circle_lp = [&, m, p](double r) {
    double ip = circle_integral(
        [&, r](double t) {
          return std::pow(std::abs(f.derivative(m, r * unit(t))), p);
        },
        cfg);
    return std::pow(ip, 1.0 / p);
  };

  NormResult res;
  if (is_inf(q)) {
    res.value =
        radial_sup([&](double r) { return circle_lp(r) *
                                          std::pow(1.0 - r, m - s); },
                   cfg)
            .value;
    res.lower_bound_certified = true;
  } else {
    // (||.|| (1-r)^{m-s-1/q})^q = ||.||^q (1-r)^{(m-s)q-1}.
    double alpha = (m - s) * q - 1.0;
    double iq = radial_integral(
        [&](double r) { return std::pow(circle_lp(r), q); }, alpha, cfg);
    res.value = std::pow(iq, 1.0 / q);
  }
  if (!seminorm_only) res.value += derivative_tail_at_zero(f, m);
  return res;
}

double q_variation(const HoloFunction& f, double q, double t, double r_max,
                   const QuadConfig& cfg) {
  if (!(q >= 1.0)) throw ParameterError("q_variation: q must be >= 1");
  if (r_max >= 1.0)
    throw ParameterError(
        "q_variation: r_max must be < 1; the full integral may diverge and "
        "only partial integrals are computed");
  if (f.max_derivative_order() < 1)
    throw ParameterError("q_variation: first derivative unavailable");
  if (r_max <= 0.0) return 0.0;
  cplx dir = unit(t);
  return radial_integral(
      [&](double r) {
        return std::pow(std::abs(f.derivative(1, r * dir)), q);
      },
      q - 1.0, cfg, r_max);
}

NormResult space_norm(const HoloFunction& f, const SpaceSpec& spec,
                      const QuadConfig& cfg, int level_max,
                      bool seminorm_only) {
  switch (spec.kind) {
    case SpaceKind::hardy:
      return hardy_norm(f, spec.p, cfg);
    case SpaceKind::bloch:
      return bloch_norm(f, cfg);
    case SpaceKind::bmoa:
      return bmoa_norm(f, cfg, level_max);
    case SpaceKind::triebel:
      return triebel_norm(f, spec, cfg, seminorm_only);
    default:
      return besov_norm(f, spec, cfg, seminorm_only);
  }
}

}  // namespace rcm
