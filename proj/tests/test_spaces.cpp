#include <doctest.h>

#include <cmath>
#include <random>

#include "rcm/spaces.hpp"

using namespace rcm;

namespace {
QuadConfig cfg;
}

TEST_CASE("hardy norm: constants and monomials") {
  CHECK(hardy_norm(HoloFunction::taylor({1.0}), 2.0, cfg).value ==
        doctest::Approx(1.0).epsilon(1e-13));
  for (double p : {0.5, 1.0, 2.0, 4.0})
    CHECK(hardy_norm(HoloFunction::monomial(9), p, cfg).value ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hardy norm of a kernel matches the series identity") {
  double got = hardy_norm(HoloFunction::kernel_power(0.9, 1), 2.0, cfg).value;
  CHECK(got == doctest::Approx(std::sqrt(1.0 / 0.19)).epsilon(1e-8));
}

TEST_CASE("hardy norm satisfies Parseval at p=2") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<cplx> c(12);
    double sum = 0.0;
    for (auto& v : c) {
      v = {u(rng), u(rng)};
      sum += std::norm(v);
    }
    double got = hardy_norm(HoloFunction::taylor(c), 2.0, cfg).value;
    CHECK(got * got == doctest::Approx(sum).epsilon(1e-10));
  }
}

TEST_CASE("hardy norm rejects p <= 0") {
  CHECK_THROWS_AS(hardy_norm(HoloFunction::monomial(1), 0.0, cfg),
                  ParameterError);
}

TEST_CASE("hardy integral means grow with the radius") {
  std::vector<HoloFunction> fns = {
      HoloFunction::kernel_power(cplx(0.6, 0.3), 2),
      HoloFunction::fejer(16, 0.4), HoloFunction::blaschke(4),
      HoloFunction::taylor({0.5, 1.0, cplx(0.0, -1.0)})};
  for (const HoloFunction& f : fns) {
    double prev = 0.0;
    for (double r : {0.5, 0.9, 0.99}) {
      double mean = circle_integral(
          [&](double t) {
            cplx z = r * cplx(std::cos(6.283185307179586 * t),
                              std::sin(6.283185307179586 * t));
            return std::norm(f(z));
          },
          cfg);
      CHECK(mean >= prev - 1e-12);
      prev = mean;
    }
  }
}

TEST_CASE("bloch norm: identity and quadratic monomials") {
  QuadConfig small = cfg.with_circle(256).with_radial(10, 8);
  CHECK(bloch_norm(HoloFunction::monomial(1), small).value ==
        doctest::Approx(1.0).epsilon(1e-8));
  CHECK(bloch_norm(HoloFunction::monomial(2), small).value ==
        doctest::Approx(4.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-6));
}

TEST_CASE("bloch norm of the fejer family dominates the witness sum") {
  const int n = 256;
  QuadConfig small = cfg.with_circle(512).with_radial(12, 8);
  double value = bloch_norm(HoloFunction::fejer(n, 0.0), small).value;
  double witness = 0.0;
  for (int j = 1; j <= n; ++j)
    witness += j * std::exp(-(j - 1.0) / n) / (n - j + 1.0);
  witness *= 1.0 - std::exp(-2.0 / n);  // (1 - |z_n|^2) |f'(z_n)|
  CHECK(value >= witness - 1e-9);
  double ratio = value / std::log(static_cast<double>(n));
  CHECK(ratio >= 0.1);
  CHECK(ratio <= 10.0);
}

TEST_CASE("bmoa norm: constants vanish, identity oscillates to 1") {
  QuadConfig big = cfg.with_circle(1 << 14);
  CHECK(bmoa_norm(HoloFunction::taylor({cplx(2.0, 1.0)}), big, 8).value ==
        doctest::Approx(0.0));
  CHECK(bmoa_norm(HoloFunction::monomial(1), big, 8).value ==
        doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("norms are homogeneous") {
  HoloFunction f = HoloFunction::taylor({0.3, 1.0, cplx(0.0, 0.5)});
  const cplx c(1.5, -2.0);
  QuadConfig small = cfg.with_circle(256).with_radial(8, 8);
  CHECK(hardy_norm(f.scaled_by(c), 2.0, small).value ==
        doctest::Approx(std::abs(c) * hardy_norm(f, 2.0, small).value)
            .epsilon(1e-12));
  CHECK(bloch_norm(f.scaled_by(c), small).value ==
        doctest::Approx(std::abs(c) * bloch_norm(f, small).value)
            .epsilon(1e-10));
  CHECK(bmoa_norm(f.scaled_by(c), small, 6).value ==
        doctest::Approx(std::abs(c) * bmoa_norm(f, small, 6).value)
            .epsilon(1e-12));
  SpaceSpec ts = SpaceSpec::triebel(0.2, 2.0, 2.0, 1);
  CHECK(triebel_norm(f.scaled_by(c), ts, small).value ==
        doctest::Approx(std::abs(c) * triebel_norm(f, ts, small).value)
            .epsilon(1e-10));
  SpaceSpec bs = SpaceSpec::besov(0.2, 2.0, 3.0, 1);
  CHECK(besov_norm(f.scaled_by(c), bs, small).value ==
        doctest::Approx(std::abs(c) * besov_norm(f, bs, small).value)
            .epsilon(1e-10));
}

TEST_CASE("norms are invariant under grid-aligned rotation") {
  QuadConfig small = cfg.with_circle(256).with_radial(8, 8);
  std::vector<cplx> c = {0.2, 1.0, cplx(-0.3, 0.4), 0.7};
  HoloFunction f = HoloFunction::taylor(c);
  // f(e^{2 pi i /256} z): multiply c_k by the k-th root power.
  std::vector<cplx> rot = c;
  double th = 6.283185307179586 / 256.0;
  for (std::size_t k = 0; k < rot.size(); ++k)
    rot[k] *= cplx(std::cos(k * th), std::sin(k * th));
  HoloFunction g = HoloFunction::taylor(rot);
  CHECK(hardy_norm(f, 1.5, small).value ==
        doctest::Approx(hardy_norm(g, 1.5, small).value).epsilon(1e-12));
  SpaceSpec ts = SpaceSpec::triebel(0.0, 2.0, 2.0, 1);
  CHECK(triebel_norm(f, ts, small).value ==
        doctest::Approx(triebel_norm(g, ts, small).value).epsilon(1e-10));
}

TEST_CASE("triebel norm: monomial examples") {
  QuadConfig small = cfg.with_circle(64).with_radial(14, 16);
  SpaceSpec inf1 = SpaceSpec::triebel(0.0, 2.0, kInfExponent, 1);
  CHECK(triebel_norm(HoloFunction::monomial(1), inf1, small, true).value ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(triebel_norm(HoloFunction::monomial(4), inf1, small, true).value ==
        doctest::Approx(27.0 / 64.0).epsilon(1e-8));
}

TEST_CASE("triebel quasinorm adds derivative values at the origin") {
  QuadConfig small = cfg.with_circle(64).with_radial(10, 8);
  SpaceSpec spec = SpaceSpec::triebel(0.0, 2.0, 2.0, 1);
  HoloFunction f = HoloFunction::taylor({cplx(0.0, 3.0), 1.0});
  double semi = triebel_norm(f, spec, small, true).value;
  double full = triebel_norm(f, spec, small, false).value;
  CHECK(full == doctest::Approx(semi + 3.0).epsilon(1e-12));
}

TEST_CASE("triebel spec validation") {
  CHECK_THROWS_AS(SpaceSpec::triebel(1.5, 2.0, 2.0, 1), ParameterError);
  CHECK_THROWS_AS(SpaceSpec::triebel(0.0, -1.0, 2.0, 1), ParameterError);
  QuadConfig small = cfg.with_circle(64).with_radial(8, 8);
  CHECK_THROWS_AS(triebel_norm(HoloFunction::blaschke(2),
                               SpaceSpec::triebel(1.2, 2.0, 2.0, 2), small),
                  ParameterError);
}

TEST_CASE("besov norm: constants have zero seminorm") {
  QuadConfig small = cfg.with_circle(64).with_radial(8, 8);
  SpaceSpec spec = SpaceSpec::besov(0.0, 2.0, 2.0, 1);
  CHECK(besov_norm(HoloFunction::taylor({5.0}), spec, small, true).value ==
        doctest::Approx(0.0));
}

TEST_CASE("kernel seminorm ratios stay two-sidedly bounded") {
  // Triebel q=inf, s=0, p=2, l=1 against (1-lam)^{1-lp}; Besov q=inf
  // against (1-lam)^{(1-p)/p}.  Coarse grid: only band membership.
  double lo_t = 1e18, hi_t = 0.0, lo_b = 1e18, hi_b = 0.0;
  for (double lam : {0.9, 0.99}) {
    int n_circle = lam > 0.95 ? 8192 : 2048;
    QuadConfig c2 = cfg.with_circle(n_circle).with_radial(14, 8);
    double sem_t =
        triebel_norm(HoloFunction::kernel_power(lam, 1),
                     SpaceSpec::triebel(0.0, 2.0, kInfExponent, 1), c2, true)
            .value;
    double rt = sem_t * sem_t * (1.0 - lam);
    lo_t = std::min(lo_t, rt);
    hi_t = std::max(hi_t, rt);
    double sem_b =
        besov_norm(HoloFunction::kernel_power(lam, 1),
                   SpaceSpec::besov(0.0, 2.0, kInfExponent, 1), c2, true)
            .value;
    double rb = sem_b * std::sqrt(1.0 - lam);
    lo_b = std::min(lo_b, rb);
    hi_b = std::max(hi_b, rb);
  }
  CHECK(hi_t / lo_t < 10.0);
  CHECK(hi_b / lo_b < 10.0);
}

TEST_CASE("q variation: constants, identity, parameter errors") {
  QuadConfig small = cfg.with_radial(14, 16);
  CHECK(q_variation(HoloFunction::taylor({4.0}), 2.0, 0.3, 0.9, small) ==
        doctest::Approx(0.0));
  // int_0^{r_max} (1-r) dr for f(z) = z, q = 2.
  double rm = 0.999;
  CHECK(q_variation(HoloFunction::monomial(1), 2.0, 0.1, rm, small) ==
        doctest::Approx(0.5 - 0.5 * (1 - rm) * (1 - rm)).epsilon(1e-8));
  CHECK_THROWS_AS(q_variation(HoloFunction::monomial(1), 2.0, 0.0, 1.0, small),
                  ParameterError);
}

TEST_CASE("lacunary partial variation is monotone in the cutoff") {
  QuadConfig small = cfg.with_radial(14, 16);
  HoloFunction g = HoloFunction::lacunary(1.5, 12);
  double prev = -1.0;
  for (int n : {6, 8, 10, 12}) {
    double v = q_variation(g, 1.5, 0.137, 1.0 - std::ldexp(1.0, -n), small);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("space_norm dispatches on the kind") {
  QuadConfig small = cfg.with_circle(256).with_radial(8, 8);
  CHECK(space_norm(HoloFunction::monomial(1), SpaceSpec::hardy(2.0), small)
            .value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(space_norm(HoloFunction::monomial(1), SpaceSpec::bloch(), small)
            .value == doctest::Approx(1.0).epsilon(1e-8));
}
