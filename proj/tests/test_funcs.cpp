#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "rcm/funcs.hpp"

using namespace rcm;

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

TEST_CASE("DSL: fejer n=2 phi=0 is z/2 + z^2") {
  HoloFunction f = HoloFunction::parse("fejer:n=2,phi=0");
  for (cplx z : {cplx(0.3, 0.1), cplx(-0.5, 0.4), cplx(1.0, 0.0)}) {
    cplx want = z / 2.0 + z * z;
    CHECK(std::abs(f(z) - want) < 1e-14);
  }
}

TEST_CASE("DSL: blaschke n=1 degenerates to z^2") {
  HoloFunction b = HoloFunction::parse("blaschke:n=1");
  for (cplx z : {cplx(0.3, 0.1), cplx(0.0, 0.9)})
    CHECK(std::abs(b(z) - z * z) < 1e-14);
}

TEST_CASE("DSL: kernel power definition") {
  HoloFunction f = HoloFunction::parse("kernel:lambda=0.9+0i,l=2");
  cplx z(0.2, 0.5);
  CHECK(std::abs(f(z) - std::pow(1.0 - 0.9 * z, -2.0)) < 1e-14);
}

TEST_CASE("DSL rejects bad parameters") {
  CHECK_THROWS_AS(HoloFunction::parse("kernel:lambda=1.0+0i,l=1"),
                  ParameterError);
  CHECK_THROWS_AS(HoloFunction::parse("fejer:n=0,phi=0"), ParameterError);
  CHECK_THROWS_AS(HoloFunction::parse("lacunary:q=2.0,N=8"), ParameterError);
  CHECK_THROWS_AS(HoloFunction::parse("lacunary:q=0.5,N=8"), ParameterError);
  CHECK_THROWS_AS(HoloFunction::parse("nonsense:n=3"), ParameterError);
  CHECK_THROWS_AS(HoloFunction::parse("kernel:l=1"), ParameterError);
}

TEST_CASE("monomial derivatives") {
  HoloFunction f = HoloFunction::monomial(5);
  cplx z(0.4, -0.2);
  CHECK(std::abs(f.derivative(1, z) - 5.0 * std::pow(z, 4.0)) < 1e-13);
  CHECK(std::abs(f.derivative(6, z)) == 0.0);
}

TEST_CASE("kernel derivative at the origin") {
  HoloFunction f = HoloFunction::kernel_power(0.5, 1);
  CHECK(std::abs(f.derivative(1, 0.0) - cplx(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(f(0.0) - cplx(1.0, 0.0)) == 0.0);
}

TEST_CASE("kernel normalization at the origin is exact") {
  for (int l : {1, 2, 5})
    for (cplx lam : {cplx(0.9, 0.0), cplx(0.3, -0.8), cplx(0.0, 0.0)})
      CHECK(std::abs(HoloFunction::kernel_power(lam, l)(0.0) - 1.0) == 0.0);
}

TEST_CASE("fejer witness: phases align into a positive sum") {
  for (int n : {8, 64, 256}) {
    for (double phi : {0.0, 0.3, 2.0}) {
      HoloFunction f = HoloFunction::fejer(n, phi);
      double r = std::exp(-1.0 / n);
      cplx z_n = r * cplx(std::cos(phi), std::sin(phi));
      double direct = 0.0;
      for (int j = 1; j <= n; ++j)
        direct += j * std::exp(-(j - 1.0) / n) / (n - j + 1.0);
      CHECK(std::abs(f.derivative(1, z_n)) ==
            doctest::Approx(direct).epsilon(1e-10));
    }
  }
}

TEST_CASE("blaschke boundary values are unimodular") {
  for (int n : {2, 5, 16}) {
    HoloFunction b = HoloFunction::blaschke(n);
    for (const cplx& v : b.boundary_samples(512))
      CHECK(std::abs(std::abs(v) - 1.0) < 1e-10);
  }
}

TEST_CASE("first derivatives match finite differences") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  std::vector<HoloFunction> fns = {
      HoloFunction::taylor({1.0, cplx(0.0, 2.0), -0.5, 0.25}),
      HoloFunction::kernel_power(cplx(0.4, 0.3), 2),
      HoloFunction::fejer(12, 0.7),
      HoloFunction::lacunary(1.5, 8),
      HoloFunction::blaschke(4),
      HoloFunction::monomial(7)};
  const double h = 1e-6;
  for (const HoloFunction& f : fns) {
    for (int i = 0; i < 100; ++i) {
      cplx z(u(rng), u(rng));
      cplx fd = (f(z + h) - f(z - h)) / (2.0 * h);
      CHECK(std::abs(f.derivative(1, z) - fd) < 1e-6);
    }
  }
}

TEST_CASE("second derivatives where supported") {
  HoloFunction k = HoloFunction::kernel_power(0.5, 1);
  cplx z(0.2, 0.2);
  // d^2 (1 - 0.5 z)^{-1} = 0.25 * 2 * (1 - 0.5 z)^{-3}
  CHECK(std::abs(k.derivative(2, z) - 0.5 * std::pow(1.0 - 0.5 * z, -3.0)) <
        1e-13);
  CHECK_THROWS_AS(HoloFunction::blaschke(3).derivative(2, z), ParameterError);
  CHECK_THROWS_AS(HoloFunction::lacunary(1.5, 6).derivative(2, z),
                  ParameterError);
}

TEST_CASE("boundary samples of the identity") {
  auto s = HoloFunction::monomial(1).boundary_samples(4);
  REQUIRE(s.size() == 4);
  CHECK(std::abs(s[0] - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(s[1] - cplx(0, 1)) < 1e-15);
  CHECK(std::abs(s[2] - cplx(-1, 0)) < 1e-15);
  CHECK(std::abs(s[3] - cplx(0, -1)) < 1e-15);
}

TEST_CASE("constant polynomial sampling") {
  for (const cplx& v : HoloFunction::taylor({1.0}).boundary_samples(8))
    CHECK(std::abs(v - 1.0) < 1e-15);
}

TEST_CASE("scaling wraps every variant") {
  HoloFunction f = HoloFunction::lacunary(1.5, 6).scaled_by(cplx(0.0, 2.0));
  HoloFunction g = HoloFunction::lacunary(1.5, 6);
  cplx z(0.3, 0.4);
  CHECK(std::abs(f(z) - cplx(0.0, 2.0) * g(z)) < 1e-14);
  CHECK(std::abs(f.derivative(1, z) - cplx(0.0, 2.0) * g.derivative(1, z)) <
        1e-14);
}

TEST_CASE("lacunary evaluation matches the direct sum") {
  HoloFunction g = HoloFunction::lacunary(1.3, 10);
  cplx z(0.5, -0.3);
  cplx want = 0.0;
  for (int n = 1; n <= 10; ++n)
    want += std::pow(z, std::ldexp(1.0, n)) / std::pow(n, 1.0 / 1.3);
  CHECK(std::abs(g(z) - want) < 1e-13);
  (void)kTwoPi;
}
