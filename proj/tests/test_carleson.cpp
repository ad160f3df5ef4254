#include <doctest.h>

#include <cmath>
#include <limits>

#include "rcm/carleson.hpp"

using namespace rcm;

namespace {
QuadConfig cfg;
}

TEST_CASE("geometric constant: Lebesgue, atoms, mixtures") {
  CHECK(geometric_constant(corpus::lebesgue(), 8) ==
        doctest::Approx(1.0).epsilon(1e-12));
  Measure atom({}, {{0.3, 1.0}}, {});
  CHECK(geometric_constant(atom, 1) == doctest::Approx(0.0));
  Measure mix({}, {{0.3, 1.0}}, BoundaryDensity{4, {0.5, 0.5, 0.5, 0.5}});
  CHECK(geometric_constant(mix, 6) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("direct constant: Lebesgue, empty, deep atoms") {
  CHECK(direct_constant(corpus::lebesgue(), 6) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(direct_constant(Measure({}, {}, {}), 6) == doctest::Approx(0.0));
  // Atom at radius 1 - 2^{-5}: every window S_I with m(I) >= 2^{-5}
  // whose arc covers the angle picks it up, so the sup is >= w 2^5.
  Measure deep({{DiscPoint::polar(1.0 - 1.0 / 32.0, 0.01), 0.25}}, {}, {});
  CHECK(direct_constant(deep, 8) >= 0.25 * 32.0 - 1e-9);
}

TEST_CASE("kernel test: Lebesgue is the exact fixed point") {
  for (int depth : {4, 8}) {
    auto scan = kernel_test_constant(corpus::lebesgue(), 2.0, 1, depth, cfg);
    CHECK(scan.constant == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("kernel test: atom at the origin decays like 1 - |lambda|^2") {
  Measure atom({{DiscPoint(0.0, 0.0), 0.4}}, {}, {});
  const int depth = 6;
  auto scan = kernel_test_constant(atom, 2.0, 1, depth, cfg);
  double rho = 1.0 - std::ldexp(1.0, -depth);
  CHECK(scan.constant == doctest::Approx(0.4 * (1.0 - rho * rho)).epsilon(1e-6));
  CHECK(std::abs(scan.arg_lambda) == doctest::Approx(rho).epsilon(1e-12));
}

TEST_CASE("kernel test rejects pl <= 1 and bad depth") {
  CHECK_THROWS_AS(kernel_test_constant(corpus::lebesgue(), 0.5, 2, 4, cfg),
                  ParameterError);
  CHECK_THROWS_AS(kernel_test_constant(corpus::lebesgue(), 2.0, 1, 0, cfg),
                  ParameterError);
  CHECK_THROWS_AS(kernel_test_constant(corpus::lebesgue(), 2.0, 1, 21, cfg),
                  ParameterError);
}

TEST_CASE("all three constants scale linearly with the measure") {
  Measure mu = corpus::mixed();
  Measure nu = mu.scaled(2.5);
  CHECK(geometric_constant(nu, 6) ==
        doctest::Approx(2.5 * geometric_constant(mu, 6)).epsilon(1e-12));
  CHECK(direct_constant(nu, 6) ==
        doctest::Approx(2.5 * direct_constant(mu, 6)).epsilon(1e-12));
  QuadConfig small = cfg.with_circle(1024);
  CHECK(kernel_test_constant(nu, 2.0, 1, 5, small).constant ==
        doctest::Approx(2.5 *
                        kernel_test_constant(mu, 2.0, 1, 5, small).constant)
            .epsilon(1e-12));
}

TEST_CASE("geometric constant is invariant under grid rotation") {
  BoundaryDensity d{8, {1, 2, 3, 4, 5, 6, 7, 8}};
  BoundaryDensity rot{8, {8, 1, 2, 3, 4, 5, 6, 7}};
  CHECK(geometric_constant(Measure({}, {}, d), 3) ==
        doctest::Approx(geometric_constant(Measure({}, {}, rot), 3))
            .epsilon(1e-12));
}

TEST_CASE("equivalence report on the reference measures") {
  QuadConfig small = cfg.with_circle(1024);
  auto rep = equivalence_report(corpus::lebesgue(), 2.0, 1, 8, 6, small);
  CHECK(rep.verdict == Verdict::consistent);
  CHECK(rep.geometric_constant == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.kernel_constant == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rep.tau_geometric == doctest::Approx(0.01));
  CHECK(rep.tau_kernel == doctest::Approx(0.01).epsilon(1e-10));
  CHECK(rep.p == 2.0);
  CHECK(rep.l == 1);

  auto mixed = equivalence_report(corpus::mixed(), 2.0, 1, 8, 6, small);
  CHECK(mixed.verdict != Verdict::inconsistent);
}

TEST_CASE("phi_h at the origin matches the closed form") {
  for (double h : {0.5, 0.25, 0.1}) {
    double got = phi_h(DiscPoint(0.0, 0.0), Arc::full(), h, 2.0, cfg);
    CHECK(got == doctest::Approx(M_PI * h * (1.0 - 2.0 * h / 3.0))
                     .epsilon(1e-8));
  }
  CHECK_THROWS_AS(phi_h(DiscPoint(0.0, 0.0), Arc::full(), 0.1, 1.0, cfg),
                  ParameterError);
  CHECK_THROWS_AS(phi_h(DiscPoint(0.0, 0.0), Arc::full(), 0.0, 2.0, cfg),
                  ParameterError);
}

TEST_CASE("balayage decay for a single interior atom") {
  Measure atom({{DiscPoint(0.5, 0.0), 1.0}}, {}, {});
  HoloFunction one = HoloFunction::taylor({1.0});
  auto rows = balayage_decay(atom, one, 1.0, {0, 1, 10}, cfg);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].value == doctest::Approx(1.0));
  CHECK(rows[1].value == doctest::Approx(0.5));
  CHECK(rows[2].value == doctest::Approx(std::pow(0.5, 10.0)).epsilon(1e-12));
  for (const auto& row : rows) CHECK(row.value <= row.envelope + 1e-12);
  CHECK(rows[2].value < rows[1].value);
}

TEST_CASE("balayage of a purely boundary measure is zero") {
  auto rows = balayage_decay(corpus::lebesgue(), HoloFunction::monomial(1), 2.0,
                             {0, 3}, cfg);
  for (const auto& row : rows) {
    CHECK(row.value == doctest::Approx(0.0));
    CHECK(row.envelope == doctest::Approx(0.0));
  }
}

TEST_CASE("beta test: flat density passes with constant 1") {
  BoundaryDensity beta{16, std::vector<double>(16, 1.0)};
  auto res = beta_rcm_test(beta, 1.0, 2.0);
  CHECK(res.decision);
  CHECK(res.integral == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(res.holder_constant == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(res.refinement_gap == doctest::Approx(0.0));
}

TEST_CASE("beta test: a vanishing cell forces divergence") {
  BoundaryDensity beta{4, {1.0, 0.0, 1.0, 1.0}};
  auto res = beta_rcm_test(beta, 1.0, 2.0);
  CHECK_FALSE(res.decision);
  CHECK(std::isinf(res.integral));
}

TEST_CASE("beta test rejects p >= q") {
  BoundaryDensity beta{4, {1, 1, 1, 1}};
  CHECK_THROWS_AS(beta_rcm_test(beta, 2.0, 2.0), ParameterError);
  CHECK_THROWS_AS(beta_rcm_test(beta, 2.0, 1.0), ParameterError);
}

TEST_CASE("q < p certificate is exact arithmetic") {
  auto cert = q_less_p_certificate(2.0, 1.0, {1e-2, 1e-4});
  REQUIRE(cert.rows.size() == 2);
  CHECK(cert.rows[0].lhs == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(cert.rows[1].lhs == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(cert.rows[1].lhs > cert.rows[0].lhs);
  CHECK_THROWS_AS(q_less_p_certificate(2.0, 2.0, {0.5}), ParameterError);
  CHECK_THROWS_AS(q_less_p_certificate(2.0, 1.0, {0.0}), ParameterError);
}

TEST_CASE("bloch witness against the zero measure") {
  Measure zero({}, {}, {});
  QuadConfig small = cfg.with_circle(1024);
  auto row = bloch_nonexistence_witness(zero, 64, 0.3, small);
  CHECK(row.lhs > 0.0);
  CHECK(row.interior_term == doctest::Approx(0.0));
  CHECK(row.boundary_term == doctest::Approx(0.0));
  CHECK(row.interior_bound == doctest::Approx(0.0));
  CHECK_THROWS_AS(bloch_nonexistence_witness(zero, 3, 0.0, small),
                  ParameterError);
}

TEST_CASE("bloch certificate rows grow with n against atoms") {
  Measure mu({{DiscPoint::polar(0.5, 0.1), 1.0}}, {}, {});
  QuadConfig small = cfg.with_circle(1024);
  auto cert = bloch_certificate(mu, {16, 64, 256}, 0.3, small);
  REQUIRE(cert.rows.size() == 3);
  for (const auto& row : cert.rows)
    CHECK(row.interior_term <= row.interior_bound + 1e-12);
  CHECK(cert.rows[2].lhs > cert.rows[0].lhs);
}

TEST_CASE("triebel growth: closed form and scan agree") {
  CHECK(triebel_s_growth_closed_form(1, 0.5) == doctest::Approx(1.0));
  CHECK(triebel_s_growth_closed_form(2, 0.0) == doctest::Approx(0.5));
  QuadConfig small = cfg.with_radial(20, 16);
  for (long n : {2L, 50L, 1000L})
    for (double s : {0.0, 0.5}) {
      auto pair = triebel_s_growth(n, s, small);
      CHECK(pair.numeric ==
            doctest::Approx(pair.closed_form).epsilon(1e-8));
    }
  CHECK_THROWS_AS(triebel_s_growth(0, 0.5, small), ParameterError);
  CHECK_THROWS_AS(triebel_s_growth(2, 1.0, small), ParameterError);
}

TEST_CASE("kernel window smoke stays positive and finite") {
  QuadConfig small = cfg.with_circle(256).with_radial(8, 8);
  double v = kernel_window_smoke(corpus::lebesgue(), 2.0, 1, Arc(0.0, 0.25),
                                 0.125, small);
  CHECK(v > 0.0);
  CHECK(std::isfinite(v));
}
