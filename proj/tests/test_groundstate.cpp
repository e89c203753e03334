#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "inls/errors.hpp"
#include "inls/groundstate.hpp"
#include "oracles.hpp"

using namespace inls;

TEST_CASE("quintic soliton oracle: N=1, b=0, k=1") {
  auto d = make_domain(1, 0.0, 40.0, 4096);
  auto g = solve_ground_state(1.0, d, 1e-7);

  CHECK(g.shoot_value == doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-9));

  double sup = 0.0;
  for (int j = 0; j < g.n_trunc; ++j)
    sup = std::max(sup, std::abs(g.q[j] - oracles::soliton_1d(d->r[j])));
  CHECK(sup < 1e-7);

  CHECK(g.mass2 == doctest::Approx(oracles::soliton_1d_mass2()).epsilon(1e-8));

  // Derivative samples against the closed form.
  double dsup = 0.0;
  for (int j = 0; j < g.n_trunc; ++j) {
    const double sech = 1.0 / std::cosh(2.0 * d->r[j]);
    const double exact = -std::pow(3.0, 0.25) * std::sqrt(sech) * std::tanh(2.0 * d->r[j]);
    dsup = std::max(dsup, std::abs(g.dq[j] - exact));
  }
  CHECK(dsup < 1e-6);
}

TEST_CASE("pohozaev identities across the (N, b) matrix") {
  // grad2/mass2 = N/(2-b); k W = (1 + N/(2-b)) mass2; E_k[Q] = 0.
  for (auto [N, b] : {std::pair<int, double>{1, 0.0}, {1, 0.3}, {1, 0.5},
                      {2, 0.5}, {2, 1.0}, {3, 0.5}, {3, 1.0}}) {
    CAPTURE(N);
    CAPTURE(b);
    auto d = make_domain(N, b, 40.0, 4096);
    auto g = solve_ground_state(1.0, d, 1e-5);
    const auto res = pohozaev_residuals(g);
    CHECK(res.res1 < 2e-5);
    CHECK(res.res2 < 2e-5);
    CHECK(res.res3 < 2e-5);
    CHECK(g.grad2 / g.mass2 == doctest::Approx(N / (2.0 - b)).epsilon(1e-4));
  }
}

TEST_CASE("scaling relation Q_k = k^{-N/(4-2b)} Q_1, independently solved") {
  for (auto [N, b] : {std::pair<int, double>{1, 0.0}, {2, 0.5}}) {
    CAPTURE(N);
    CAPTURE(b);
    auto d = make_domain(N, b, 40.0, 4096);
    auto g1 = solve_ground_state(1.0, d, 1e-7);
    auto g4 = solve_ground_state(4.0, d, 1e-7);
    const double scale = std::pow(4.0, -N / (4.0 - 2.0 * b));
    double sup = 0.0;
    for (int j = 0; j < d->n; ++j) sup = std::max(sup, std::abs(g4.q[j] - scale * g1.q[j]));
    CHECK(sup < 1e-6);
    // Decay rate is invariant under the coupling rescale (the fit window
    // shifts slightly with the amplitude, so only near-equality holds).
    CHECK(g4.theta == doctest::Approx(g1.theta).epsilon(5e-3));
  }
}

TEST_CASE("profile is strictly decreasing before truncation") {
  auto d = make_domain(2, 0.5, 40.0, 2048);
  auto g = solve_ground_state(1.0, d, 1e-5);
  for (int j = 1; j < g.n_trunc; ++j) CHECK(g.q[j] < g.q[j - 1]);
  CHECK(g.q[g.n_trunc - 1] >= 0.0);
  for (int j = g.n_trunc; j < d->n; ++j) CHECK(g.q[j] == 0.0);
}

TEST_CASE("grid refinement: interpolated sup difference shrinks by >= 3x") {
  // Coarse grids, so the comparison sits above the shooting noise floor.
  auto probe = [](int n) { return solve_ground_state(1.0, make_domain(2, 0.5, 30.0, n), 1e-1); };
  auto coarse = probe(128);
  auto mid = probe(256);
  auto fine = probe(1024);
  double d1 = 0.0, d2 = 0.0;
  for (int j = 0; j < coarse.dom->n; ++j) {
    const double r = coarse.dom->r[j];
    if (fine.value_at(r) < 1e-6) continue;
    d1 = std::max(d1, std::abs(coarse.value_at(r) - fine.value_at(r)));
    d2 = std::max(d2, std::abs(mid.value_at(r) - fine.value_at(r)));
  }
  CHECK(d1 / d2 >= 3.0);
}

TEST_CASE("decay rates: theta ~ 1 for k-independent tails") {
  auto d1 = make_domain(1, 0.0, 40.0, 2048);
  auto g1 = solve_ground_state(1.0, d1, 1e-5);
  CHECK(g1.theta == doctest::Approx(1.0).epsilon(0.02));
  CHECK(g1.theta_residual < 0.05);

  // Q'' ~ Q at infinity forces the unit rate in every dimension; for N = 3
  // the r^{-(N-1)/2} prefactor biases the plain log-slope upward a little.
  auto d3 = make_domain(3, 0.5, 40.0, 2048);
  auto g3 = solve_ground_state(1.0, d3, 1e-5);
  CHECK(g3.theta == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("petviashvili cross-check oracle, N=2 b=0.5") {
  auto d = make_domain(2, 0.5, 30.0, 2048);
  auto g = solve_ground_state(1.0, d, 1e-5);
  auto u = oracles::petviashvili(d, 1.0, 800);
  double sup = 0.0;
  for (int j = 0; j < d->n; ++j) sup = std::max(sup, std::abs(u[j] - g.q[j]));
  // The fixed point carries the O(h^2) error of its own discretization.
  CHECK(sup / g.shoot_value < 1e-2);

  std::vector<double> u2(d->n);
  for (int j = 0; j < d->n; ++j) u2[j] = u[j] * u[j];
  CHECK(integrate_singular(u2, *d, 0.0) == doctest::Approx(g.mass2).epsilon(1e-3));
}

TEST_CASE("value_at interpolation: series below the first node, zero beyond the tail") {
  auto d = make_domain(2, 1.0, 40.0, 2048);
  auto g = solve_ground_state(1.0, d, 1e-5);
  CHECK(g.value_at(0.0) == doctest::Approx(g.shoot_value).epsilon(1e-10));
  CHECK(g.value_at(d->r[7]) == doctest::Approx(g.q[7]).epsilon(1e-12));
  const double mid = 0.5 * (d->r[100] + d->r[101]);
  CHECK(g.value_at(mid) == doctest::Approx(0.5 * (g.q[100] + g.q[101])).epsilon(1e-5));
  CHECK(g.value_at(39.9) == 0.0);
  CHECK(g.value_at(400.0) == 0.0);
  // For b = 1 the profile leaves the origin with a corner: Q'(0+) < 0.
  CHECK(g.derivative_at(1e-9) < 0.0);
}

TEST_CASE("bracket failure reported for hopeless couplings") {
  auto d = make_domain(1, 0.0, 40.0, 1024);
  CHECK_THROWS_WITH_AS(solve_ground_state(1e12, d, 1e-5), doctest::Contains("no ground state"),
                       std::runtime_error);
}

TEST_CASE("invalid arguments") {
  auto d = make_domain(1, 0.0, 40.0, 1024);
  CHECK_THROWS_AS(solve_ground_state(-1.0, d, 1e-5), std::invalid_argument);
  CHECK_THROWS_AS(solve_ground_state(1.0, d, -1e-5), std::invalid_argument);
}

TEST_CASE("disk cache: hit verified by Pohozaev residual, corrupt entries re-solved") {
  namespace fs = std::filesystem;
  const std::string dir = (fs::temp_directory_path() / "inls_gs_cache_test").string();
  fs::remove_all(dir);
  GroundStateCache cache(dir);

  auto d = make_domain(1, 0.3, 40.0, 2048);
  auto g1 = cache.solve(1.0, d, 1e-5);
  const std::string path = cache.entry_path(1.0, *d);
  CHECK(fs::exists(path));

  // Reload and compare against the fresh solve.
  auto g2 = cache.solve(1.0, d, 1e-5);
  CHECK(g2.mass2 == doctest::Approx(g1.mass2).epsilon(1e-10));
  CHECK(g2.shoot_value == doctest::Approx(g1.shoot_value).epsilon(1e-8));
  const auto res = pohozaev_residuals(g2);
  CHECK(res.res1 < 1e-4);

  // Corrupt the cached profile; the loader must notice and re-solve.
  {
    std::ofstream out(path);
    out << "r,Q\n";
    for (int j = 0; j < d->n; ++j) out << d->r[j] << "," << std::exp(-d->r[j]) << "\n";
  }
  auto g3 = cache.solve(1.0, d, 1e-5);
  CHECK(g3.mass2 == doctest::Approx(g1.mass2).epsilon(1e-8));
  fs::remove_all(dir);
}
