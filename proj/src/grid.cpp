#include "inls/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace inls {

double unit_sphere_measure(int N) {
  // 2 pi^{N/2} / Gamma(N/2); N = 1,2,3 -> 2, 2 pi, 4 pi.
  const double pi = std::numbers::pi;
  switch (N) {
    case 1: return 2.0;
    case 2: return 2.0 * pi;
    case 3: return 4.0 * pi;
    default: return 2.0 * std::pow(pi, 0.5 * N) / std::tgamma(0.5 * N);
  }
}

DomainPtr make_domain(int N, double b, double r_max, int n) {
  if (N < 1 || N > 3)
    throw std::invalid_argument("N must satisfy 1 <= N <= 3, got " + std::to_string(N));
  const double bmax = std::min(2.0, static_cast<double>(N));
  if (!(b >= 0.0 && b < bmax))
    throw std::invalid_argument("b must satisfy 0 <= b < min(2,N), got b = " + std::to_string(b));
  if (!(r_max > 0.0))
    throw std::invalid_argument("r_max must be positive, got " + std::to_string(r_max));
  if (n < 16)
    throw std::invalid_argument("n must be at least 16, got " + std::to_string(n));

  auto d = std::make_shared<Domain>();
  d->N = N;
  d->b = b;
  d->r_max = r_max;
  d->n = n;
  d->h = r_max / n;
  d->omega = unit_sphere_measure(N);
  d->sigma_b = (4.0 - 2.0 * b) / N + 2.0;

  d->r.resize(n);
  d->vol.resize(n);
  d->face.resize(n + 1);
  for (int j = 0; j < n; ++j) d->r[j] = (j + 0.5) * d->h;
  for (int j = 0; j <= n; ++j) d->face[j] = std::pow(j * d->h, N - 1);
  for (int j = 0; j < n; ++j) {
    const double a = j * d->h, c = (j + 1) * d->h;
    d->vol[j] = (std::pow(c, N) - std::pow(a, N)) / N;
  }

  // Cell moments of r^{N-1-b} about the node, used by integrate_singular.
  d->wm0.resize(n);
  d->wm1.resize(n);
  d->wm2.resize(n);
  const double e = N - 1 - b;
  for (int j = 0; j < n; ++j) {
    const double a = j * d->h, c = (j + 1) * d->h, rj = d->r[j];
    const double M0 = (std::pow(c, e + 1) - std::pow(a, e + 1)) / (e + 1);
    const double M1 = (std::pow(c, e + 2) - std::pow(a, e + 2)) / (e + 2);
    const double M2 = (std::pow(c, e + 3) - std::pow(a, e + 3)) / (e + 3);
    d->wm0[j] = M0;
    d->wm1[j] = M1 - rj * M0;
    d->wm2[j] = M2 - 2.0 * rj * M1 + rj * rj * M0;
  }
  return d;
}

double integrate_radial(const std::vector<double>& f, const Domain& d) {
  if (static_cast<int>(f.size()) != d.n)
    throw std::invalid_argument("integrate_radial: sample length " + std::to_string(f.size()) +
                                " does not match node count " + std::to_string(d.n));
  double s = 0.0;
  for (int j = 0; j < d.n; ++j) s += f[j] * std::pow(d.r[j], d.N - 1);
  return d.omega * d.h * s;
}

double integrate_cells(const std::vector<double>& f, const Domain& d) {
  if (static_cast<int>(f.size()) != d.n)
    throw std::invalid_argument("integrate_cells: sample length mismatch");
  double s = 0.0;
  for (int j = 0; j < d.n; ++j) s += f[j] * d.vol[j];
  return d.omega * s;
}

namespace {

double singular_sum(const std::vector<double>& g, const Domain& d, const std::vector<double>& m0,
                    const std::vector<double>& m1, const std::vector<double>& m2) {
  const int n = d.n;
  const double h = d.h;
  double s = 0.0;
  for (int j = 0; j < n; ++j) {
    const int jc = std::clamp(j, 1, n - 2);
    const double gm = g[jc - 1], g0 = g[jc], gp = g[jc + 1];
    const double d1 = (gp - gm) / (2.0 * h);
    const double d2 = (gp - 2.0 * g0 + gm) / (h * h);
    // Parabola about r_{jc}, re-centered on this cell's node when jc != j.
    const double off = d.r[j] - d.r[jc];
    const double c0 = g0 + d1 * off + 0.5 * d2 * off * off;
    const double c1 = d1 + d2 * off;
    s += c0 * m0[j] + c1 * m1[j] + 0.5 * d2 * m2[j];
  }
  return d.omega * s;
}

}  // namespace

double integrate_singular(const std::vector<double>& g, const Domain& d) {
  if (static_cast<int>(g.size()) != d.n)
    throw std::invalid_argument("integrate_singular: sample length mismatch");
  return singular_sum(g, d, d.wm0, d.wm1, d.wm2);
}

double integrate_singular(const std::vector<double>& g, const Domain& d, double bexp) {
  if (static_cast<int>(g.size()) != d.n)
    throw std::invalid_argument("integrate_singular: sample length mismatch");
  if (bexp == d.b) return singular_sum(g, d, d.wm0, d.wm1, d.wm2);
  if (!(bexp < d.N))
    throw std::invalid_argument("integrate_singular: exponent must satisfy bexp < N");
  const int n = d.n;
  std::vector<double> m0(n), m1(n), m2(n);
  const double e = d.N - 1 - bexp;
  for (int j = 0; j < n; ++j) {
    const double a = j * d.h, c = (j + 1) * d.h, rj = d.r[j];
    const double M0 = (std::pow(c, e + 1) - std::pow(a, e + 1)) / (e + 1);
    const double M1 = (std::pow(c, e + 2) - std::pow(a, e + 2)) / (e + 2);
    const double M2 = (std::pow(c, e + 3) - std::pow(a, e + 3)) / (e + 3);
    m0[j] = M0;
    m1[j] = M1 - rj * M0;
    m2[j] = M2 - 2.0 * rj * M1 + rj * rj * M0;
  }
  return singular_sum(g, d, m0, m1, m2);
}

}  // namespace inls
