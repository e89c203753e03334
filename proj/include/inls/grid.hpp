#pragma once

#include <memory>
#include <vector>

namespace inls {

/// Radial computational domain on [0, r_max] with half-shifted midpoint
/// nodes r_j = (j + 1/2) h, h = r_max / n. The half shift keeps every node
/// strictly positive, so the singular weight r^{-b} is finite everywhere
/// it is sampled.
struct Domain {
  int N = 1;         ///< spatial dimension, 1 <= N <= 3
  double b = 0.0;    ///< singularity exponent, 0 <= b < min(2, N)
  double r_max = 0.0;
  int n = 0;
  double h = 0.0;
  double omega = 0.0;    ///< surface measure of the unit sphere, 2 pi^{N/2}/Gamma(N/2)
  double sigma_b = 0.0;  ///< (4 - 2b)/N + 2

  std::vector<double> r;     ///< nodes r_j
  std::vector<double> vol;   ///< exact cell measures \int_{jh}^{(j+1)h} r^{N-1} dr
  std::vector<double> face;  ///< face weights (jh)^{N-1}, j = 0..n

  // Precomputed moments of r^{N-1-b} about the node, per cell, for the
  // weighted product quadrature (see integrate_singular).
  std::vector<double> wm0, wm1, wm2;

  double node(int j) const { return (j + 0.5) * h; }
  /// Nonlinearity power (4 - 2b)/N = sigma_b - 2.
  double power_nl() const { return (4.0 - 2.0 * b) / N; }
  /// Holder conjugate of sigma_b.
  double sigma_b_conjugate() const { return sigma_b / (sigma_b - 1.0); }
};

using DomainPtr = std::shared_ptr<const Domain>;

/// Build a domain. Preconditions: 1 <= N <= 3, 0 <= b < min(2, N) (strict),
/// r_max > 0, n >= 16. Violations raise std::invalid_argument naming the bound.
DomainPtr make_domain(int N, double b, double r_max, int n);

double unit_sphere_measure(int N);

/// Midpoint rule for \int_{R^N} f dx with radial f sampled at the nodes:
/// omega * sum_j f(r_j) r_j^{N-1} h. Second order on smooth integrands.
double integrate_radial(const std::vector<double>& f, const Domain& d);

/// \int_{R^N} f dx with the exact cell measures \int r^{N-1} dr instead of
/// the midpoint weight. Identical to integrate_radial for N <= 2; for N = 3
/// it is the measure in which the Crank-Nicolson step is exactly unitary.
double integrate_cells(const std::vector<double>& f, const Domain& d);

/// \int_{R^N} |x|^{-bexp} g dx for g sampled at the nodes. Each cell uses the
/// quadratic through the three nearest nodes integrated against the exact
/// moments of r^{N-1-bexp}; the singular factor never degrades the order.
/// Plain midpoint loses O(h^{N-b}) on the first cell, which is far above the
/// Pohozaev/GN tolerances this code has to meet.
double integrate_singular(const std::vector<double>& g, const Domain& d, double bexp);

/// integrate_singular specialized to bexp = d.b (uses precomputed moments).
double integrate_singular(const std::vector<double>& g, const Domain& d);

}  // namespace inls
