#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "inls/grid.hpp"

namespace inls {

using cplx = std::complex<double>;

/// Complex radial profile sampled at the domain nodes. Immutable by
/// convention after construction; all operations return new fields.
struct RadialField {
  DomainPtr dom;
  std::vector<cplx> v;

  RadialField() = default;
  explicit RadialField(DomainPtr d) : dom(std::move(d)), v(dom->n, cplx{0.0, 0.0}) {}
  RadialField(DomainPtr d, std::vector<cplx> values);

  int size() const { return static_cast<int>(v.size()); }
  /// True if every sample is finite. NaN/Inf signals under-resolution upstream.
  bool finite() const;
  void require_finite(const char* where) const;
};

/// Sample a scalar function of r onto a field.
RadialField make_field(const DomainPtr& d, const std::function<cplx(double)>& f);
RadialField make_field_real(const DomainPtr& d, const std::function<double(double)>& f);

/// Radial derivative by second-order differences: centered in the interior,
/// one-sided three-point at both ends.
std::vector<cplx> radial_derivative(const RadialField& u);

/// L^2 norm (not squared) and its square.
double mass_squared(const RadialField& u);
double mass_norm(const RadialField& u);

/// H^1 seminorm via the finite-difference radial derivative.
double grad_squared(const RadialField& u);
double grad_norm(const RadialField& u);

/// Weighted norm ||u||_{L^{sigma_b}_b} = (\int |x|^{-b} |u|^{sigma_b} dx)^{1/sigma_b}
/// and the integral itself (the sigma_b-th power).
double weighted_power(const RadialField& u);
double weighted_norm(const RadialField& u);

/// \int_{|x| <= rho} |u|^2 dx.
double ball_mass(const RadialField& u, double rho);

/// |u(r_j)|^2 (helper for quadratures).
std::vector<double> abs2(const RadialField& u);

}  // namespace inls
