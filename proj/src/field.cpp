#include "inls/field.hpp"

#include <cmath>
#include <stdexcept>

#include "inls/errors.hpp"

namespace inls {

RadialField::RadialField(DomainPtr d, std::vector<cplx> values)
    : dom(std::move(d)), v(std::move(values)) {
  if (static_cast<int>(v.size()) != dom->n)
    throw std::invalid_argument("RadialField: value count does not match domain node count");
}

bool RadialField::finite() const {
  for (const cplx& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

void RadialField::require_finite(const char* where) const {
  if (!finite())
    throw resolution_error(std::string(where) + ": non-finite field sample (under-resolution)");
}

RadialField make_field(const DomainPtr& d, const std::function<cplx(double)>& f) {
  RadialField u(d);
  for (int j = 0; j < d->n; ++j) u.v[j] = f(d->r[j]);
  return u;
}

RadialField make_field_real(const DomainPtr& d, const std::function<double(double)>& f) {
  RadialField u(d);
  for (int j = 0; j < d->n; ++j) u.v[j] = cplx{f(d->r[j]), 0.0};
  return u;
}

std::vector<cplx> radial_derivative(const RadialField& u) {
  const int n = u.size();
  const double h = u.dom->h;
  std::vector<cplx> d(n);
  if (n < 3) throw std::invalid_argument("radial_derivative: need at least 3 nodes");
  d[0] = (-3.0 * u.v[0] + 4.0 * u.v[1] - u.v[2]) / (2.0 * h);
  for (int j = 1; j < n - 1; ++j) d[j] = (u.v[j + 1] - u.v[j - 1]) / (2.0 * h);
  d[n - 1] = (3.0 * u.v[n - 1] - 4.0 * u.v[n - 2] + u.v[n - 3]) / (2.0 * h);
  return d;
}

std::vector<double> abs2(const RadialField& u) {
  std::vector<double> a(u.size());
  for (int j = 0; j < u.size(); ++j) a[j] = std::norm(u.v[j]);
  return a;
}

double mass_squared(const RadialField& u) {
  u.require_finite("mass_norm");
  return integrate_cells(abs2(u), *u.dom);
}

double mass_norm(const RadialField& u) { return std::sqrt(mass_squared(u)); }

double grad_squared(const RadialField& u) {
  u.require_finite("grad_norm");
  const auto d = radial_derivative(u);
  std::vector<double> g(u.size());
  for (int j = 0; j < u.size(); ++j) g[j] = std::norm(d[j]);
  return integrate_cells(g, *u.dom);
}

double grad_norm(const RadialField& u) { return std::sqrt(grad_squared(u)); }

double weighted_power(const RadialField& u) {
  u.require_finite("weighted_norm");
  const double p = u.dom->sigma_b;
  std::vector<double> g(u.size());
  for (int j = 0; j < u.size(); ++j) g[j] = std::pow(std::norm(u.v[j]), 0.5 * p);
  return integrate_singular(g, *u.dom);
}

double weighted_norm(const RadialField& u) {
  return std::pow(weighted_power(u), 1.0 / u.dom->sigma_b);
}

double ball_mass(const RadialField& u, double rho) {
  const Domain& d = *u.dom;
  double s = 0.0;
  for (int j = 0; j < d.n && d.r[j] <= rho; ++j) s += std::norm(u.v[j]) * d.vol[j];
  return d.omega * s;
}

}  // namespace inls
