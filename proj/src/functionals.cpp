#include "inls/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace inls {

EnergyReport energy(const RadialField& u, const Coefficient& c) {
  if (u.dom.get() != c.dom.get())
    throw std::invalid_argument("energy: field and coefficient live on different domains");
  u.require_finite("energy");
  const Domain& d = *u.dom;

  EnergyReport rep;
  rep.kinetic = 0.5 * grad_squared(u);
  std::vector<double> g(d.n);
  for (int j = 0; j < d.n; ++j) g[j] = c.k[j] * std::pow(std::norm(u.v[j]), 0.5 * d.sigma_b);
  rep.potential = integrate_singular(g, d) / d.sigma_b;
  rep.total = rep.kinetic - rep.potential;
  rep.frozen_total = rep.kinetic - c.k_at_zero / d.sigma_b * weighted_power(u);
  return rep;
}

double energy_const(const RadialField& u, double k) {
  const Domain& d = *u.dom;
  return 0.5 * grad_squared(u) - k / d.sigma_b * weighted_power(u);
}

double gn_constant(const GroundState& g) {
  const Domain& d = *g.dom;
  return d.sigma_b / (2.0 * g.k * std::pow(g.mass2, 0.5 * d.power_nl()));
}

double gn_ratio(const RadialField& f, const GroundState& g) {
  const Domain& d = *f.dom;
  const double m2 = mass_squared(f);
  if (m2 == 0.0) throw std::invalid_argument("gn_ratio: zero field (ratio undefined)");
  const double denom = gn_constant(g) * grad_squared(f) * std::pow(m2, 0.5 * d.power_nl());
  return weighted_power(f) / denom;
}

double gn_ratio_extremizer(const GroundState& g) {
  // Substituting the sharp constant: ratio = 2 k W / (sigma_b ||Q'||^2).
  return 2.0 * g.k * g.weighted / (g.dom->sigma_b * g.grad2);
}

EnergyBound energy_lower_bound_check(const RadialField& u, const GroundState& g) {
  const Domain& d = *u.dom;
  EnergyBound eb;
  const double gs = grad_squared(u);
  eb.lhs = 0.5 * gs - g.k / d.sigma_b * weighted_power(u);
  eb.rhs = 0.5 * gs * (1.0 - std::pow(mass_squared(u) / g.mass2, 0.5 * d.power_nl()));
  return eb;
}

LocalizedGNTerms localized_gn_terms(const RadialField& f, double A) {
  const Domain& d = *f.dom;
  if (!(A > 0.0)) throw std::invalid_argument("localized_gn_terms: A must be positive");
  const auto du = radial_derivative(f);

  LocalizedGNTerms t{0.0, 0.0, 0.0};
  double mass_outer = 0.0, mass_shell = 0.0, grad_outer = 0.0, lhs = 0.0;
  for (int j = 0; j < d.n; ++j) {
    const double r = d.r[j];
    const double a2 = std::norm(f.v[j]);
    if (r >= 0.5 * A) {
      mass_outer += a2 * d.vol[j];
      grad_outer += std::norm(du[j]) * d.vol[j];
      if (r <= A) mass_shell += a2 * d.vol[j];
    }
    if (r >= A)
      lhs += std::pow(a2, 0.5 * d.sigma_b) * std::pow(r, -d.b) * d.vol[j];
  }
  t.lhs = d.omega * lhs;
  t.mass_pow = std::pow(d.omega * mass_outer, (2.0 - d.b) / d.N);
  t.bracket = d.omega * (mass_shell + grad_outer);
  return t;
}

}  // namespace inls
