#include "inls/coefficient.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace inls {

namespace {

// Quintic smoothstep complement on [0,1]: s(0)=1, s(1)=0, s' = s'' = 0 at
// both ends, strictly decreasing inside.
double smoothstep_down(double xi) { return 1.0 - xi * xi * xi * (10.0 - 15.0 * xi + 6.0 * xi * xi); }
double smoothstep_down_d(double xi) { return -30.0 * xi * xi * (1.0 - xi) * (1.0 - xi); }

struct Profile {
  CoefficientFamily family;
  CoefficientParams p;

  double value(double r) const {
    switch (family) {
      case CoefficientFamily::Constant:
        return p.k0;
      case CoefficientFamily::Gaussian:
        return p.k0 * std::exp(-(r / p.width) * (r / p.width));
      case CoefficientFamily::FlatTop: {
        if (r < p.l0) return p.k0;
        if (r >= 2.0 * p.l0) return 0.0;
        return p.k0 * smoothstep_down((r - p.l0) / p.l0);
      }
      case CoefficientFamily::Cusp: {
        // k0 - c0 r^{1+a} inside l0, then C^1 exponential relaxation of the
        // slope so k, k', r k' stay bounded.
        if (r < p.l0) return p.k0 - p.c0 * std::pow(r, 1.0 + p.alpha0);
        const double k_l0 = p.k0 - p.c0 * std::pow(p.l0, 1.0 + p.alpha0);
        const double dk_l0 = -p.c0 * (1.0 + p.alpha0) * std::pow(p.l0, p.alpha0);
        const double tau = p.l0;
        return k_l0 + dk_l0 * tau * (1.0 - std::exp(-(r - p.l0) / tau));
      }
      case CoefficientFamily::SignChanging:
        return p.k0 * std::cos(r) * std::exp(-r / p.width) + p.offset;
    }
    return 0.0;
  }

  double derivative(double r) const {
    switch (family) {
      case CoefficientFamily::Constant:
        return 0.0;
      case CoefficientFamily::Gaussian:
        return -2.0 * r / (p.width * p.width) * value(r);
      case CoefficientFamily::FlatTop: {
        if (r < p.l0 || r >= 2.0 * p.l0) return 0.0;
        return p.k0 * smoothstep_down_d((r - p.l0) / p.l0) / p.l0;
      }
      case CoefficientFamily::Cusp: {
        if (r < p.l0) return -p.c0 * (1.0 + p.alpha0) * std::pow(r, p.alpha0);
        const double dk_l0 = -p.c0 * (1.0 + p.alpha0) * std::pow(p.l0, p.alpha0);
        return dk_l0 * std::exp(-(r - p.l0) / p.l0);
      }
      case CoefficientFamily::SignChanging: {
        const double e = std::exp(-r / p.width);
        return p.k0 * e * (-std::sin(r) - std::cos(r) / p.width);
      }
    }
    return 0.0;
  }
};

}  // namespace

double Coefficient::value(double r) const {
  return Profile{family, params}.value(r);
}

double Coefficient::derivative(double r) const {
  return Profile{family, params}.derivative(r);
}

Coefficient make_coefficient(CoefficientFamily family, const CoefficientParams& p,
                             const DomainPtr& d) {
  if (!(p.k0 > 0.0)) throw std::invalid_argument("coefficient: k0 must be positive");
  if (family == CoefficientFamily::FlatTop || family == CoefficientFamily::Cusp) {
    if (!(p.l0 > 0.0)) throw std::invalid_argument("coefficient: l0 must be positive");
  }
  if (family == CoefficientFamily::Cusp) {
    if (!(p.alpha0 > 0.0 && p.alpha0 < 1.0))
      throw std::invalid_argument("coefficient: alpha0 must lie in (0,1)");
    if (!(p.c0 > 0.0)) throw std::invalid_argument("coefficient: c0 must be positive");
  }
  if ((family == CoefficientFamily::Gaussian || family == CoefficientFamily::SignChanging) &&
      !(p.width > 0.0))
    throw std::invalid_argument("coefficient: width must be positive");

  Coefficient c;
  c.dom = d;
  c.family = family;
  c.params = p;
  const Profile prof{family, p};
  c.k_at_zero = prof.value(0.0);
  if (!(c.k_at_zero > 0.0))
    throw std::invalid_argument("coefficient: k(0) must be positive (hypothesis on k)");

  c.k.resize(d->n);
  c.dk.resize(d->n);
  for (int j = 0; j < d->n; ++j) {
    c.k[j] = prof.value(d->r[j]);
    c.dk[j] = prof.derivative(d->r[j]);
    c.sup_k = std::max(c.sup_k, std::abs(c.k[j]));
    c.sup_dk = std::max(c.sup_dk, std::abs(c.dk[j]));
    c.sup_rdk = std::max(c.sup_rdk, std::abs(d->r[j] * c.dk[j]));
  }
  c.sup_k = std::max(c.sup_k, std::abs(c.k_at_zero));

  if (family == CoefficientFamily::FlatTop) {
    // Transition must be monotone decreasing; holds by construction of the
    // quintic smoothstep, asserted for safety.
    for (int j = 0; j < d->n; ++j) assert(c.dk[j] <= 0.0);
  }
  return c;
}

std::string family_name(CoefficientFamily f) {
  switch (f) {
    case CoefficientFamily::Constant: return "constant";
    case CoefficientFamily::Gaussian: return "gaussian";
    case CoefficientFamily::FlatTop: return "flat_top";
    case CoefficientFamily::Cusp: return "cusp";
    case CoefficientFamily::SignChanging: return "sign_changing";
  }
  return "?";
}

Coefficient make_coefficient(const std::string& name, const CoefficientParams& p,
                             const DomainPtr& d) {
  for (CoefficientFamily f : {CoefficientFamily::Constant, CoefficientFamily::Gaussian,
                              CoefficientFamily::FlatTop, CoefficientFamily::Cusp,
                              CoefficientFamily::SignChanging}) {
    if (family_name(f) == name) return make_coefficient(f, p, d);
  }
  throw std::invalid_argument("unknown coefficient family: " + name);
}

HypothesisReport check_hypotheses(const Coefficient& c) {
  HypothesisReport rep;
  const Domain& d = *c.dom;
  rep.k_at_zero = c.k_at_zero;
  rep.sup_k = c.sup_k;
  rep.sup_dk = c.sup_dk;
  rep.sup_rdk = c.sup_rdk;
  rep.k0_positive = c.k_at_zero > 0.0;
  rep.k_bounded = std::isfinite(c.sup_k);
  rep.dk_bounded = std::isfinite(c.sup_dk);
  rep.rdk_bounded = std::isfinite(c.sup_rdk);

  rep.sign_global = true;
  rep.sign_local = true;
  rep.flat_near_zero = true;
  rep.cusp_bound = true;
  const double l0 = c.params.l0;
  for (int j = 0; j < d.n; ++j) {
    const double rdk = d.r[j] * c.dk[j];
    if (rdk > 0.0) rep.sign_global = false;
    if (d.r[j] < l0) {
      if (!(rdk < 0.0)) rep.sign_local = false;
      if (c.dk[j] != 0.0) rep.flat_near_zero = false;
      if (!(rdk < -c.params.c0 * std::pow(d.r[j], 1.0 + c.params.alpha0))) rep.cusp_bound = false;
    }
  }
  return rep;
}

}  // namespace inls
