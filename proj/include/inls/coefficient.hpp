#pragma once

#include <string>
#include <vector>

#include "inls/grid.hpp"

namespace inls {

enum class CoefficientFamily { Constant, Gaussian, FlatTop, Cusp, SignChanging };

struct CoefficientParams {
  double k0 = 1.0;      ///< k(0) scale; must be positive after offsets
  double width = 1.0;   ///< gaussian / sign_changing decay scale
  double l0 = 1.0;      ///< plateau radius (flat_top) or cusp region radius
  double c0 = 0.5;      ///< cusp strength
  double alpha0 = 0.5;  ///< cusp exponent, in (0,1)
  double offset = 0.5;  ///< sign_changing baseline
};

/// Radial coefficient k(r) sampled with its derivative on a domain, plus the
/// bounds the hypotheses are stated in.
struct Coefficient {
  DomainPtr dom;
  CoefficientFamily family = CoefficientFamily::Constant;
  CoefficientParams params;

  std::vector<double> k;   ///< k(r_j)
  std::vector<double> dk;  ///< k'(r_j)
  double k_at_zero = 0.0;  ///< exact k(0)
  double sup_k = 0.0;      ///< sup |k|
  double sup_dk = 0.0;     ///< sup |k'|
  double sup_rdk = 0.0;    ///< sup |r k'|

  double value(double r) const;
  double derivative(double r) const;
};

Coefficient make_coefficient(CoefficientFamily family, const CoefficientParams& p,
                             const DomainPtr& d);
Coefficient make_coefficient(const std::string& family_name, const CoefficientParams& p,
                             const DomainPtr& d);

std::string family_name(CoefficientFamily f);

/// Pure report on the standing hypotheses and the sign conditions used by the
/// blow-up and minimal-mass results.
struct HypothesisReport {
  bool k0_positive = false;       ///< k(0) > 0
  bool k_bounded = false;         ///< sup |k| finite
  bool dk_bounded = false;        ///< sup |k'| finite
  bool rdk_bounded = false;       ///< sup |r k'| finite
  bool sign_global = false;       ///< r k'(r) <= 0 on the whole grid
  bool sign_local = false;        ///< r k'(r) < 0 on (0, l0)
  bool flat_near_zero = false;    ///< k'(r) = 0 on (0, l0)
  bool cusp_bound = false;        ///< r k'(r) < -c0 r^{1+alpha0} on (0, l0)
  double sup_k = 0.0, sup_dk = 0.0, sup_rdk = 0.0, k_at_zero = 0.0;
};

HypothesisReport check_hypotheses(const Coefficient& c);

}  // namespace inls
