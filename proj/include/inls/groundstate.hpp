#pragma once

#include <string>
#include <vector>

#include "inls/field.hpp"
#include "inls/grid.hpp"

namespace inls {

/// Positive radial decaying solution of
///   Q'' + (N-1)/r Q' - Q + k r^{-b} Q^{1+(4-2b)/N} = 0
/// found by shooting on Q(0+) with bisection. For b > 0 the profile has an
/// r^{2-b} corner at the origin; the solver starts from a three-order series
/// expansion and integrates with a classical fourth-order stepper at step h/4,
/// so profile and derivative samples are accurate where grid stencils are not.
struct GroundState {
  DomainPtr dom;
  double k = 1.0;
  std::vector<double> q;   ///< Q(r_j), zero beyond the truncation radius
  std::vector<double> dq;  ///< Q'(r_j)
  int n_trunc = 0;         ///< nodes kept before zero padding

  double shoot_value = 0.0;  ///< Q(0+)
  double mass2 = 0.0;        ///< ||Q||_{L^2}^2
  double grad2 = 0.0;        ///< ||Q'||_{L^2}^2 (from integrator samples)
  double weighted = 0.0;     ///< \int |x|^{-b} Q^{sigma_b} dx
  double theta = 0.0;        ///< fitted exponential decay rate
  double theta_residual = 0.0;
  double residual = 0.0;     ///< sup | ODE residual | on the smooth window

  RadialField field() const;
  /// Q at an arbitrary radius: series below the first node, four-point
  /// Lagrange interpolation inside, zero beyond the truncation radius.
  double value_at(double r) const;
  double derivative_at(double r) const;
};

/// Shooting + bisection solve. tol is the requested overall accuracy: the
/// bisection bracket is driven well below it and the measured ODE residual
/// must stay below 100*tol, otherwise a resolution_error is raised.
/// No bracket in [1e-3, 1e3] raises a runtime_error ("no ground state bracket").
GroundState solve_ground_state(double k, const DomainPtr& d, double tol = 1e-7);

struct PohozaevResiduals {
  double res1;  ///< | ||Q'||^2 - N/(2-b) ||Q||^2 | / ||Q||^2
  double res2;  ///< | k W - (1 + N/(2-b)) ||Q||^2 | / ||Q||^2
  double res3;  ///< | E_k[Q] | / ||Q||^2
};
PohozaevResiduals pohozaev_residuals(const GroundState& g);

/// Least-squares decay rate of -log Q on the tail window; also refreshes
/// g.theta / g.theta_residual when called through solve_ground_state.
double decay_rate(const GroundState& g, double* fit_residual = nullptr);

/// Disk cache, one CSV per (N, b, k, n, r_max) with columns r, Q. A cache hit
/// is accepted only if the first Pohozaev residual recomputed from the file
/// stays under 1e-4; otherwise the state is re-solved and the file rewritten.
class GroundStateCache {
 public:
  explicit GroundStateCache(std::string dir) : dir_(std::move(dir)) {}
  GroundState solve(double k, const DomainPtr& d, double tol = 1e-7) const;
  std::string entry_path(double k, const Domain& d) const;

 private:
  std::string dir_;
};

/// Cache directory resolution: explicit argument, else $INLS_CACHE_DIR,
/// else empty (caching disabled).
std::string default_cache_dir();

}  // namespace inls
