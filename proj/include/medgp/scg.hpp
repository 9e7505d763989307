#pragma once

#include <Eigen/Core>
#include <functional>

namespace medgp {

// Moller-style scaled conjugate gradient minimizer.  The objective may
// return +inf (or NaN) for infeasible points; such steps are rejected and
// the trust scaling grows, so no line search or feasibility projection is
// needed by callers.
struct ScgOptions {
  int max_iters = 50;
  double grad_tol = 1e-4;   // stop when the gradient norm drops below this
  double sigma0 = 1e-4;     // finite-difference step for curvature probes
  double lambda0 = 1e-6;    // initial model-trust scaling
};

struct ScgResult {
  Eigen::VectorXd x;
  double f = 0.0;
  int iters = 0;
  bool converged = false;  // gradient-norm stop reached
};

ScgResult scg_minimize(const Eigen::VectorXd& x0,
                       const std::function<double(const Eigen::VectorXd&)>& value,
                       const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& gradient,
                       const ScgOptions& opts = {});

}  // namespace medgp
