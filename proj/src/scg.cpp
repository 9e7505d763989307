#include "medgp/scg.hpp"

#include <cmath>
#include <limits>

namespace medgp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

bool usable(double f) { return std::isfinite(f); }
}  // namespace

ScgResult scg_minimize(const Eigen::VectorXd& x0,
                       const std::function<double(const Eigen::VectorXd&)>& value,
                       const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& gradient,
                       const ScgOptions& opts) {
  ScgResult res;
  const int n = static_cast<int>(x0.size());
  Eigen::VectorXd w = x0;
  double fw = value(w);
  if (!usable(fw)) {
    // Nothing sensible to do from an infeasible start.
    res.x = w;
    res.f = fw;
    return res;
  }
  Eigen::VectorXd r = -gradient(w);
  Eigen::VectorXd p = r;
  double lambda = opts.lambda0;
  double lambda_bar = 0.0;
  bool success = true;
  double delta = 0.0;

  for (int k = 1; k <= opts.max_iters; ++k) {
    const double rnorm = r.norm();
    if (rnorm < opts.grad_tol) {
      res.converged = true;
      break;
    }
    const double p2 = p.squaredNorm();
    if (!(p2 > 0.0)) break;

    if (success) {
      // Second-order information along p from a forward-difference probe.
      const double sigma = opts.sigma0 / std::sqrt(p2);
      bool probe_ok = true;
      Eigen::VectorXd gplus;
      try {
        gplus = gradient(w + sigma * p);
        probe_ok = gplus.allFinite();
      } catch (...) {
        probe_ok = false;
      }
      if (probe_ok) {
        delta = p.dot((gplus + r) / sigma);  // p' (g(w+sp) - g(w)) / s with g = -r
      } else {
        delta = 0.0;  // force the indefiniteness branch below
      }
    }
    delta += (lambda - lambda_bar) * p2;
    if (delta <= 0.0) {  // make the curvature estimate positive definite
      lambda_bar = 2.0 * (lambda - delta / p2);
      delta = -delta + lambda * p2;
      lambda = lambda_bar;
    }

    const double mu = p.dot(r);
    const double alpha = mu / delta;
    const Eigen::VectorXd w_new = w + alpha * p;
    const double f_new = value(w_new);

    double comparison;
    if (usable(f_new)) {
      comparison = 2.0 * delta * (fw - f_new) / (mu * mu);
    } else {
      comparison = -1.0;  // infeasible candidate: treat as a failed step
    }

    if (comparison >= 0.0) {
      w = w_new;
      fw = f_new;
      const Eigen::VectorXd r_new = -gradient(w);
      lambda_bar = 0.0;
      success = true;
      if (k % n == 0) {
        p = r_new;  // periodic restart keeps directions conjugate-ish
      } else {
        const double beta = (r_new.squaredNorm() - r_new.dot(r)) / mu;
        p = r_new + beta * p;
      }
      r = r_new;
      if (comparison >= 0.75) lambda = std::max(lambda * 0.25, 1e-15);
    } else {
      lambda_bar = lambda;
      success = false;
    }
    if (comparison < 0.25) {
      lambda += delta * (1.0 - comparison) / p2;
      if (!std::isfinite(lambda)) lambda = 1e20;
    }
    if (lambda > 1e20) break;  // trust region collapsed; no usable step
    res.iters = k;
  }

  res.x = w;
  res.f = fw;
  return res;
}

}  // namespace medgp
