#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "medgp/kernel.hpp"

namespace medgp {

// Hyperparameters of the sparsity-inducing prior.  The four shape
// parameters default to 1/2, which recapitulates two layers of the
// horseshoe prior; eta sets the global shrinkage strength and beta_lambda
// the Laplace scale on the diagonal weights.
struct PriorConfig {
  double alpha = 0.5;
  double beta = 0.5;
  double gamma = 0.5;
  double d = 0.5;
  double eta = 0.1;
  double beta_lambda = 0.01;
  // When false the model is fit by plain maximum marginal likelihood with
  // no shrinkage terms at all (the non-sparse SM-LMC variant).
  bool use_shrinkage = true;
};

// Latent scales of the hierarchical-gamma prior.  psi/delta are per
// (q, d, r) element, phi/tau per (q, r) column.  All entries stay strictly
// positive (floored at 1e-10 by the closed-form updates).
struct ShrinkageState {
  std::vector<Eigen::MatrixXd> psi;    // Q matrices, each D x R
  std::vector<Eigen::MatrixXd> delta;  // Q matrices, each D x R
  std::vector<Eigen::VectorXd> phi;    // Q vectors, each length R
  std::vector<Eigen::VectorXd> tau;    // Q vectors, each length R

  static ShrinkageState ones(int Q, int D, int R);
};

inline constexpr double kShrinkageFloor = 1e-10;

// Closed-form conditional updates (MAP for psi/phi, posterior mean for
// delta/tau, whose conditional modes do not exist at the default shapes).
double update_psi(double a, double delta, const PriorConfig& cfg);
double update_delta(double psi, double phi, const PriorConfig& cfg);
double update_phi(double delta_sum, double tau, int D, const PriorConfig& cfg);
double update_tau(double phi, const PriorConfig& cfg);

// One full sweep over the state in dependency order: psi, then delta, then
// phi, then tau, each cell using the freshest values of the others.
void update_shrinkage(ShrinkageState& state, const StructuredKernel& kernel, const PriorConfig& cfg);

// Sum of all prior log-density terms of the training objective (everything
// except the marginal-likelihood bracket), up to additive constants.
double log_prior(const StructuredKernel& kernel, const ShrinkageState& state, const PriorConfig& cfg);

// Three-parameter-beta density of the induced shrinkage coefficient.
double tpb_density(double rho, double alpha, double beta, double nu);

// Draws x ~ N(0, psi1), psi1 ~ Gamma(alpha, delta), delta ~ Gamma(beta, nu)
// (shape/rate convention), the two-layer hierarchy whose shrinkage
// coefficient rho = 1/(1 + psi1) follows tpb_density.
std::vector<double> sample_two_layer(double alpha, double beta, double nu, int n, uint64_t seed);

}  // namespace medgp
