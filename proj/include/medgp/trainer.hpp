#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "medgp/observations.hpp"
#include "medgp/shrinkage.hpp"

namespace medgp {

// Settings for fitting one patient.  Defaults follow the reference
// protocol: Q = 5 basis kernels with rank-8 weight factors, 1000 random
// restarts drawn from length scales in [6, 72] h and periods in [24, 72] h,
// and the two-part loop stopping on |dQ| < 0.005 or 30 outer iterations.
struct TrainConfig {
  int Q = 5;
  int R = 8;
  int max_outer_iters = 30;
  double convergence_tol = 0.005;  // absolute change in the objective
  int n_random_init = 1000;
  double length_scale_init_min = 6.0;
  double length_scale_init_max = 72.0;
  double period_init_min = 24.0;
  double period_init_max = 72.0;
  double a_init_min = -1.5;
  double a_init_max = 1.5;
  double lambda_init = 0.1;
  double noise_var_init = 0.1;
  int scg_max_iters = 50;
  double scg_grad_tol = 1e-4;
  bool standardize = true;
  int workers = 1;
  std::vector<double> eta_grid = {0.01, 0.1, 1.0};
  PriorConfig prior;
};

struct FitResult {
  StructuredKernel kernel;
  ShrinkageState shrinkage;
  std::vector<double> objective_trace;  // initial value, then one per outer iteration
  double log_marginal = 0.0;
  bool converged = false;
  Standardization standardizer;
  std::string patient_id;
};

// Fixed flat layout of the trainable parameters: mu block, v block, A
// entries row-major per q, lambda per q, then log noise variances.
struct ParamLayout {
  int Q = 0;
  int D = 0;
  int P = 0;
  std::vector<int> R;
  int mu_off = 0;
  int v_off = 0;
  std::vector<int> a_off;
  std::vector<int> lambda_off;
  int noise_off = 0;

  static ParamLayout of(const StructuredKernel& k);
  int a_index(int q, int d, int r) const { return a_off[static_cast<size_t>(q)] + d * R[static_cast<size_t>(q)] + r; }
  int lambda_index(int q, int d) const { return lambda_off[static_cast<size_t>(q)] + d; }
};

Eigen::VectorXd pack_params(const StructuredKernel& k);
void unpack_params(const Eigen::VectorXd& theta, StructuredKernel& k);

// Cached factorization of one Gram matrix: Cholesky, alpha = K^-1 y and the
// resulting log marginal likelihood.
struct GpFactors {
  Eigen::MatrixXd K;
  Eigen::LLT<Eigen::MatrixXd> llt;
  Eigen::VectorXd alpha;
  double log_marginal = 0.0;
  double jitter = 0.0;
};

GpFactors factorize(const PackedObservations& obs, const StructuredKernel& k, int workers = 1);

double log_marginal_likelihood(const PackedObservations& obs, const StructuredKernel& k, int workers = 1);
double log_marginal_likelihood(const ObservationSet& obs, const StructuredKernel& k, int workers = 1);

double objective(const PackedObservations& obs, const StructuredKernel& k, const ShrinkageState& shrinkage,
                 const PriorConfig& cfg, int workers = 1);

// Full analytic gradient of the objective in ParamLayout order.  Each
// component is the trace identity 0.5 tr((aa^T - K^-1) dK/dtheta_j) plus the
// prior terms; noise variances use the diagonal-indicator derivative in
// log space.
Eigen::VectorXd gradients(const PackedObservations& obs, const StructuredKernel& k,
                          const ShrinkageState& shrinkage, const PriorConfig& cfg, int workers = 1);

StructuredKernel random_restart_init(const PackedObservations& obs, const TrainConfig& cfg, uint64_t seed);
StructuredKernel random_restart_init(const ObservationSet& obs, const TrainConfig& cfg, uint64_t seed);

FitResult fit_patient(const ObservationSet& obs, const TrainConfig& cfg, uint64_t seed);

struct ModelSelectionScores {
  double log_marginal = 0.0;
  double bic = 0.0;
};

ModelSelectionScores model_selection_scores(const FitResult& result, int n_params_nonzero, int T);

// Number of weight hyperparameters (A and lambda entries) with magnitude
// above the near-zero threshold.
int count_nonzero_hyperparams(const StructuredKernel& k, double threshold = 1e-3);

}  // namespace medgp
