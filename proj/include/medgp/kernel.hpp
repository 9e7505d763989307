#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <vector>

#include "medgp/errors.hpp"

namespace medgp {

// One spectral-mixture basis kernel kappa_q(tau) = exp(-2 pi^2 tau^2 v) cos(2 pi tau mu).
// mu is a spectral frequency in 1/hours, v a spectral variance in 1/hours^2.
struct BasisKernelParams {
  double mu = 0.0;
  double v = 0.0;
};

// Factorized coregionalization weights for one basis kernel:
// B = A A^T + diag(lambda), A is D x R, lambda is length D.
struct CoregionalizationWeights {
  Eigen::MatrixXd A;
  Eigen::VectorXd lambda;

  int rows() const { return static_cast<int>(A.rows()); }
  int cols() const { return static_cast<int>(A.cols()); }
};

// The full multi-output prior: Q basis kernels, their weight factors, and
// per-covariate observation-noise variances.
struct StructuredKernel {
  std::vector<BasisKernelParams> basis;
  std::vector<CoregionalizationWeights> weights;
  Eigen::VectorXd noise_var;
  int D = 0;

  int Q() const { return static_cast<int>(basis.size()); }
};

// One observation site: which covariate, at what time (hours since admission).
struct IndexedInput {
  int covariate = 0;
  double time = 0.0;
};

// Characteristic period 1/mu and length scale 1/(2 pi sqrt(v)); infinity
// sentinels when the corresponding parameter is zero.
struct KernelFeaturesSummary {
  double period = 0.0;
  double length_scale = 0.0;
};

double se_kernel(double x, double x2, double length_scale, double scale);
double periodic_kernel(double x, double x2, double length_scale, double scale, double period);
double sm_basis_kernel(double tau, const BasisKernelParams& params);

Eigen::MatrixXd build_B(const CoregionalizationWeights& weights);

double cross_cov(int d, int d2, double t, double t2, const StructuredKernel& k);

// Dense Gram matrix over an arbitrary ragged input set; entry (i, j) is
// cross_cov of inputs i and j, optionally plus the covariate noise variance
// on the diagonal.  Row blocks may be assembled by several workers; the
// result is bitwise independent of the worker count.
Eigen::MatrixXd gram_matrix(const std::vector<IndexedInput>& inputs, const StructuredKernel& k,
                            bool with_noise, int workers = 1);

KernelFeaturesSummary characteristic_features(const BasisKernelParams& params);

// Cholesky with the jitter-retry policy: on failure, add 1e-8 * mean(diag)
// to the diagonal and retry up to 3 times with 10x escalation, then raise
// NumericError.  `jitter` reports the diagonal shift actually applied.
struct RobustCholesky {
  Eigen::LLT<Eigen::MatrixXd> llt;
  double jitter = 0.0;
};

RobustCholesky robust_cholesky(const Eigen::MatrixXd& K);

// Internal building block shared with the trainer: Gram assembly from
// precomputed B matrices (avoids rebuilding A A^T + diag(lambda) per entry).
Eigen::MatrixXd gram_matrix_with_B(const std::vector<IndexedInput>& inputs,
                                   const StructuredKernel& k,
                                   const std::vector<Eigen::MatrixXd>& Bs, bool with_noise,
                                   int workers);

}  // namespace medgp
