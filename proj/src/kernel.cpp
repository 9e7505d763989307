#include "medgp/kernel.hpp"

#include <cmath>
#include <limits>

#include "medgp/parallel.hpp"

namespace medgp {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

double se_kernel(double x, double x2, double length_scale, double scale) {
  check_finite(x, "x");
  check_finite(x2, "x2");
  if (!(length_scale > 0.0)) throw DomainError("se_kernel: length_scale must be > 0");
  const double d = x - x2;
  return scale * scale * std::exp(-(d * d) / (2.0 * length_scale * length_scale));
}

double periodic_kernel(double x, double x2, double length_scale, double scale, double period) {
  check_finite(x, "x");
  check_finite(x2, "x2");
  if (!(length_scale > 0.0)) throw DomainError("periodic_kernel: length_scale must be > 0");
  if (!(period > 0.0)) throw DomainError("periodic_kernel: period must be > 0");
  const double s = std::sin(kPi * std::abs(x - x2) / period);
  return scale * scale * std::exp(-4.0 * s * s / (length_scale * length_scale));
}

double sm_basis_kernel(double tau, const BasisKernelParams& params) {
  check_finite(tau, "tau");
  check_finite(params.mu, "mu");
  check_finite(params.v, "v");
  tau = std::abs(tau);
  return std::exp(-2.0 * kPi * kPi * tau * tau * params.v) * std::cos(2.0 * kPi * tau * params.mu);
}

Eigen::MatrixXd build_B(const CoregionalizationWeights& weights) {
  Eigen::MatrixXd B = weights.A * weights.A.transpose();
  B.diagonal() += weights.lambda;
  return B;
}

double cross_cov(int d, int d2, double t, double t2, const StructuredKernel& k) {
  if (d < 0 || d >= k.D || d2 < 0 || d2 >= k.D) throw DomainError("cross_cov: covariate index out of range");
  const double tau = std::abs(t - t2);
  double sum = 0.0;
  for (int q = 0; q < k.Q(); ++q) {
    const auto& w = k.weights[static_cast<size_t>(q)];
    const double b = w.A.row(d).dot(w.A.row(d2)) + (d == d2 ? w.lambda(d) : 0.0);
    sum += b * sm_basis_kernel(tau, k.basis[static_cast<size_t>(q)]);
  }
  return sum;
}

Eigen::MatrixXd gram_matrix_with_B(const std::vector<IndexedInput>& inputs,
                                   const StructuredKernel& k,
                                   const std::vector<Eigen::MatrixXd>& Bs, bool with_noise,
                                   int workers) {
  const int T = static_cast<int>(inputs.size());
  if (T == 0) throw DomainError("gram_matrix: empty input set");
  const int Q = k.Q();
  Eigen::MatrixXd K(T, T);
  parallel_for(T, workers, [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const int di = inputs[static_cast<size_t>(i)].covariate;
      const double ti = inputs[static_cast<size_t>(i)].time;
      for (int j = i; j < T; ++j) {
        const int dj = inputs[static_cast<size_t>(j)].covariate;
        // tau computed in full precision before squaring; large hospital
        // timestamps would otherwise lose the small differences that matter.
        const double tau = std::abs(ti - inputs[static_cast<size_t>(j)].time);
        double sum = 0.0;
        for (int q = 0; q < Q; ++q)
          sum += Bs[static_cast<size_t>(q)](di, dj) * sm_basis_kernel(tau, k.basis[static_cast<size_t>(q)]);
        K(i, j) = sum;
      }
      if (with_noise) K(i, i) += k.noise_var(di);
    }
  });
  K.triangularView<Eigen::StrictlyLower>() = K.transpose();
  return K;
}

Eigen::MatrixXd gram_matrix(const std::vector<IndexedInput>& inputs, const StructuredKernel& k,
                            bool with_noise, int workers) {
  std::vector<Eigen::MatrixXd> Bs;
  Bs.reserve(static_cast<size_t>(k.Q()));
  for (const auto& w : k.weights) Bs.push_back(build_B(w));
  for (const auto& in : inputs) {
    if (in.covariate < 0 || in.covariate >= k.D) throw DomainError("gram_matrix: covariate index out of range");
    check_finite(in.time, "input time");
  }
  return gram_matrix_with_B(inputs, k, Bs, with_noise, workers);
}

KernelFeaturesSummary characteristic_features(const BasisKernelParams& params) {
  KernelFeaturesSummary out;
  const double inf = std::numeric_limits<double>::infinity();
  out.period = params.mu > 0.0 ? 1.0 / params.mu : inf;
  out.length_scale = params.v > 0.0 ? 1.0 / (2.0 * kPi * std::sqrt(params.v)) : inf;
  return out;
}

RobustCholesky robust_cholesky(const Eigen::MatrixXd& K) {
  RobustCholesky out;
  out.llt.compute(K);
  if (out.llt.info() == Eigen::Success) return out;

  const int T = static_cast<int>(K.rows());
  double jitter = 1e-8 * K.diagonal().mean();
  if (!(jitter > 0.0)) jitter = 1e-10;
  for (int attempt = 0; attempt < 3; ++attempt, jitter *= 10.0) {
    Eigen::MatrixXd Kj = K;
    Kj.diagonal().array() += jitter;
    out.llt.compute(Kj);
    if (out.llt.info() == Eigen::Success) {
      out.jitter = jitter;
      return out;
    }
  }
  throw NumericError("Cholesky factorization failed after jitter retries (T=" + std::to_string(T) + ")");
}

}  // namespace medgp
