#include "medgp/shrinkage.hpp"

#include <cmath>
#include <random>

namespace medgp {

ShrinkageState ShrinkageState::ones(int Q, int D, int R) {
  ShrinkageState s;
  s.psi.assign(static_cast<size_t>(Q), Eigen::MatrixXd::Ones(D, R));
  s.delta.assign(static_cast<size_t>(Q), Eigen::MatrixXd::Ones(D, R));
  s.phi.assign(static_cast<size_t>(Q), Eigen::VectorXd::Ones(R));
  s.tau.assign(static_cast<size_t>(Q), Eigen::VectorXd::Ones(R));
  return s;
}

double update_psi(double a, double delta, const PriorConfig& cfg) {
  const double c = 2.0 * cfg.alpha - 3.0;
  const double psi = (c + std::sqrt(c * c + 8.0 * a * a * delta)) / (4.0 * delta);
  return std::max(psi, kShrinkageFloor);
}

double update_delta(double psi, double phi, const PriorConfig& cfg) {
  return (cfg.alpha + cfg.beta) / (psi + phi);
}

double update_phi(double delta_sum, double tau, int D, const PriorConfig& cfg) {
  const double phi = (D * cfg.beta + cfg.gamma - 1.0) / (delta_sum + tau);
  return std::max(phi, kShrinkageFloor);
}

double update_tau(double phi, const PriorConfig& cfg) {
  return (cfg.gamma + cfg.d) / (phi + cfg.eta);
}

void update_shrinkage(ShrinkageState& state, const StructuredKernel& kernel, const PriorConfig& cfg) {
  const int Q = kernel.Q();
  const int D = kernel.D;
  for (int q = 0; q < Q; ++q) {
    const auto& A = kernel.weights[static_cast<size_t>(q)].A;
    auto& psi = state.psi[static_cast<size_t>(q)];
    auto& delta = state.delta[static_cast<size_t>(q)];
    auto& phi = state.phi[static_cast<size_t>(q)];
    auto& tau = state.tau[static_cast<size_t>(q)];
    const int R = static_cast<int>(A.cols());
    for (int r = 0; r < R; ++r)
      for (int d = 0; d < D; ++d) psi(d, r) = update_psi(A(d, r), delta(d, r), cfg);
    for (int r = 0; r < R; ++r)
      for (int d = 0; d < D; ++d) delta(d, r) = update_delta(psi(d, r), phi(r), cfg);
    for (int r = 0; r < R; ++r) phi(r) = update_phi(delta.col(r).sum(), tau(r), D, cfg);
    for (int r = 0; r < R; ++r) tau(r) = update_tau(phi(r), cfg);
  }
}

double log_prior(const StructuredKernel& kernel, const ShrinkageState& state, const PriorConfig& cfg) {
  if (!cfg.use_shrinkage) return 0.0;
  double lp = 0.0;
  const int Q = kernel.Q();
  for (int q = 0; q < Q; ++q) {
    const auto& A = kernel.weights[static_cast<size_t>(q)].A;
    const auto& lambda = kernel.weights[static_cast<size_t>(q)].lambda;
    const auto& psi = state.psi[static_cast<size_t>(q)];
    const auto& delta = state.delta[static_cast<size_t>(q)];
    const auto& phi = state.phi[static_cast<size_t>(q)];
    const auto& tau = state.tau[static_cast<size_t>(q)];
    const int D = static_cast<int>(A.rows());
    const int R = static_cast<int>(A.cols());
    for (int r = 0; r < R; ++r) {
      for (int d = 0; d < D; ++d) {
        const double ps = psi(d, r), de = delta(d, r);
        if (!(ps > 0.0) || !(de > 0.0)) throw DomainError("log_prior: shrinkage scales must be > 0");
        const double a = A(d, r);
        lp += -0.5 * std::log(ps) - a * a / (2.0 * ps);
        lp += cfg.alpha * std::log(de) + (cfg.alpha - 1.0) * std::log(ps) - de * ps;
        lp += cfg.beta * std::log(phi(r)) + (cfg.beta - 1.0) * std::log(de) - phi(r) * de;
      }
      if (!(phi(r) > 0.0) || !(tau(r) > 0.0)) throw DomainError("log_prior: shrinkage scales must be > 0");
      lp += cfg.gamma * std::log(tau(r)) + (cfg.gamma - 1.0) * std::log(phi(r)) - tau(r) * phi(r);
      lp += cfg.d * std::log(cfg.eta) + (cfg.d - 1.0) * std::log(tau(r)) - cfg.eta * tau(r);
    }
    for (int d = 0; d < D; ++d)
      lp += -std::log(2.0 * cfg.beta_lambda) - std::abs(lambda(d)) / cfg.beta_lambda;
  }
  return lp;
}

double tpb_density(double rho, double alpha, double beta, double nu) {
  if (!(rho > 0.0) || !(rho < 1.0)) throw DomainError("tpb_density: rho must lie in (0, 1)");
  if (!(alpha > 0.0) || !(beta > 0.0) || !(nu > 0.0)) throw DomainError("tpb_density: parameters must be > 0");
  const double log_norm = std::lgamma(alpha + beta) - std::lgamma(alpha) - std::lgamma(beta);
  const double log_f = log_norm + beta * std::log(nu) + (beta - 1.0) * std::log(rho) +
                       (alpha - 1.0) * std::log1p(-rho) -
                       (alpha + beta) * std::log1p((nu - 1.0) * rho);
  return std::exp(log_f);
}

std::vector<double> sample_two_layer(double alpha, double beta, double nu, int n, uint64_t seed) {
  if (n < 1) throw DomainError("sample_two_layer: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    // std::gamma_distribution is shape/scale; the hierarchy is shape/rate.
    std::gamma_distribution<double> gdelta(beta, 1.0 / nu);
    const double delta = gdelta(rng);
    std::gamma_distribution<double> gpsi(alpha, 1.0 / delta);
    const double psi1 = gpsi(rng);
    out[static_cast<size_t>(i)] = std::sqrt(psi1) * normal(rng);
  }
  return out;
}

}  // namespace medgp
