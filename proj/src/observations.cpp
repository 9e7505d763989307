#include "medgp/observations.hpp"

#include <cmath>

namespace medgp {

void ObservationSet::validate() const {
  const size_t D = covariate_names.size();
  if (times.size() != D || values.size() != D)
    throw DomainError("ObservationSet: times/values must have one channel per covariate");
  for (size_t d = 0; d < D; ++d) {
    if (times[d].size() != values[d].size())
      throw DomainError("ObservationSet: times/values length mismatch in covariate " + covariate_names[d]);
    for (size_t i = 0; i < times[d].size(); ++i) {
      if (!std::isfinite(times[d][i]) || !std::isfinite(values[d][i]))
        throw DomainError("ObservationSet: non-finite entry in covariate " + covariate_names[d]);
      if (i > 0 && !(times[d][i] > times[d][i - 1]))
        throw DomainError("ObservationSet: times not strictly increasing in covariate " + covariate_names[d]);
    }
  }
}

Standardization Standardization::identity(int D) {
  Standardization s;
  s.mean = Eigen::VectorXd::Zero(D);
  s.std = Eigen::VectorXd::Ones(D);
  return s;
}

Standardization Standardization::fit(const ObservationSet& obs) {
  const int D = obs.D();
  Standardization s = identity(D);
  for (int d = 0; d < D; ++d) {
    const auto& v = obs.values[static_cast<size_t>(d)];
    const int n = static_cast<int>(v.size());
    if (n == 0) continue;
    double m = 0.0;
    for (double x : v) m += x;
    m /= n;
    double var = 0.0;
    for (double x : v) var += (x - m) * (x - m);
    var = n > 1 ? var / (n - 1) : 0.0;
    s.mean(d) = m;
    s.std(d) = std::sqrt(var) > 1e-12 ? std::sqrt(var) : 1.0;
  }
  return s;
}

PackedObservations pack(const ObservationSet& obs, const Standardization* standardizer) {
  obs.validate();
  PackedObservations p;
  p.D = obs.D();
  p.counts.resize(static_cast<size_t>(p.D));
  const int T = obs.total_observations();
  p.inputs.reserve(static_cast<size_t>(T));
  p.y.resize(T);
  int idx = 0;
  for (int d = 0; d < p.D; ++d) {
    const auto& t = obs.times[static_cast<size_t>(d)];
    const auto& v = obs.values[static_cast<size_t>(d)];
    p.counts[static_cast<size_t>(d)] = static_cast<int>(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
      p.inputs.push_back({d, t[i]});
      p.y(idx++) = standardizer ? standardizer->apply(d, v[i]) : v[i];
    }
  }
  return p;
}

}  // namespace medgp
