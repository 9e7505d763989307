#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "medgp/errors.hpp"
#include "medgp/kernel.hpp"

namespace medgp {

// Ragged multi-channel time series for one patient.  times[d] are hours
// since admission, strictly increasing per covariate; channels may be empty.
struct ObservationSet {
  std::string patient_id;
  std::vector<std::string> covariate_names;
  std::vector<std::vector<double>> times;   // one vector per covariate
  std::vector<std::vector<double>> values;  // aligned with times

  int D() const { return static_cast<int>(covariate_names.size()); }
  int total_observations() const {
    int n = 0;
    for (const auto& t : times) n += static_cast<int>(t.size());
    return n;
  }
  void validate() const;
};

// Per-covariate affine transform y -> (y - mean) / std used to center and
// scale a patient before fitting; inverted at prediction time.
struct Standardization {
  Eigen::VectorXd mean;
  Eigen::VectorXd std;

  static Standardization identity(int D);
  static Standardization fit(const ObservationSet& obs);
  double apply(int covariate, double y) const { return (y - mean(covariate)) / std(covariate); }
  double invert(int covariate, double y) const { return y * std(covariate) + mean(covariate); }
};

// Flattened view ordered covariate-block by covariate-block, the layout the
// Gram assembly and marginal likelihood operate on.
struct PackedObservations {
  std::vector<IndexedInput> inputs;
  Eigen::VectorXd y;
  std::vector<int> counts;  // observations per covariate
  int D = 0;

  int T() const { return static_cast<int>(inputs.size()); }
};

PackedObservations pack(const ObservationSet& obs, const Standardization* standardizer = nullptr);

}  // namespace medgp
