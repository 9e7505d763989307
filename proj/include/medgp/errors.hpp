#pragma once

#include <stdexcept>
#include <string>

namespace medgp {

// Error taxonomy used across the library.  The CLI maps each class to a
// distinct exit code; library callers can catch the base to handle all of
// them uniformly.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid argument or precondition violation (bad length scale, unsorted
// stream, rho outside (0,1), ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// Linear-algebra breakdown that survived the jitter-retry policy.
class NumericError : public Error {
public:
  using Error::Error;
};

// Malformed dataset or model file.
class ParseError : public Error {
public:
  using Error::Error;
};

// Semantically invalid model (all-zero kernels, version mismatch, ...).
class ModelError : public Error {
public:
  using Error::Error;
};

}  // namespace medgp
