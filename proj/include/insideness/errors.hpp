#pragma once

#include <stdexcept>
#include <string>

namespace insideness {

// Raised when an operation requires a digital Jordan curve and the image is not one.
class InvalidCurve : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator or dataset assembly gave up after its retry budget.
class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive enumeration was asked for a size beyond its feasibility bound.
class SizeTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A recurrent solver did not reach a fixpoint within its step budget.
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed on-disk data (netpbm, manifest, netspec).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace insideness
