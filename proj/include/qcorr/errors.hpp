#pragma once

#include <stdexcept>

namespace qcorr {

// Error taxonomy used across the library. All errors derive from
// std::runtime_error so callers may catch broadly or by kind.

struct NotHermitianError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadDimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotDensityMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidTemperatureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnphysicalCoefficientsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedParametersError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoEntanglementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qcorr
