#pragma once

#include <stdexcept>

namespace lamkit {

// Malformed inputs: CSV/config problems, missing columns, bad values.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad or inconsistent model documents and model-level misuse
// (unknown schema version, double linearisation, constraint violations).
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failures: non-convergence, saturated statistics.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}
