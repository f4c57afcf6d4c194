#pragma once

#include <stdexcept>

namespace entbasis {

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidBasis : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnnormalizedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularCorrection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownCircuit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WidthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace entbasis
