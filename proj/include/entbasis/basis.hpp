#pragma once

#include <array>
#include <map>
#include <string>

#include "entbasis/linalg.hpp"

namespace entbasis {

/// Entanglement condition on |det A_i|.
inline constexpr double kDetTol = 1e-12;
/// Orthonormality tolerance on the Gram matrix Tr(A_i^dagger A_j).
/// Looser than kDetTol: trig/hyperbolic entries accumulate rounding.
inline constexpr double kGramTol = 1e-9;
/// Norm tolerance for states labeled normalized.
inline constexpr double kNormTol = 1e-12;

struct QubitState {
  Vec2 amps;  // amplitudes of |0>, |1>
};

struct TwoQubitState {
  Vec4 c;  // amplitudes over |00>, |01>, |10>, |11>
  bool normalized = false;
};

struct EntangledBasis {
  std::string name;
  std::array<Mat2, 4> matrices;  // A_0..A_3
  std::map<std::string, double> params;
};

struct BasisTransform {
  Mat4 t;      // rows are the vectorized basis matrices
  Mat4 t_inv;  // equals t.adjoint() for a valid basis
};

struct ValidationReport {
  std::array<double, 4> abs_det{};
  std::array<bool, 4> det_ok{};
  Mat4 gram;
  double max_gram_dev = 0.0;

  bool det_pass() const {
    return det_ok[0] && det_ok[1] && det_ok[2] && det_ok[3];
  }
  bool gram_pass() const { return max_gram_dev < kGramTol; }
  bool pass() const { return det_pass() && gram_pass(); }
};

/// Row-wise vectorization: c = (m00, m01, m10, m11).
TwoQubitState state_from_matrix(const Mat2& m);

/// det of [[c1,c2],[c3,c4]]; zero iff the state is a product state.
Complex entanglement_determinant(const TwoQubitState& s);

ValidationReport validate_basis(const std::array<Mat2, 4>& matrices);

/// Throws InvalidBasis when validate_basis fails.
BasisTransform assemble_transform(const EntangledBasis& basis);

/// Coefficients (a*_{0j}, a*_{1j}, a*_{2j}, a*_{3j}) expanding the
/// computational state |C_j> over the basis states.
Vec4 expand_computational(int j, const EntangledBasis& basis);

enum class Family { bell, phase, rotation, hyperbolic, scale };

/// Case-insensitive family lookup; throws ParamOutOfRange on unknown names.
Family family_from_name(const std::string& name);
std::string family_name(Family family);

/// "theta", "lambda", or nullptr for bell.
const char* family_param_name(Family family);

EntangledBasis builtin_basis(Family family, double param = 0.0);

}  // namespace entbasis
