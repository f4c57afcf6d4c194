#pragma once

#include <complex>

#include <Eigen/Dense>

#include "entbasis/errors.hpp"

namespace entbasis {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;
using Vec8 = Eigen::Matrix<Complex, 8, 1>;

/// Matrices with |det| at or below this are treated as singular.
inline constexpr double kSingularTol = 1e-12;

Complex det2(const Mat2& m);

/// Inverse of a 2x2 matrix. Throws SingularMatrix when |det| <= kSingularTol.
Mat2 inverse2(const Mat2& m);

Mat4 kron2(const Mat2& a, const Mat2& b);

Vec8 kron(const Vec2& a, const Vec4& b);
Vec8 kron(const Vec4& a, const Vec2& b);

/// Tr(a^dagger b), the Frobenius inner product.
Complex frobenius_inner(const Mat2& a, const Mat2& b);

/// Unitary polar factor W*Vh of the SVD m = W*S*Vh; the Frobenius-nearest
/// unitary to m. Requires m invertible so the factor is unique.
Mat2 polar_unitary(const Mat2& m);

// Adjoint, products and matrix-vector application are Eigen's .adjoint()
// and operator*; this thin wrapper keeps call sites uniform.
template <typename Derived>
auto adjoint(const Eigen::MatrixBase<Derived>& m) {
  return m.adjoint().eval();
}

}  // namespace entbasis
