#include "entbasis/linalg.hpp"

#include <cmath>

namespace entbasis {

Complex det2(const Mat2& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

Mat2 inverse2(const Mat2& m) {
  const Complex d = det2(m);
  if (std::abs(d) <= kSingularTol) {
    throw SingularMatrix("inverse2: |det| <= 1e-12");
  }
  Mat2 inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return inv / d;
}

Mat4 kron2(const Mat2& a, const Mat2& b) {
  Mat4 out;
  out.block<2, 2>(0, 0) = a(0, 0) * b;
  out.block<2, 2>(0, 2) = a(0, 1) * b;
  out.block<2, 2>(2, 0) = a(1, 0) * b;
  out.block<2, 2>(2, 2) = a(1, 1) * b;
  return out;
}

Vec8 kron(const Vec2& a, const Vec4& b) {
  Vec8 out;
  out.segment<4>(0) = a(0) * b;
  out.segment<4>(4) = a(1) * b;
  return out;
}

Vec8 kron(const Vec4& a, const Vec2& b) {
  Vec8 out;
  for (int i = 0; i < 4; ++i) {
    out(2 * i) = a(i) * b(0);
    out(2 * i + 1) = a(i) * b(1);
  }
  return out;
}

Complex frobenius_inner(const Mat2& a, const Mat2& b) {
  return (a.adjoint() * b).trace();
}

Mat2 polar_unitary(const Mat2& m) {
  if (std::abs(det2(m)) <= kSingularTol) {
    throw SingularMatrix("polar_unitary: |det| <= 1e-12");
  }
  Eigen::JacobiSVD<Mat2> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace entbasis
