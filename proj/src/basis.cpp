#include "entbasis/basis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace entbasis {

namespace {

Mat2 make(Complex a, Complex b, Complex c, Complex d) {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

std::array<Mat2, 4> bell_matrices() {
  const double s = 1.0 / std::sqrt(2.0);
  return {make(s, 0, 0, s), make(s, 0, 0, -s), make(0, s, s, 0),
          make(0, s, -s, 0)};
}

}  // namespace

TwoQubitState state_from_matrix(const Mat2& m) {
  TwoQubitState s;
  s.c << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
  s.normalized = std::abs(s.c.squaredNorm() - 1.0) < kNormTol;
  return s;
}

Complex entanglement_determinant(const TwoQubitState& s) {
  return s.c(0) * s.c(3) - s.c(1) * s.c(2);
}

ValidationReport validate_basis(const std::array<Mat2, 4>& matrices) {
  ValidationReport report;
  for (int i = 0; i < 4; ++i) {
    report.abs_det[i] = std::abs(det2(matrices[i]));
    report.det_ok[i] = report.abs_det[i] > kDetTol;
    for (int j = 0; j < 4; ++j) {
      report.gram(i, j) = frobenius_inner(matrices[i], matrices[j]);
    }
  }
  report.max_gram_dev =
      (report.gram - Mat4::Identity()).cwiseAbs().maxCoeff();
  return report;
}

BasisTransform assemble_transform(const EntangledBasis& basis) {
  const ValidationReport report = validate_basis(basis.matrices);
  if (!report.pass()) {
    std::ostringstream msg;
    msg << "assemble_transform: basis '" << basis.name
        << "' fails validation (max Gram deviation " << report.max_gram_dev
        << ")";
    throw InvalidBasis(msg.str());
  }
  BasisTransform t;
  for (int i = 0; i < 4; ++i) {
    t.t.row(i) = state_from_matrix(basis.matrices[i]).c.transpose();
  }
  t.t_inv = t.t.adjoint();
  return t;
}

Vec4 expand_computational(int j, const EntangledBasis& basis) {
  const BasisTransform t = assemble_transform(basis);
  return t.t.col(j).conjugate();
}

Family family_from_name(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "bell") return Family::bell;
  if (lower == "phase") return Family::phase;
  if (lower == "rotation") return Family::rotation;
  if (lower == "hyperbolic") return Family::hyperbolic;
  if (lower == "scale") return Family::scale;
  throw ParamOutOfRange("unknown basis family: " + name);
}

std::string family_name(Family family) {
  switch (family) {
    case Family::bell: return "bell";
    case Family::phase: return "phase";
    case Family::rotation: return "rotation";
    case Family::hyperbolic: return "hyperbolic";
    case Family::scale: return "scale";
  }
  return "?";
}

const char* family_param_name(Family family) {
  switch (family) {
    case Family::bell: return nullptr;
    case Family::scale: return "lambda";
    default: return "theta";
  }
}

EntangledBasis builtin_basis(Family family, double param) {
  if (family != Family::bell && !std::isfinite(param)) {
    throw ParamOutOfRange("basis parameter must be finite");
  }
  EntangledBasis basis;
  basis.name = family_name(family);
  if (const char* pname = family_param_name(family)) {
    basis.params[pname] = param;
  }
  const double s = 1.0 / std::sqrt(2.0);
  switch (family) {
    case Family::bell:
      basis.matrices = bell_matrices();
      break;
    case Family::phase: {
      const Complex e = std::polar(1.0, param);
      basis.matrices = {make(s * e, 0, 0, s),
                        make(s, 0, 0, -s * std::conj(e)),
                        make(0, s, -s, 0), make(0, s, s, 0)};
      break;
    }
    case Family::rotation: {
      const double c = std::cos(param), sn = std::sin(param);
      basis.matrices = {make(s * c, -s * sn, s * sn, s * c),
                        make(-s * sn, -s * c, s * c, -s * sn),
                        make(s, 0, 0, -s), make(0, s, s, 0)};
      break;
    }
    case Family::hyperbolic: {
      // cosh stays within double range; cosh(40)^2 would not.
      if (std::abs(param) > 20.0) {
        throw ParamOutOfRange("hyperbolic family requires |theta| <= 20");
      }
      const double n = 1.0 / std::sqrt(2.0 * std::cosh(2.0 * param));
      const double ch = std::cosh(param), sh = std::sinh(param);
      basis.matrices = {make(n * ch, n * sh, n * sh, n * ch),
                        make(n * sh, -n * ch, -n * ch, n * sh),
                        make(s, 0, 0, -s), make(0, s, -s, 0)};
      break;
    }
    case Family::scale: {
      if (param == 0.0) {
        throw ParamOutOfRange("scale family requires lambda != 0");
      }
      const double n = 1.0 / std::sqrt(1.0 + param * param);
      basis.matrices = {make(n * param, 0, 0, n),
                        make(n, 0, 0, -n * param), make(0, s, -s, 0),
                        make(0, s, s, 0)};
      break;
    }
  }
  return basis;
}

}  // namespace entbasis
