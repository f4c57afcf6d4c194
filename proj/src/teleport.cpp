#include "entbasis/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entbasis/rng.hpp"

namespace entbasis {

namespace {

constexpr double kInputNormTol = 1e-9;

void require_valid(const EntangledBasis& basis) {
  if (!validate_basis(basis.matrices).pass()) {
    throw InvalidBasis("basis '" + basis.name + "' fails validation");
  }
}

void require_normalized(const Vec2& v) {
  if (std::abs(v.squaredNorm() - 1.0) > kInputNormTol) {
    throw UnnormalizedInput("state is not normalized");
  }
}

Vec2 recovered(const Mat2& gate, const Vec2& gamma_prime) {
  return (gate * gamma_prime).normalized();
}

}  // namespace

double fidelity(const Vec2& a, const Vec2& b) {
  require_normalized(a);
  require_normalized(b);
  return std::clamp(std::norm(a.dot(b)), 0.0, 1.0);
}

std::array<Branch, 4> decompose(const Vec2& psi, int sender,
                                const EntangledBasis& basis) {
  require_valid(basis);
  require_normalized(psi);
  std::array<Branch, 4> branches;
  for (int k = 0; k < 4; ++k) {
    const Mat2 product =
        (basis.matrices[k].conjugate() * basis.matrices[sender]).transpose();
    branches[k].k = k;
    branches[k].gamma_prime = product * psi;
    branches[k].probability = branches[k].gamma_prime.squaredNorm();
  }
  return branches;
}

CorrectionMap correction(int outcome, int sender,
                         const EntangledBasis& basis) {
  require_valid(basis);
  const Mat2 product =
      (basis.matrices[outcome].conjugate() * basis.matrices[sender])
          .transpose();
  if (std::abs(det2(product)) <= kSingularTol) {
    throw SingularCorrection("branch map is singular");
  }
  CorrectionMap map;
  map.exact = inverse2(product);
  map.unitary = polar_unitary(map.exact);
  map.scale = map.exact.norm() / std::sqrt(2.0);
  return map;
}

TeleportRun run(const Vec2& psi, int sender, const EntangledBasis& basis,
                std::uint64_t shots, std::uint64_t seed, CorrectionMode mode) {
  TeleportRun result;
  result.basis_name = basis.name;
  result.basis_params = basis.params;
  result.sender_index = sender;
  result.input = psi;
  result.mode = mode;
  result.shots = shots;
  result.seed = seed;
  result.branches = decompose(psi, sender, basis);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int k = 0; k < 4; ++k) {
    result.corrections[k] = correction(k, sender, basis);
    if (result.branches[k].probability < kProbFloor) {
      result.fidelity_exact[k] = nan;
      result.fidelity_unitary[k] = nan;
      continue;
    }
    const Vec2& gp = result.branches[k].gamma_prime;
    result.fidelity_exact[k] =
        fidelity(psi, recovered(result.corrections[k].exact, gp));
    result.fidelity_unitary[k] =
        fidelity(psi, recovered(result.corrections[k].unitary, gp));
  }

  // Inverse-CDF sampling over the branch probabilities, cumulative sums in
  // index order, ties broken toward the lower index.
  std::array<double, 4> cum{};
  double acc = 0.0;
  for (int k = 0; k < 4; ++k) {
    if (result.branches[k].probability >= kProbFloor) {
      acc += result.branches[k].probability;
    }
    cum[k] = acc;
  }
  SplitMix64 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.next_double() * acc;
    int k = 3;
    for (int j = 0; j < 4; ++j) {
      if (u < cum[j]) {
        k = j;
        break;
      }
    }
    ++result.counts[k];
  }
  return result;
}

}  // namespace entbasis
