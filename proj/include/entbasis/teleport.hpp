#pragma once

#include <array>
#include <cstdint>

#include "entbasis/basis.hpp"

namespace entbasis {

/// Outcomes below this probability are never sampled and their fidelities
/// are reported as NaN (not applicable).
inline constexpr double kProbFloor = 1e-15;

struct Branch {
  int k = 0;          // measurement outcome index
  Vec2 gamma_prime;   // receiver-side conditional amplitudes
  double probability = 0.0;
};

struct CorrectionMap {
  Mat2 exact;    // ((conj(A_k) A_i)^T)^{-1}, generally non-unitary
  Mat2 unitary;  // polar factor of `exact`
  double scale;  // ||exact||_F / sqrt(2); 1 when exact is unitary
};

enum class CorrectionMode { exact, unitary };

struct TeleportRun {
  std::string basis_name;
  std::map<std::string, double> basis_params;
  int sender_index = 0;
  Vec2 input;
  std::array<Branch, 4> branches;
  std::array<CorrectionMap, 4> corrections;
  std::array<double, 4> fidelity_exact{};
  std::array<double, 4> fidelity_unitary{};
  CorrectionMode mode = CorrectionMode::exact;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::array<std::uint64_t, 4> counts{};
};

/// |<a|b>|^2. Both inputs must be normalized.
double fidelity(const Vec2& a, const Vec2& b);

/// Branch k carries gamma' = (conj(A_k) A_i)^T (gamma_1, gamma_2).
std::array<Branch, 4> decompose(const Vec2& psi, int sender,
                                const EntangledBasis& basis);

CorrectionMap correction(int outcome, int sender, const EntangledBasis& basis);

TeleportRun run(const Vec2& psi, int sender, const EntangledBasis& basis,
                std::uint64_t shots, std::uint64_t seed,
                CorrectionMode mode = CorrectionMode::exact);

}  // namespace entbasis
