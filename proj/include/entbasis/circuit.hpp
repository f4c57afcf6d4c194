#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "entbasis/linalg.hpp"

namespace entbasis {

enum class GateKind { H, X, Z, Sdg, P, RY, RX, RZ, CX, CZ, CP, SWAP, U };

struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;         // second qubit for two-qubit kinds
  double param = 0.0;  // radians, for P/RY/RX/RZ/CP
  Mat2 matrix = Mat2::Identity();  // payload for kind U only
};

struct GateCircuit {
  int width = 2;
  std::vector<Gate> gates;
  std::string id;
};

enum class Verdict { exact, phase_equivalent, mismatch };

std::string verdict_name(Verdict v);

struct EquivalenceReport {
  std::string id;
  Vec4 claimed;
  Vec4 produced;
  std::optional<Complex> global_phase;
  Verdict verdict = Verdict::mismatch;
  double max_amp_error = 0.0;
  std::string note;
};

struct CircuitParams {
  double theta = 0.7853981633974483;  // pi/4, the worked value in the figures
  double lambda = 2.0;
  int index = 0;  // basis-matrix choice for the M_matrix block
};

bool is_single_qubit(GateKind kind);
Mat2 gate_matrix(GateKind kind, double param);

/// Qubit 0 is the top wire and the most significant tensor index.
Eigen::VectorXcd apply(const GateCircuit& circuit,
                       const Eigen::VectorXcd& input);

/// One gate per line: "H 0", "P 0 0.785", "CX 0 1"; '#' comments;
/// case-insensitive. U gates have no text form.
GateCircuit parse_circuit(const std::string& text);
std::string circuit_to_text(const GateCircuit& circuit);

struct CatalogEntry {
  GateCircuit circuit;
  Vec4 claimed;
  std::string note;  // transcription caveats, if any
};

std::vector<std::string> catalog_ids();    // state-preparation figures
std::vector<std::string> teleport_ids();

CatalogEntry catalog(const std::string& id, const CircuitParams& params = {});
EquivalenceReport verify(const std::string& id,
                         const CircuitParams& params = {});

/// Width-3 teleportation circuit with deferred classical controls.
/// The payload preparation shown in the figures is dropped; callers feed
/// the payload as the first qubit of the input state.
GateCircuit teleport_circuit(const std::string& id,
                             const CircuitParams& params = {});

struct TeleportCircuitCheck {
  std::array<double, 4> probability{};
  std::array<double, 4> fidelity{};  // NaN where the outcome is unreachable
};

/// Runs the payload through a teleport circuit and reports, per outcome of
/// the first two qubits, the probability and Bob-vs-payload fidelity.
TeleportCircuitCheck check_teleport_circuit(const GateCircuit& circuit,
                                            const Vec2& psi);

}  // namespace entbasis
