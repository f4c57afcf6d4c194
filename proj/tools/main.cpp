#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entbasis/basis.hpp"
#include "entbasis/circuit.hpp"
#include "entbasis/serialize.hpp"
#include "entbasis/teleport.hpp"

namespace {

using namespace entbasis;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;

struct BasisSource {
  std::string builtin;
  std::string file;
  std::optional<double> theta;
  std::optional<double> lambda;
};

void add_basis_flags(CLI::App* cmd, BasisSource& src) {
  auto* builtin = cmd->add_option("--builtin", src.builtin,
                                  "builtin family: bell, phase, rotation, "
                                  "hyperbolic, scale");
  auto* file = cmd->add_option("--file", src.file, "basis JSON file");
  builtin->excludes(file);
  cmd->add_option("--theta", src.theta, "family parameter theta (radians)");
  cmd->add_option("--lambda", src.lambda, "family parameter lambda");
}

EntangledBasis resolve_basis(const BasisSource& src) {
  if (!src.file.empty()) {
    return load_basis_file(src.file);
  }
  if (src.builtin.empty()) {
    throw CLI::ValidationError("--builtin or --file is required");
  }
  const Family family = family_from_name(src.builtin);
  const char* pname = family_param_name(family);
  double param = 0.0;
  if (pname != nullptr) {
    const auto& opt =
        std::string(pname) == "theta" ? src.theta : src.lambda;
    if (!opt) {
      throw ParamOutOfRange("family '" + family_name(family) +
                            "' requires --" + pname);
    }
    param = *opt;
  }
  return builtin_basis(family, param);
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    values.push_back(std::stod(item));
  }
  return values;
}

// re,im pairs; auto-normalizes (with a warning) when within 1e-6 of unit
// norm, rejects otherwise.
Vec2 parse_qubit_state(const std::string& text) {
  const auto values = parse_numbers(text);
  if (values.size() != 4) {
    throw CLI::ValidationError(
        "--state expects 4 comma-separated numbers (re,im,re,im)");
  }
  Vec2 psi;
  psi << Complex(values[0], values[1]), Complex(values[2], values[3]);
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-6) {
    throw UnnormalizedInput("state norm " + std::to_string(norm) +
                            " deviates from 1 by more than 1e-6");
  }
  if (norm != 1.0) {
    std::cerr << "warning: renormalizing input state (norm " << norm << ")\n";
    psi /= norm;
  }
  return psi;
}

int cmd_basis_validate(const BasisSource& src, const std::string& format) {
  EntangledBasis basis;
  try {
    basis = resolve_basis(src);
  } catch (const InvalidBasis& e) {
    std::cerr << e.what() << '\n';
    return kExitValidation;
  }
  const ValidationReport report = validate_basis(basis.matrices);
  if (format == "json") {
    Json j = validation_report_to_json(report);
    j["basis"] = {{"name", basis.name}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "basis: " << basis.name << '\n'
              << validation_report_to_text(report);
  }
  return report.pass() ? kExitOk : kExitValidation;
}

int cmd_basis_show(const BasisSource& src, const std::string& format) {
  const EntangledBasis basis = resolve_basis(src);
  const BasisTransform transform = assemble_transform(basis);
  if (format == "json") {
    Json j = basis_to_json(basis);
    Json t = Json::array(), t_inv = Json::array();
    for (int r = 0; r < 4; ++r) {
      Json row = Json::array(), row_inv = Json::array();
      for (int c = 0; c < 4; ++c) {
        row.push_back(complex_to_json(transform.t(r, c)));
        row_inv.push_back(complex_to_json(transform.t_inv(r, c)));
      }
      t.push_back(row);
      t_inv.push_back(row_inv);
    }
    j["transform"] = t;
    j["transform_inverse"] = t_inv;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "basis: " << basis.name << '\n';
  for (const auto& [key, value] : basis.params) {
    std::cout << "  " << key << " = " << value << '\n';
  }
  for (int i = 0; i < 4; ++i) {
    std::cout << "A_" << i << ":\n"
              << basis.matrices[i] << '\n';
  }
  std::cout << "T:\n" << transform.t << "\nT^-1 = T^dagger:\n"
            << transform.t_inv << '\n';
  return kExitOk;
}

int cmd_teleport(const BasisSource& src, int index, const std::string& state,
                 std::uint64_t shots, std::uint64_t seed,
                 const std::string& mode, const std::string& format) {
  const EntangledBasis basis = resolve_basis(src);
  if (index < 0 || index > 3) {
    throw ParamOutOfRange("--index must be in 0..3");
  }
  const Vec2 psi = parse_qubit_state(state);
  const CorrectionMode cmode =
      mode == "unitary" ? CorrectionMode::unitary : CorrectionMode::exact;
  const TeleportRun result = run(psi, index, basis, shots, seed, cmode);
  if (format == "json") {
    std::cout << teleport_run_to_json(result).dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "basis: " << result.basis_name << "  sender index: " << index
            << "  mode: " << mode << '\n';
  for (int k = 0; k < 4; ++k) {
    const auto fid = cmode == CorrectionMode::unitary
                         ? result.fidelity_unitary[k]
                         : result.fidelity_exact[k];
    std::cout << "outcome " << k
              << ": p = " << result.branches[k].probability
              << "  counts = " << result.counts[k] << "  fidelity = ";
    if (std::isnan(fid)) {
      std::cout << "n/a";
    } else {
      std::cout << fid;
    }
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_circuit_verify(bool all, const std::string& id, double theta,
                       double lambda, int index, const std::string& format) {
  CircuitParams params;
  params.theta = theta;
  params.lambda = lambda;
  params.index = index;
  std::vector<std::string> ids;
  if (all) {
    ids = catalog_ids();
    for (const auto& tel : teleport_ids()) ids.push_back(tel);
  } else {
    ids.push_back(id);
  }
  bool any_mismatch = false;
  Json rows = Json::array();
  for (const std::string& cid : ids) {
    const EquivalenceReport report = verify(cid, params);
    any_mismatch = any_mismatch || report.verdict == Verdict::mismatch;
    if (format == "json") {
      rows.push_back(equivalence_report_to_json(report));
      continue;
    }
    std::cout << cid << ": " << verdict_name(report.verdict);
    if (report.verdict == Verdict::phase_equivalent && report.global_phase) {
      std::cout << " (phase " << report.global_phase->real();
      if (std::abs(report.global_phase->imag()) > 1e-12) {
        std::cout << (report.global_phase->imag() < 0 ? " - " : " + ")
                  << std::abs(report.global_phase->imag()) << "i";
      }
      std::cout << ")";
    }
    std::cout << "  max_amp_error = " << report.max_amp_error << '\n';
  }
  if (format == "json") {
    std::cout << rows.dump(2) << '\n';
  }
  return any_mismatch ? kExitMismatch : kExitOk;
}

int cmd_entanglement(const std::string& state, const std::string& format) {
  const auto values = parse_numbers(state);
  if (values.size() != 8) {
    throw CLI::ValidationError(
        "--state expects 8 comma-separated numbers (re,im x4)");
  }
  TwoQubitState s;
  for (int i = 0; i < 4; ++i) {
    s.c(i) = Complex(values[2 * i], values[2 * i + 1]);
  }
  const Complex det = entanglement_determinant(s);
  const bool entangled = std::abs(det) > 1e-10;
  if (format == "json") {
    Json j;
    j["determinant"] = complex_to_json(det);
    j["abs_determinant"] = std::abs(det);
    j["verdict"] = entangled ? "entangled" : "product";
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "det = " << det.real();
    if (std::abs(det.imag()) > 0) std::cout << " + " << det.imag() << "i";
    std::cout << "  |det| = " << std::abs(det) << '\n'
              << (entangled ? "entangled" : "product") << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit entangled bases and generalized teleportation"};
  app.require_subcommand(1);

  std::string format = "text";

  // basis validate | basis show
  auto* basis_cmd = app.add_subcommand("basis", "basis inspection");
  basis_cmd->require_subcommand(1);
  BasisSource validate_src, show_src;
  auto* validate_cmd =
      basis_cmd->add_subcommand("validate", "check the basis conditions");
  add_basis_flags(validate_cmd, validate_src);
  validate_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));
  auto* show_cmd =
      basis_cmd->add_subcommand("show", "print matrices and transform");
  add_basis_flags(show_cmd, show_src);
  show_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  // teleport
  auto* teleport_cmd = app.add_subcommand("teleport", "run teleportation");
  BasisSource teleport_src;
  add_basis_flags(teleport_cmd, teleport_src);
  int index = 0;
  std::string state;
  std::uint64_t shots = 10000, seed = 0;
  std::string mode = "exact";
  teleport_cmd->add_option("--index", index, "sender basis index 0..3");
  teleport_cmd->add_option("--state", state, "payload re,im,re,im")
      ->required();
  teleport_cmd->add_option("--shots", shots, "measurement samples");
  teleport_cmd->add_option("--seed", seed, "sampling seed");
  teleport_cmd->add_option("--mode", mode)
      ->check(CLI::IsMember({"exact", "unitary"}));
  teleport_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  // circuit verify
  auto* circuit_cmd = app.add_subcommand("circuit", "circuit catalog");
  circuit_cmd->require_subcommand(1);
  auto* verify_cmd =
      circuit_cmd->add_subcommand("verify", "check figure circuits");
  bool all = false;
  std::string circuit_id;
  double theta = 0.7853981633974483, lambda = 2.0;
  int mindex = 0;
  verify_cmd->add_flag("--all", all, "verify the whole catalog");
  auto* id_opt = verify_cmd->add_option("--id", circuit_id, "catalog id");
  verify_cmd->add_option("--theta", theta, "theta binding (radians)");
  verify_cmd->add_option("--lambda", lambda, "lambda binding");
  verify_cmd->add_option("--index", mindex, "M_matrix basis index");
  verify_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  // entanglement
  auto* ent_cmd =
      app.add_subcommand("entanglement", "product-vs-entangled check");
  std::string ent_state;
  ent_cmd->add_option("--state", ent_state, "amplitudes re,im x4")
      ->required();
  ent_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) {
      return cmd_basis_validate(validate_src, format);
    }
    if (show_cmd->parsed()) {
      return cmd_basis_show(show_src, format);
    }
    if (teleport_cmd->parsed()) {
      return cmd_teleport(teleport_src, index, state, shots, seed, mode,
                          format);
    }
    if (verify_cmd->parsed()) {
      if (!all && id_opt->count() == 0) {
        std::cerr << "circuit verify requires --all or --id\n";
        return kExitUsage;
      }
      return cmd_circuit_verify(all, circuit_id, theta, lambda, mindex,
                                format);
    }
    if (ent_cmd->parsed()) {
      return cmd_entanglement(ent_state, format);
    }
  } catch (const UnknownCircuit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidBasis& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ParamOutOfRange& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const UnnormalizedInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
