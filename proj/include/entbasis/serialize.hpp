#pragma once

#include <string>

#include <json.hpp>

#include "entbasis/basis.hpp"
#include "entbasis/circuit.hpp"
#include "entbasis/teleport.hpp"

namespace entbasis {

// Complex numbers serialize as [re, im]; matrices row-major.
using Json = nlohmann::ordered_json;

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json mat2_to_json(const Mat2& m);
Mat2 mat2_from_json(const Json& j);

Json basis_to_json(const EntangledBasis& basis);

/// Parses the basis file schema. Throws nlohmann::json::exception on
/// malformed input and InvalidBasis (with the report attached to the
/// message) when validation fails.
EntangledBasis basis_from_json(const Json& j);
EntangledBasis load_basis_file(const std::string& path);

Json validation_report_to_json(const ValidationReport& report);
Json teleport_run_to_json(const TeleportRun& run);
Json equivalence_report_to_json(const EquivalenceReport& report);

std::string validation_report_to_text(const ValidationReport& report);

}  // namespace entbasis
