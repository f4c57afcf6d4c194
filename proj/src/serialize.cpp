#include "entbasis/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace entbasis {

Json complex_to_json(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Json::type_error::create(302, "complex value must be [re, im]",
                                   &j);
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json mat2_to_json(const Mat2& m) {
  return Json::array(
      {Json::array({complex_to_json(m(0, 0)), complex_to_json(m(0, 1))}),
       Json::array({complex_to_json(m(1, 0)), complex_to_json(m(1, 1))})});
}

Mat2 mat2_from_json(const Json& j) {
  Mat2 m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      m(r, c) = complex_from_json(j.at(r).at(c));
    }
  }
  return m;
}

Json basis_to_json(const EntangledBasis& basis) {
  Json j;
  j["name"] = basis.name;
  j["params"] = Json::object();
  for (const auto& [key, value] : basis.params) j["params"][key] = value;
  j["matrices"] = Json::array();
  for (const Mat2& m : basis.matrices) j["matrices"].push_back(mat2_to_json(m));
  return j;
}

EntangledBasis basis_from_json(const Json& j) {
  EntangledBasis basis;
  basis.name = j.at("name").get<std::string>();
  if (j.contains("params")) {
    for (const auto& [key, value] : j.at("params").items()) {
      basis.params[key] = value.get<double>();
    }
  }
  const Json& mats = j.at("matrices");
  if (!mats.is_array() || mats.size() != 4) {
    throw Json::type_error::create(302, "expected exactly 4 matrices", &j);
  }
  for (int i = 0; i < 4; ++i) basis.matrices[i] = mat2_from_json(mats[i]);
  const ValidationReport report = validate_basis(basis.matrices);
  if (!report.pass()) {
    throw InvalidBasis("basis '" + basis.name + "' fails validation\n" +
                       validation_report_to_text(report));
  }
  return basis;
}

EntangledBasis load_basis_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot open basis file: " + path);
  }
  return basis_from_json(Json::parse(in));
}

Json validation_report_to_json(const ValidationReport& report) {
  Json j;
  j["determinants"] = Json::array();
  for (int i = 0; i < 4; ++i) {
    j["determinants"].push_back(
        {{"index", i}, {"abs_det", report.abs_det[i]}, {"pass", report.det_ok[i]}});
  }
  j["gram"] = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) row.push_back(complex_to_json(report.gram(r, c)));
    j["gram"].push_back(row);
  }
  j["max_gram_deviation"] = report.max_gram_dev;
  j["pass"] = report.pass();
  return j;
}

std::string validation_report_to_text(const ValidationReport& report) {
  std::ostringstream out;
  for (int i = 0; i < 4; ++i) {
    out << "A_" << i << ": |det| = "
        << report.abs_det[i] << (report.det_ok[i] ? "  ok" : "  FAIL")
        << '\n';
  }
  out << "max |Gram - I| = " << report.max_gram_dev
      << (report.gram_pass() ? "  ok" : "  FAIL") << '\n';
  out << (report.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

namespace {

Json fidelity_array(const std::array<double, 4>& values) {
  Json arr = Json::array();
  for (double v : values) {
    if (std::isnan(v)) {
      arr.push_back(nullptr);
    } else {
      arr.push_back(v);
    }
  }
  return arr;
}

}  // namespace

Json teleport_run_to_json(const TeleportRun& run) {
  Json j;
  j["basis"] = {{"name", run.basis_name}, {"params", Json::object()}};
  for (const auto& [key, value] : run.basis_params) {
    j["basis"]["params"][key] = value;
  }
  j["sender_index"] = run.sender_index;
  j["input"] = Json::array(
      {complex_to_json(run.input(0)), complex_to_json(run.input(1))});
  j["branches"] = Json::array();
  for (const Branch& b : run.branches) {
    j["branches"].push_back(
        {{"k", b.k},
         {"gamma_prime", Json::array({complex_to_json(b.gamma_prime(0)),
                                      complex_to_json(b.gamma_prime(1))})},
         {"probability", b.probability}});
  }
  j["corrections"] = Json::array();
  for (const CorrectionMap& c : run.corrections) {
    j["corrections"].push_back({{"exact", mat2_to_json(c.exact)},
                                {"unitary", mat2_to_json(c.unitary)},
                                {"scale", c.scale}});
  }
  j["fidelity_exact"] = fidelity_array(run.fidelity_exact);
  j["fidelity_unitary"] = fidelity_array(run.fidelity_unitary);
  j["mode"] = run.mode == CorrectionMode::exact ? "exact" : "unitary";
  j["shots"] = run.shots;
  j["seed"] = run.seed;
  j["counts"] = run.counts;
  return j;
}

Json equivalence_report_to_json(const EquivalenceReport& report) {
  Json j;
  j["id"] = report.id;
  j["verdict"] = verdict_name(report.verdict);
  j["max_amp_error"] = report.max_amp_error;
  if (report.global_phase) {
    j["global_phase"] = complex_to_json(*report.global_phase);
  } else {
    j["global_phase"] = nullptr;
  }
  Json claimed = Json::array(), produced = Json::array();
  for (int i = 0; i < 4; ++i) {
    claimed.push_back(complex_to_json(report.claimed(i)));
    produced.push_back(complex_to_json(report.produced(i)));
  }
  j["claimed"] = claimed;
  j["produced"] = produced;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

}  // namespace entbasis
