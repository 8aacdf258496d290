#include "stslab/code_io.hpp"

#include <fstream>

#include "stslab/errors.hpp"

namespace stslab {

using nlohmann::json;

json code_to_json(const StabilizerCode& code) {
  json j;
  j["n_qubits"] = code.n_qubits();
  json gens = json::array();
  for (const auto& g : code.generators()) gens.push_back(g.to_string());
  j["generators"] = gens;
  return j;
}

json lattice_code_to_json(const LatticeCode& lc) {
  json j = code_to_json(lc.code);
  j["family"] = lc.family;
  j["D"] = lc.D;
  if (lc.family == "toric") j["m"] = lc.m;
  j["layout"] = {{"dims", lc.layout.n()}, {"v", lc.layout.v()}};
  return j;
}

StabilizerCode code_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n_qubits") || !j.contains("generators"))
    throw ValidationError("code spec needs n_qubits and generators");
  const auto n = j.at("n_qubits").get<std::size_t>();
  std::vector<PauliOperator> gens;
  for (const auto& s : j.at("generators")) {
    auto p = PauliOperator::parse(s.get<std::string>());
    if (p.n_qubits() != n)
      throw ValidationError("generator '" + s.get<std::string>() + "' does not have n_qubits characters");
    gens.push_back(std::move(p));
  }
  StabilizerCode code(n, std::move(gens));
  require_valid(code);
  return code;
}

std::optional<LatticeLayout> layout_from_json(const json& j) {
  if (!j.contains("layout")) return std::nullopt;
  const auto& l = j.at("layout");
  LatticeLayout layout(l.at("dims").get<std::vector<std::size_t>>(), l.value("v", std::size_t{1}));
  if (j.contains("n_qubits") && layout.n_qubits() != j.at("n_qubits").get<std::size_t>())
    throw ValidationError("layout size does not match n_qubits");
  return layout;
}

LatticeCode lattice_from_spec(const json& spec) {
  const std::string family = spec.at("family").get<std::string>();
  std::vector<std::size_t> dims;
  if (spec.contains("dims")) {
    dims = spec.at("dims").get<std::vector<std::size_t>>();
  } else if (spec.contains("L")) {
    const auto D = spec.at("D").get<std::size_t>();
    dims.assign(D, spec.at("L").get<std::size_t>());
  } else {
    throw ValidationError("lattice spec needs dims or D and L");
  }
  if (spec.contains("D") && spec.at("D").get<std::size_t>() != dims.size())
    throw ValidationError("D does not match the number of dims");
  if (family == "ising") return build_ising(dims.size(), dims);
  if (family == "toric") return build_toric(dims.size(), spec.at("m").get<std::size_t>(), dims);
  throw ValidationError("unknown family '" + family + "'");
}

LatticeCode load_any(const json& j) {
  if (j.contains("family") && !j.contains("generators")) return lattice_from_spec(j);
  LatticeCode lc;
  lc.code = code_from_json(j);
  lc.family = j.value("family", std::string("custom"));
  if (auto layout = layout_from_json(j)) {
    lc.layout = *layout;
  } else {
    lc.layout = LatticeLayout({1}, lc.code.n_qubits());
  }
  lc.D = j.value("D", lc.layout.D());
  lc.m = j.value("m", std::size_t{0});
  return lc;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace stslab
