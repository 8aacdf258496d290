#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "stslab/lattice.hpp"
#include "stslab/stabilizer_code.hpp"

namespace stslab {

// {"n_qubits": N, "generators": ["ZZI...", ...]} plus an optional "layout": {"dims": [...], "v": v}.
nlohmann::json code_to_json(const StabilizerCode& code);
nlohmann::json lattice_code_to_json(const LatticeCode& lc);

// Parses and validates a code spec. Throws ValidationError on invalid codes.
StabilizerCode code_from_json(const nlohmann::json& j);
// Layout from the optional "layout" member, if present and consistent with the code size.
std::optional<LatticeLayout> layout_from_json(const nlohmann::json& j);

// {"family":"toric","D":3,"m":1,"L":3} or {"family":"ising","dims":[4,4]}.
LatticeCode lattice_from_spec(const nlohmann::json& spec);

// Either a lattice spec or a code spec (with or without layout). Codes without a layout get a
// one-dimensional layout with a single particle holding all qubits.
LatticeCode load_any(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);

}  // namespace stslab
