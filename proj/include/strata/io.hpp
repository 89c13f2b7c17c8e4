#pragma once

#include "strata/complex.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace strata {

/// Parses the input document
///   { "name": "...", "maximal_simplices": [[0,1,2], ...] }
/// and returns the face closure of the listed simplices. An optional
/// "type" key must be "simplicial"; other cell-complex formats are rejected.
SimplicialComplex parse_complex(std::string_view text);
SimplicialComplex complex_from_json(const nlohmann::json& doc);

/// Inverse of parse_complex: name plus the maximal simplices in lexicographic
/// order.
nlohmann::json complex_to_json(const SimplicialComplex& complex);
std::string serialize_complex(const SimplicialComplex& complex);

SimplicialComplex load_complex(const std::string& path);

} // namespace strata
