#include "strata/io.hpp"

#include "strata/errors.hpp"

#include <fstream>
#include <sstream>

namespace strata {

using nlohmann::json;

SimplicialComplex parse_complex(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return complex_from_json(doc);
}

SimplicialComplex complex_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("input must be a JSON object");
    if (doc.contains("type")) {
        if (!doc["type"].is_string() || doc["type"].get<std::string>() != "simplicial")
            throw ParseError("only abstract simplicial complexes are accepted as input");
    }
    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
        name = doc["name"].get<std::string>();
    }
    if (!doc.contains("maximal_simplices")) throw ParseError("missing \"maximal_simplices\"");
    const auto& list = doc["maximal_simplices"];
    if (!list.is_array()) throw ParseError("\"maximal_simplices\" must be an array");

    std::vector<Simplex> simplices;
    simplices.reserve(list.size());
    for (const auto& entry : list) {
        if (!entry.is_array() || entry.empty())
            throw ParseError("each simplex must be a non-empty array of vertex ids");
        std::vector<Vertex> v;
        for (const auto& x : entry) {
            if (!x.is_number_integer()) throw ParseError("vertex ids must be integers");
            if (x.is_number_unsigned()) {
                const auto u = x.get<std::uint64_t>();
                if (u > static_cast<std::uint64_t>(INT64_MAX))
                    throw ParseError("vertex id out of range");
                v.push_back(static_cast<Vertex>(u));
            } else {
                const auto s = x.get<std::int64_t>();
                if (s < 0) throw ParseError("vertex ids must be non-negative");
                v.push_back(s);
            }
        }
        try {
            simplices.push_back(Simplex::from_unsorted(std::move(v)));
        } catch (const ArgumentError& e) {
            throw ParseError(std::string("invalid simplex: ") + e.what());
        }
    }
    return SimplicialComplex::from_maximal(std::move(name), simplices);
}

json complex_to_json(const SimplicialComplex& complex) {
    json simplices = json::array();
    for (const auto& s : complex.maximal_simplices()) {
        json row = json::array();
        for (Vertex v : s.vertices()) row.push_back(v);
        simplices.push_back(std::move(row));
    }
    return json{{"name", complex.name()}, {"maximal_simplices", std::move(simplices)}};
}

std::string serialize_complex(const SimplicialComplex& complex) {
    return complex_to_json(complex).dump();
}

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str());
}

} // namespace strata
