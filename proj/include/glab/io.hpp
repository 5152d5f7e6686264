#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "glab/builtins.hpp"
#include "glab/complex.hpp"
#include "glab/monomial.hpp"

namespace glab {

// JSON document {"facets": [[int,...],...]} or line-oriented text (one facet
// per line, space-separated vertex labels); the format is sniffed
inline SimplicialComplex parse_complex_text(const std::string& text) {
    auto start = text.find_first_not_of(" \t\r\n");
    std::vector<std::vector<VertexId>> facets;
    if (start != std::string::npos && text[start] == '{') {
        auto j = nlohmann::json::parse(text);
        if (!j.contains("facets") || !j["facets"].is_array())
            throw std::invalid_argument("missing \"facets\" array");
        for (auto& f : j["facets"]) {
            std::vector<VertexId> vs;
            for (auto& v : f) vs.push_back(v.get<VertexId>());
            facets.push_back(vs);
        }
    } else {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::vector<VertexId> vs;
            VertexId v;
            while (ls >> v) vs.push_back(v);
            if (!vs.empty()) facets.push_back(vs);
        }
    }
    return build_complex(facets);
}

inline SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_complex_text(ss.str());
}

// "v:exp,v:exp,..."
inline Monomial parse_monomial(const std::string& s) {
    std::vector<std::pair<VertexId, int>> e;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        auto colon = part.find(':');
        if (colon == std::string::npos) {
            e.emplace_back(std::stoi(part), 1);
        } else {
            e.emplace_back(std::stoi(part.substr(0, colon)),
                           std::stoi(part.substr(colon + 1)));
        }
    }
    return Monomial(std::move(e));
}

// "1,2,5" -> face
inline Face parse_face(const std::string& s) {
    std::vector<VertexId> vs;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (!part.empty()) vs.push_back(std::stoi(part));
    }
    return Face(std::move(vs));
}

} // namespace glab
