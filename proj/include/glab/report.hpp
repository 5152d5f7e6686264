#pragma once

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "glab/lefschetz.hpp"
#include "glab/topology.hpp"

namespace glab {

using Json = nlohmann::ordered_json;

inline Json to_json(const Face& f) {
    Json a = Json::array();
    for (VertexId v : f) a.push_back(v);
    return a;
}

inline Json to_json(const TopologyReport& r) {
    Json j;
    j["is_pure"] = r.is_pure;
    j["is_pseudomanifold"] = r.is_pseudomanifold;
    j["is_normal"] = r.is_normal;
    j["normal_including_empty_face"] = r.normal_including_empty_face;
    j["is_orientable_over_f2"] = r.is_orientable_over_f2;
    j["betti_f2"] = r.betti_f2;
    j["is_homology_sphere_f2"] = r.is_homology_sphere_f2;
    j["absorbed_nonmaximal_facets"] = r.absorbed_nonmaximal_facets;
    return j;
}

inline Json to_json(const TrialValue& t) {
    Json j;
    j["seed"] = t.seed;
    j["lhs"] = t.lhs;
    j["rhs"] = t.rhs;
    j["equal"] = t.equal;
    j["nonzero"] = t.nonzero;
    return j;
}

inline Json to_json(const IdentityCheck& c) {
    Json j;
    j["kind"] = c.kind;
    Json faces;
    faces["sigma"] = to_json(c.sigma);
    faces["gamma"] = to_json(c.gamma);
    faces["tau"] = to_json(c.tau);
    if (c.p) faces["p"] = *c.p;
    if (c.eta) faces["eta"] = to_json(*c.eta);
    j["faces"] = faces;
    Json seeds = Json::array();
    Json values = Json::array();
    for (auto& t : c.trials) {
        seeds.push_back(t.seed);
        values.push_back(to_json(t));
    }
    j["seeds"] = seeds;
    Json bounds;
    bounds["total_degree"] = c.degree_bound;
    bounds["field_bits"] = c.field_bits;
    j["degree_bounds"] = bounds;
    j["values_hex"] = values;
    if (!c.vanishing_trials.empty()) {
        Json v = Json::array();
        for (auto& t : c.vanishing_trials) v.push_back(to_json(t));
        j["vanishing_values_hex"] = v;
    }
    if (!c.note.empty()) j["note"] = c.note;
    j["passed"] = c.passed;
    return j;
}

inline Json to_json(const AnisotropyCertificate& c) {
    Json j;
    j["kind"] = "anisotropy";
    Json faces;
    faces["gamma"] = to_json(c.gamma);
    faces["tau"] = to_json(c.tau);
    faces["sigma"] = to_json(c.sigma);
    if (c.p) faces["p"] = *c.p;
    j["faces"] = faces;
    Json seeds = Json::array();
    Json values = Json::array();
    for (auto& t : c.trials) {
        seeds.push_back(t.seed);
        values.push_back(to_json(t));
    }
    j["seeds"] = seeds;
    Json bounds;
    bounds["total_degree"] = c.degree_bound;
    bounds["field_bits"] = c.field_bits;
    // per-trial false-zero probability is at most total_degree / 2^field_bits
    bounds["log2_failure_bound"] =
        (double)std::log2((double)std::max(1L, c.degree_bound)) - (double)c.field_bits;
    j["degree_bounds"] = bounds;
    j["values_hex"] = values;
    j["class"] = c.u_repr;
    j["witness_value"] = c.witness_value;
    if (!c.note.empty()) j["note"] = c.note;
    j["passed"] = c.passed;
    return j;
}

inline Json to_json(const LefschetzRow& r) {
    Json j;
    j["m"] = r.m;
    j["rank"] = r.rank;
    j["dim_from"] = r.dim_from;
    j["dim_to"] = r.dim_to;
    j["ok"] = r.ok;
    return j;
}

inline Json to_json(const LefschetzReport& r) {
    Json j;
    j["kind"] = "lefschetz";
    j["mode"] = r.mode;
    j["element"] = r.element;
    j["seeds"] = r.seeds;
    Json trials = Json::array();
    for (auto& rows : r.trials) {
        Json t = Json::array();
        for (auto& row : rows) t.push_back(to_json(row));
        trials.push_back(t);
    }
    j["trials"] = trials;
    Json elems = Json::array();
    for (auto& ec : r.element_coeffs) {
        Json e;
        for (auto& [v, c] : ec) e[std::to_string(v)] = c;
        elems.push_back(e);
    }
    j["element_coeffs"] = elems;
    j["passed"] = r.passed;
    return j;
}

inline Json to_json(const GReport& g) {
    Json j;
    j["kind"] = "g_report";
    j["h_vector"] = g.h;
    j["unimodal"] = g.unimodal;
    j["weak_lefschetz"] = to_json(g.weak);
    j["passed"] = g.passed;
    return j;
}

} // namespace glab
