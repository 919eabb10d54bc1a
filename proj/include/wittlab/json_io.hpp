#pragma once

#include <json.hpp>

#include "wittlab/homology.hpp"
#include "wittlab/hvector.hpp"
#include "wittlab/quadratic_module.hpp"
#include "wittlab/simplicial_complex.hpp"

namespace wittlab {

using nlohmann::json;

// Integers are serialised as decimal strings so arbitrary precision survives
// the trip; parsing accepts plain JSON numbers as well.

inline Int json_to_int(const json& j) {
    if (j.is_string()) return parse_int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw input_error("expected an integer or decimal string");
}

inline json int_to_json(const Int& v) { return json(to_string(v)); }

inline json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat json_to_mat(const json& j) {
    if (!j.is_array()) throw input_error("matrix must be an array of rows");
    const int rows = static_cast<int>(j.size());
    int cols = rows > 0 ? static_cast<int>(j[0].size()) : 0;
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols) throw input_error("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(r, c) = json_to_int(j[r][c]);
    }
    return m;
}

inline json vec_to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

inline IntVec json_to_vec(const json& j) {
    if (!j.is_array()) throw input_error("vector must be an array");
    IntVec v;
    for (const auto& e : j) v.push_back(json_to_int(e));
    return v;
}

inline json module_to_json(const QuadraticModule& m) {
    json j;
    j["epsilon"] = m.param.epsilon();
    j["lambda"] = to_string(m.param.lambda_sub());
    j["gram"] = mat_to_json(m.gram);
    json mu = json::array();
    for (const MuValue& v : m.mu) mu.push_back(int_to_json(v.value()));
    j["mu"] = std::move(mu);
    return j;
}

inline QuadraticModule json_to_module(const json& j) {
    int eps = j.at("epsilon").get<int>();
    std::string ls = j.at("lambda").get<std::string>();
    LambdaSub lambda;
    if (ls == "zero") lambda = LambdaSub::zero;
    else if (ls == "even") lambda = LambdaSub::even;
    else if (ls == "all") lambda = LambdaSub::all;
    else throw input_error("lambda must be \"zero\", \"even\" or \"all\"");
    FormParameter param(eps, lambda);
    Mat gram = json_to_mat(j.at("gram"));
    if (gram.rows() != gram.cols()) throw input_error("gram matrix must be square");
    std::vector<MuValue> mu;
    if (j.contains("mu"))
        for (const auto& e : j.at("mu")) mu.emplace_back(lambda, json_to_int(e));
    else
        mu.assign(gram.rows(), MuValue::zero(lambda));
    if (static_cast<int>(mu.size()) != gram.rows())
        throw input_error("mu length does not match gram rank");
    return {param, gram.rows(), std::move(gram), std::move(mu)};
}

inline json morphism_to_json(const QModMorphism& f) {
    json j;
    j["matrix"] = mat_to_json(f.matrix);
    return j;
}

inline json complex_to_json(const SimplicialComplex& x) {
    json j;
    j["vertices"] = json(std::to_string(x.vertex_count()));
    j["flag"] = x.is_flag();
    json facets = json::array();
    for (const Face& f : x.facets()) {
        json ff = json::array();
        for (int v : f) ff.push_back(json(std::to_string(v)));
        facets.push_back(std::move(ff));
    }
    j["facets"] = std::move(facets);
    if (x.is_flag()) {
        json edges = json::array();
        for (const Face& e : x.faces_of_dim(1)) {
            json ee = json::array();
            ee.push_back(json(std::to_string(e[0])));
            ee.push_back(json(std::to_string(e[1])));
            edges.push_back(std::move(ee));
        }
        j["edges"] = std::move(edges);
    }
    return j;
}

inline SimplicialComplex json_to_complex(const json& j) {
    int n = static_cast<int>(json_to_int(j.at("vertices")));
    bool flag = j.value("flag", false);
    if (flag && j.contains("edges")) {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(static_cast<int>(json_to_int(e[0])),
                               static_cast<int>(json_to_int(e[1])));
        return SimplicialComplex::flag_from_graph(n, edges);
    }
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) {
        Face face;
        for (const auto& v : f) face.push_back(static_cast<int>(json_to_int(v)));
        facets.push_back(std::move(face));
    }
    return SimplicialComplex::from_facets(n, facets);
}

inline json homology_to_json(const HomologyReport& rep) {
    json arr = json::array();
    for (const auto& d : rep.degrees) {
        json e;
        e["degree"] = json(std::to_string(d.degree));
        e["betti"] = json(std::to_string(d.betti));
        json tor = json::array();
        for (const Int& t : d.torsion) tor.push_back(int_to_json(t));
        e["torsion"] = std::move(tor);
        arr.push_back(std::move(e));
    }
    return arr;
}

inline json hvector_to_json(const HVector& v) { return vec_to_json(v.coords); }

inline json move_to_json(const ElementaryMove& m) {
    json j;
    switch (m.kind) {
        case ElementaryMove::Kind::rot:
            j["move"] = "rot";
            j["block"] = m.block_i;
            j["sign"] = m.sign;
            break;
        case ElementaryMove::Kind::shear:
            j["move"] = "shear";
            j["block"] = m.block_i;
            j["dir"] = m.sign;
            break;
        case ElementaryMove::Kind::cross:
        case ElementaryMove::Kind::final_composite:
        case ElementaryMove::Kind::swap_blocks:
            j["move"] = move_name(m);
            j["i"] = m.block_i;
            j["j"] = m.block_j;
            break;
    }
    return j;
}

inline json word_to_json(const MoveWord& w) {
    json arr = json::array();
    for (const ElementaryMove& m : w) arr.push_back(move_to_json(m));
    return arr;
}

inline ElementaryMove json_to_move(const json& j) {
    std::string name = j.at("move").get<std::string>();
    using K = ElementaryMove::Kind;
    if (name == "rot") return {K::rot, j.at("block").get<int>(), 0, j.at("sign").get<int>()};
    if (name == "shear") return {K::shear, j.at("block").get<int>(), 0, j.at("dir").get<int>()};
    K kind;
    if (name == "cross") kind = K::cross;
    else if (name == "final") kind = K::final_composite;
    else if (name == "swap") kind = K::swap_blocks;
    else throw input_error("unknown move kind: " + name);
    return {kind, j.at("i").get<int>(), j.at("j").get<int>(), +1};
}

}  // namespace wittlab
