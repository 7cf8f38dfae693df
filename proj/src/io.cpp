// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include "qgsynth/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qgsynth/errors.hpp"

namespace qgsynth {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

template <typename T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad field '") + key + "': " + e.what());
    }
}

std::vector<cplx> complex_vector(const json& j, std::size_t expect) {
    auto re = field<std::vector<double>>(j, "re");
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("im")) im = field<std::vector<double>>(j, "im");
    if (re.size() != expect || im.size() != expect) throw ParseError("amplitude list has the wrong length");
    std::vector<cplx> out(expect);
    for (std::size_t i = 0; i < expect; ++i) out[i] = {re[i], im[i]};
    return out;
}

std::vector<cplx> complex_matrix(const json& j, std::size_t dim) {
    auto re = field<std::vector<std::vector<double>>>(j, "re");
    std::vector<std::vector<double>> im;
    if (j.contains("im")) im = field<std::vector<std::vector<double>>>(j, "im");
    if (re.size() != dim || (!im.empty() && im.size() != dim)) throw ParseError("matrix has the wrong row count");
    std::vector<cplx> out(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        if (re[r].size() != dim || (!im.empty() && im[r].size() != dim))
            throw ParseError("matrix has the wrong column count");
        for (std::size_t c = 0; c < dim; ++c) out[r * dim + c] = {re[r][c], im.empty() ? 0.0 : im[r][c]};
    }
    return out;
}

json matrix_json(const std::vector<cplx>& m, std::size_t dim) {
    json re = json::array(), im = json::array();
    for (std::size_t r = 0; r < dim; ++r) {
        std::vector<double> a(dim), b(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            a[c] = m[r * dim + c].real();
            b[c] = m[r * dim + c].imag();
        }
        re.push_back(a);
        im.push_back(b);
    }
    return {{"re", re}, {"im", im}};
}

int checked_n(const json& j, int hi) {
    const int n = field<int>(j, "n");
    if (n < 1 || n > hi) throw InvalidParameters("n out of range");
    return n;
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

Graph parse_graph(const std::string& text) {
    const json j = parse_json(text);
    const auto kind = field<std::string>(j, "kind");
    Graph g;
    if (kind == "path") {
        g = path_graph(field<int>(j, "n"));
    } else if (kind == "grid") {
        g = grid_graph(field<std::vector<int>>(j, "dims"));
    } else if (kind == "tree") {
        const int arity = j.contains("arity") ? field<int>(j, "arity") : 2;
        g = j.contains("depth") ? tree_graph_depth(arity, field<int>(j, "depth")) : tree_graph(arity, field<int>(j, "n"));
    } else if (kind == "star") {
        g = star_graph(field<int>(j, "n"));
    } else if (kind == "complete") {
        g = complete_graph(field<int>(j, "n"));
    } else if (kind == "brickwall") {
        g = brickwall_graph(field<int>(j, "n1"), field<int>(j, "n2"), field<int>(j, "b1"), field<int>(j, "b2"));
    } else if (kind == "explicit") {
        const int n = field<int>(j, "n");
        std::vector<Edge> edges;
        for (const auto& e : field<std::vector<std::vector<int>>>(j, "edges")) {
            if (e.size() != 2) throw ParseError("edges are vertex pairs");
            if (e[0] < 1 || e[0] > n || e[1] < 1 || e[1] > n) throw InvalidParameters("edge references a missing vertex");
            edges.push_back({e[0] - 1, e[1] - 1});
        }
        g = explicit_graph(n, edges);
    } else {
        throw ParseError("unknown graph kind '" + kind + "'");
    }
    if (g.size() < 1) throw InvalidParameters("graph needs at least one vertex");
    if (!is_connected(g)) throw DisconnectedGraph("graph is not connected");
    return g;
}

std::string encode_graph(const Graph& g) {
    json j;
    j["kind"] = kind_name(g.kind());
    j["n"] = g.size();
    if (!g.dims.empty()) j["dims"] = g.dims;
    if (g.kind() == GraphKind::Tree) j["arity"] = g.arity;
    if (g.kind() == GraphKind::Brickwall) {
        j["n1"] = g.brick.n1;
        j["n2"] = g.brick.n2;
        j["b1"] = g.brick.b1;
        j["b2"] = g.brick.b2;
    }
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
    j["edges"] = edges;
    return j.dump();
}

DiagonalSpec parse_angles(const std::string& text) {
    const json j = parse_json(text);
    DiagonalSpec d;
    d.n = checked_n(j, 24);
    auto theta = field<std::vector<double>>(j, "theta");
    if (theta.size() != (std::size_t{1} << d.n)) throw ParseError("theta needs 2^n entries");
    return normalize_diagonal(d.n, theta);
}

std::string encode_angles(const DiagonalSpec& d) { return json{{"n", d.n}, {"theta", d.theta}}.dump(); }

StateSpec parse_state(const std::string& text) {
    const json j = parse_json(text);
    StateSpec s;
    s.n = checked_n(j, 24);
    s.amp = complex_vector(j, std::size_t{1} << s.n);
    return s;
}

std::string encode_state(const StateSpec& s) {
    std::vector<double> re, im;
    for (auto a : s.amp) {
        re.push_back(a.real());
        im.push_back(a.imag());
    }
    return json{{"n", s.n}, {"re", re}, {"im", im}}.dump();
}

UnitarySpec parse_unitary(const std::string& text) {
    const json j = parse_json(text);
    UnitarySpec u;
    u.n = checked_n(j, 10);
    u.m = complex_matrix(j, std::size_t{1} << u.n);
    return u;
}

std::string encode_unitary(const UnitarySpec& u) {
    json j = matrix_json(u.m, std::size_t{1} << u.n);
    j["n"] = u.n;
    return j.dump();
}

UcgSpec parse_ucg(const std::string& text) {
    const json j = parse_json(text);
    UcgSpec u;
    u.n = checked_n(j, 20);
    if (j.contains("target")) {
        u.target = field<int>(j, "target") - 1;
        if (u.target < 0 || u.target >= u.n) throw InvalidParameters("target out of range");
    }
    const auto& br = j.at("branches");
    if (!br.is_array() || br.size() != (std::size_t{1} << (u.n - 1))) throw ParseError("UCG needs 2^(n-1) branches");
    for (const auto& b : br) {
        auto m = complex_matrix(b, 2);
        u.branches.push_back({m[0], m[1], m[2], m[3]});
    }
    return u;
}

std::string encode_ucg(const UcgSpec& u) {
    json br = json::array();
    for (const auto& b : u.branches) br.push_back(matrix_json({b[0], b[1], b[2], b[3]}, 2));
    return json{{"n", u.n}, {"target", u.target_qubit() + 1}, {"branches", br}}.dump();
}

}  // namespace qgsynth
