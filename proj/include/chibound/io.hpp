// File formats: DIMACS coloring files and JSON for graphs, class reports,
// bound certificates, and lemma reports. External formats are 1-indexed;
// everything in memory stays 0-indexed, and the converters own the shift.
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chibound/color.hpp"
#include "chibound/graph.hpp"
#include "chibound/harness.hpp"
#include "chibound/recognize.hpp"

namespace chibound {

using nlohmann::json;

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& origin, int line, const std::string& msg)
        : std::runtime_error(origin + ":" + std::to_string(line) + ": " + msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// DIMACS coloring format: optional "c" comment lines, one "p edge <n> <m>"
// header, then m lines "e <u> <v>" with 1-indexed endpoints.
inline Graph parse_dimacs(std::istream& in, const std::string& origin = "<input>") {
    std::string line;
    int lineno = 0;
    int n = -1;
    long declared = -1, seen = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw parse_error(origin, lineno, "second problem line");
            std::string kind;
            if (!(ls >> kind >> n >> declared) || kind != "edge" || n < 0 || declared < 0)
                throw parse_error(origin, lineno,
                                  "problem line must read \"p edge <n> <m>\"");
            continue;
        }
        if (tag == "e") {
            if (n < 0)
                throw parse_error(origin, lineno, "edge before the problem line");
            int u = 0, v = 0;
            if (!(ls >> u >> v))
                throw parse_error(origin, lineno, "edge line must read \"e <u> <v>\"");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(origin, lineno,
                                  "endpoint out of range 1.." + std::to_string(n));
            if (u == v) throw parse_error(origin, lineno, "loop edge");
            edges.emplace_back(u - 1, v - 1);
            ++seen;
            continue;
        }
        throw parse_error(origin, lineno, "unknown line tag \"" + tag + "\"");
    }
    if (n < 0) throw parse_error(origin, lineno, "missing problem line");
    if (seen != declared)
        throw parse_error(origin, lineno,
                          "header declares " + std::to_string(declared) +
                              " edges but file has " + std::to_string(seen));
    return Graph(n, edges);
}

inline std::string emit_dimacs(const Graph& g) {
    auto edges = g.edge_list();
    std::ostringstream out;
    out << "p edge " << g.n() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back({u + 1, v + 1});
    return {{"n", g.n()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j, const std::string& origin = "<input>") {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw parse_error(origin, 1, "graph JSON needs \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    if (n < 0) throw parse_error(origin, 1, "negative vertex count");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error(origin, 1, "each edge must be a pair");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw parse_error(origin, 1,
                              "bad edge [" + std::to_string(u) + "," +
                                  std::to_string(v) + "]");
        edges.emplace_back(u - 1, v - 1);
    }
    return Graph(n, edges);
}

// Reads a graph file, dispatching on the extension: .json is the structured
// format, anything else is DIMACS.
inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    if (std::filesystem::path(path).extension() == ".json") {
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw parse_error(path, 1, e.what());
        }
        return graph_from_json(j, path);
    }
    return parse_dimacs(in, path);
}

namespace detail {

inline json one_indexed(const std::vector<int>& vs) {
    json a = json::array();
    for (int v : vs) a.push_back(v + 1);
    return a;
}

inline json one_indexed(const VertexSet& s) {
    return one_indexed(s.to_vector());
}

} // namespace detail

inline json class_report_to_json(const ClassReport& r) {
    json j;
    j["p7_free"] = r.p7_free;
    j["c4_free"] = r.c4_free;
    j["c6_free"] = r.c6_free;
    j["c7_free"] = r.c7_free;
    j["even_hole_free"] = r.even_hole_free;
    j["in_class"] = r.in_class();
    j["in_narrow_class"] = r.in_narrow_class();
    if (r.p7_witness) j["p7_witness"] = detail::one_indexed(r.p7_witness->vertices);
    if (r.c4_witness) j["c4_witness"] = detail::one_indexed(r.c4_witness->vertices);
    if (r.c6_witness) j["c6_witness"] = detail::one_indexed(r.c6_witness->vertices);
    if (r.c7_witness) j["c7_witness"] = detail::one_indexed(r.c7_witness->vertices);
    if (r.even_hole_witness)
        j["even_hole_witness"] = detail::one_indexed(r.even_hole_witness->vertices);
    return j;
}

// Certificate layout: coloring maps 1-indexed vertex to color in 1..c;
// omega_witness lists the clique behind the bound.
inline json certificate_to_json(const BoundCertificate& c) {
    json coloring = json::object();
    for (size_t v = 0; v < c.coloring.size(); ++v)
        coloring[std::to_string(v + 1)] = c.coloring[v] + 1;
    json trace = json::array();
    for (const auto& e : c.trace) trace.push_back(to_string(e));
    return {{"coloring", coloring},
            {"omega_witness", detail::one_indexed(c.omega_witness)},
            {"bound", c.bound},
            {"bound_established", c.bound_established},
            {"colors_used", c.colors_used()},
            {"class", class_report_to_json(c.class_report)},
            {"trace", trace}};
}

inline json lemma_report_to_json(const LemmaReport& r) {
    json j;
    j["lemma"] = r.lemma;
    j["instance"] = r.instance;
    j["hypothesis"] = {{"held", r.hypothesis_held}, {"note", r.hypothesis_note}};
    j["conclusion"] = lemma_status_name(r.conclusion);
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

// Replaces `path` only after the whole payload is on disk.
inline void write_text_atomic(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    if (target.has_parent_path())
        std::filesystem::create_directories(target.parent_path());
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error(tmp.string() + ": cannot open for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error(tmp.string() + ": write failed");
    }
    std::filesystem::rename(tmp, target);
}

} // namespace chibound
