#pragma once

// File formats: the JSON graph format {"n": ..., "edges": [[u,v], ...]},
// the plain "n m" edge-list text format, sidecar serializations for
// colorings, matchings, minors and decomposition traces, and the JSON-lines
// findings used for campaign checkpoints.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/matching.hpp"
#include "kempe/minors.hpp"

namespace kempe {

using json = nlohmann::json;

inline json vertex_set_to_json(VertexSet s) { return json(s.to_vector()); }

inline VertexSet vertex_set_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("vertex set: expected an array");
    VertexSet s;
    for (const auto& v : j) {
        int x = v.get<int>();
        if (x < 0 || x >= kMaxVertices) throw std::invalid_argument("vertex set: vertex out of range");
        s.insert(x);
    }
    return s;
}

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: expected {\"n\": ..., \"edges\": [...]}");
    int n = j.at("n").get<int>();
    Graph g(n);
    std::unordered_set<std::uint64_t> seen;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph json: bad edge entry");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u >= v) throw std::invalid_argument("graph json: edges must satisfy u < v");
        if (!seen.insert(static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint32_t>(v)).second)
            throw std::invalid_argument("graph json: duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

inline std::string graph_to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

inline Graph graph_from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    long m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    Graph g(n);
    for (long i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: fewer edges than declared");
        if (g.has_edge(u, v)) throw std::invalid_argument("edge list: duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

// Accepts either format; JSON when the first non-space byte is '{'.
inline Graph graph_from_string(const std::string& contents) {
    auto pos = contents.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && contents[pos] == '{') {
        json j;
        try {
            j = json::parse(contents);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("graph json: ") + e.what());
        }
        return graph_from_json(j);
    }
    return graph_from_edge_list_text(contents);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << contents;
}

inline Graph load_graph_file(const std::string& path) { return graph_from_string(read_file(path)); }

// --- sidecar formats -------------------------------------------------------

inline json coloring_to_json(const Coloring& c) {
    json out = json::array();
    for (const auto& cls : c.classes) out.push_back(vertex_set_to_json(cls));
    return out;
}

inline Coloring coloring_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("coloring json: expected a list of lists");
    std::vector<VertexSet> classes;
    for (const auto& cls : j) classes.push_back(vertex_set_from_json(cls));
    return Coloring(classes);
}

inline json matching_to_json(const Matching& m) {
    json out = json::array();
    for (const Edge& e : m.edges) out.push_back({e.u, e.v});
    return out;
}

inline Matching matching_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matching json: expected a list of pairs");
    std::vector<Edge> edges;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("matching json: bad edge");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Matching(edges);
}

inline json minor_to_json(const CliqueMinor& k) {
    json out = json::array();
    for (const auto& s : k.branch_sets) out.push_back(vertex_set_to_json(s));
    return out;
}

inline CliqueMinor minor_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("minor json: expected a list of lists");
    std::vector<VertexSet> sets;
    for (const auto& s : j) sets.push_back(vertex_set_from_json(s));
    return CliqueMinor(sets);
}

inline json decomp_step_to_json(const DecompStep& st) {
    return json{{"level", st.level},
                {"h", vertex_set_to_json(st.h)},
                {"x", st.x},
                {"y", st.y},
                {"q", vertex_set_to_json(st.q)},
                {"r", matching_to_json(st.r)},
                {"s", matching_to_json(st.s)},
                {"t", vertex_set_to_json(st.t)}};
}

// --- campaign findings ------------------------------------------------------

// One record per examined instance; the certificate re-validates on load.
struct Finding {
    std::string key;      // instance key, e.g. "p1:n=6:m=0x1a3:t=0"
    std::string kind;     // campaign name
    json graph;           // graph json
    std::string verdict;  // found / none / inconclusive / pass / fail
    json certificate;     // witness object, null when there is none
    double runtime_ms = 0.0;
};

inline json finding_to_json(const Finding& f) {
    return json{{"key", f.key},     {"kind", f.kind},
                {"graph", f.graph}, {"verdict", f.verdict},
                {"certificate", f.certificate}, {"runtime_ms", f.runtime_ms}};
}

inline Finding finding_from_json(const json& j) {
    Finding f;
    f.key = j.at("key").get<std::string>();
    f.kind = j.at("kind").get<std::string>();
    f.graph = j.at("graph");
    f.verdict = j.at("verdict").get<std::string>();
    f.certificate = j.value("certificate", json());
    f.runtime_ms = j.value("runtime_ms", 0.0);
    return f;
}

// JSON-lines checkpoint: one finding per line, appended as instances finish.
class CheckpointFile {
public:
    explicit CheckpointFile(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Finding f = finding_from_json(json::parse(line));
            done_.insert(f.key);
            loaded_.push_back(std::move(f));
        }
    }

    bool completed(const std::string& key) const { return done_.count(key) > 0; }

    const std::vector<Finding>& loaded() const { return loaded_; }

    void append(const Finding& f) {
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::invalid_argument("cannot append to checkpoint: " + path_);
        out << finding_to_json(f).dump() << '\n';
        done_.insert(f.key);
    }

private:
    std::string path_;
    std::unordered_set<std::string> done_;
    std::vector<Finding> loaded_;
};

}  // namespace kempe
