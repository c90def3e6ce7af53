#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "plumbing/graph.hpp"

namespace plumbing {

using Json = nlohmann::json;

// Result of parsing the graph DSL: the graph, plus areas when every vertex
// declared one (yielding an augmented graph).
struct ParsedGraph {
    PlumbingGraph graph;
    std::optional<std::map<std::string, Rat>> areas;

    bool augmented() const { return areas.has_value(); }

    AugmentedGraph augmented_graph() const {
        if (!areas) fail(Errc::InvalidParameter, "graph carries no area weights");
        return AugmentedGraph(graph, *areas);
    }
};

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] inline void syntax(int line, const std::string& what) {
    fail(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

inline long long parse_ll(const std::string& s, int line, const std::string& what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) syntax(line, what + ": '" + s + "'");
        return v;
    } catch (const Error&) {
        throw;
    } catch (...) {
        syntax(line, what + ": '" + s + "'");
    }
}

}  // namespace detail

// Graph DSL: one statement per line or semicolon-separated.
//   v <id> g<genus> s<self-int> [a<num>[/<den>]]   vertex declaration
//   e <id> <id>                                    edge
//   # ...                                          comment
// The keyword-less form "v1 g0 s2 a3" is accepted too: a leading token that
// begins with 'v' and is not exactly "v" is the vertex id itself.
inline ParsedGraph parse_graph(const std::string& text) {
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, Rat> areas;
    std::size_t with_area = 0;

    int line_no = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::size_t start = 0;
        while (start <= line.size()) {
            auto semi = line.find(';', start);
            std::string stmt = line.substr(start, semi == std::string::npos ? semi : semi - start);
            auto tok = detail::split_tokens(stmt);
            if (!tok.empty()) {
                if (tok[0] == "e") {
                    if (tok.size() != 3) detail::syntax(line_no, "edge statement needs two vertex ids");
                    edges.emplace_back(tok[1], tok[2]);
                } else if (tok[0][0] == 'v') {
                    std::string id;
                    std::size_t f = 1;
                    if (tok[0] == "v") {
                        if (tok.size() < 2) detail::syntax(line_no, "vertex statement needs an id");
                        id = tok[1];
                        f = 2;
                    } else {
                        id = tok[0];
                    }
                    Vertex v;
                    v.id = id;
                    bool have_g = false, have_s = false;
                    for (; f < tok.size(); ++f) {
                        const std::string& t = tok[f];
                        if (t.size() < 2) detail::syntax(line_no, "bad field '" + t + "'");
                        std::string rest = t.substr(1);
                        if (t[0] == 'g') {
                            v.genus = static_cast<int>(detail::parse_ll(rest, line_no, "bad genus"));
                            have_g = true;
                        } else if (t[0] == 's') {
                            v.self_int = detail::parse_ll(rest, line_no, "bad self-intersection");
                            have_s = true;
                        } else if (t[0] == 'a') {
                            auto r = parse_rational(rest);
                            if (!r) detail::syntax(line_no, "bad area '" + rest + "'");
                            if (*r <= 0)
                                fail(Errc::NonPositiveArea,
                                     "line " + std::to_string(line_no) + ": vertex " + id);
                            areas[id] = *r;
                            ++with_area;
                        } else {
                            detail::syntax(line_no, "unknown field '" + t + "'");
                        }
                    }
                    if (!have_g || !have_s) detail::syntax(line_no, "vertex " + id + " needs g<genus> and s<self-int>");
                    vertices.push_back(std::move(v));
                } else {
                    detail::syntax(line_no, "unknown statement '" + tok[0] + "'");
                }
            }
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
    }

    ParsedGraph out{PlumbingGraph(std::move(vertices), std::move(edges)), std::nullopt};
    if (with_area > 0) {
        if (with_area != out.graph.size())
            fail(Errc::InvalidParameter, "areas must be given for all vertices or none");
        out.areas = std::move(areas);
    }
    return out;
}

inline std::string serialize_graph(const PlumbingGraph& g, const std::map<std::string, Rat>* areas = nullptr) {
    std::string out;
    for (const Vertex& v : g.vertices()) {
        out += "v " + v.id + " g" + std::to_string(v.genus) + " s" + std::to_string(v.self_int);
        if (areas) out += " a" + rat_to_string(areas->at(v.id));
        out += "\n";
    }
    for (auto& [u, w] : g.edges()) out += "e " + u + " " + w + "\n";
    return out;
}

inline std::string serialize_graph(const AugmentedGraph& ag) { return serialize_graph(ag.graph, &ag.area); }

inline Json rational_json(const Rat& r) {
    return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

inline Json graph_json(const PlumbingGraph& g, const std::map<std::string, Rat>* areas = nullptr) {
    Json vertices = Json::array();
    for (const Vertex& v : g.vertices()) {
        Json jv{{"id", v.id}, {"genus", v.genus}, {"self_int", v.self_int}};
        if (areas) jv["area"] = rational_json(areas->at(v.id));
        vertices.push_back(std::move(jv));
    }
    Json edges = Json::array();
    for (auto& [u, w] : g.edges()) edges.push_back(Json::array({u, w}));
    return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

inline Json graph_json(const AugmentedGraph& ag) { return graph_json(ag.graph, &ag.area); }

inline std::string dot_export(const PlumbingGraph& g, const std::map<std::string, Rat>* areas = nullptr) {
    std::string out = "graph plumbing {\n";
    for (const Vertex& v : g.vertices()) {
        out += "  \"" + v.id + "\" [label=\"" + v.id + ": s=" + std::to_string(v.self_int) +
               ", g=" + std::to_string(v.genus);
        if (areas) out += ", a=" + rat_to_string(areas->at(v.id));
        out += "\"];\n";
    }
    for (auto& [u, w] : g.edges()) out += "  \"" + u + "\" -- \"" + w + "\";\n";
    out += "}\n";
    return out;
}

inline std::string dot_export(const AugmentedGraph& ag) { return dot_export(ag.graph, &ag.area); }

}  // namespace plumbing
