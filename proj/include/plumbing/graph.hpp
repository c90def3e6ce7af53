#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plumbing/error.hpp"
#include "plumbing/linalg.hpp"
#include "plumbing/rational.hpp"

namespace plumbing {

struct Vertex {
    std::string id;
    int genus = 0;
    long long self_int = 0;

    bool operator==(const Vertex&) const = default;
};

// A weighted multigraph whose vertices carry genus and self-intersection.
// Self-loops are rejected; the graph must be connected (the empty graph is
// allowed and treated as connected). Vertex order is the declaration order
// and fixes the row order of the intersection matrix.
class PlumbingGraph {
  public:
    PlumbingGraph() = default;

    PlumbingGraph(std::vector<Vertex> vertices, std::vector<std::pair<std::string, std::string>> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (vertices_[i].genus < 0) fail(Errc::InvalidParameter, "genus must be non-negative: " + vertices_[i].id);
            if (!index_.emplace(vertices_[i].id, i).second)
                fail(Errc::DuplicateVertex, vertices_[i].id);
        }
        for (auto& [u, w] : edges_) {
            if (u == w) fail(Errc::SelfLoop, "edge " + u + " -- " + w);
            if (!index_.count(u)) fail(Errc::UnknownVertex, u);
            if (!index_.count(w)) fail(Errc::UnknownVertex, w);
        }
        if (!connected()) fail(Errc::Disconnected, "graph must be connected");
    }

    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }

    const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
    const Vertex& vertex(const std::string& id) const { return vertices_[index_of(id)]; }

    bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }

    std::size_t index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) fail(Errc::UnknownVertex, id);
        return it->second;
    }

    std::size_t degree(const std::string& id) const {
        std::size_t d = 0;
        for (auto& [u, w] : edges_) d += (u == id) + (w == id);
        return d;
    }

    // Neighbors with multiplicity, in edge declaration order.
    std::vector<std::string> neighbors(const std::string& id) const {
        std::vector<std::string> out;
        for (auto& [u, w] : edges_) {
            if (u == id) out.push_back(w);
            if (w == id) out.push_back(u);
        }
        return out;
    }

    std::size_t edge_multiplicity(const std::string& u, const std::string& w) const {
        std::size_t m = 0;
        for (auto& [a, b] : edges_)
            if ((a == u && b == w) || (a == w && b == u)) ++m;
        return m;
    }

    bool adjacent(const std::string& u, const std::string& w) const { return edge_multiplicity(u, w) > 0; }

    bool all_genus_zero() const {
        return std::all_of(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return v.genus == 0; });
    }

    std::string fresh_id(const std::string& base) const {
        if (!index_.count(base)) return base;
        for (std::size_t i = 1;; ++i) {
            std::string candidate = base + std::to_string(i);
            if (!index_.count(candidate)) return candidate;
        }
    }

  private:
    bool connected() const {
        if (vertices_.empty()) return true;
        std::vector<bool> seen(vertices_.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (auto& [a, b] : edges_) {
                std::size_t x = index_.at(a), y = index_.at(b);
                std::size_t other;
                if (x == v) other = y;
                else if (y == v) other = x;
                else continue;
                if (!seen[other]) {
                    seen[other] = true;
                    ++count;
                    stack.push_back(other);
                }
            }
        }
        return count == vertices_.size();
    }

    std::vector<Vertex> vertices_;
    std::vector<std::pair<std::string, std::string>> edges_;
    std::map<std::string, std::size_t> index_;
};

// PlumbingGraph plus a strictly positive rational area per vertex.
struct AugmentedGraph {
    PlumbingGraph graph;
    std::map<std::string, Rat> area;

    AugmentedGraph() = default;

    AugmentedGraph(PlumbingGraph g, std::map<std::string, Rat> a) : graph(std::move(g)), area(std::move(a)) {
        if (area.size() != graph.size()) fail(Errc::InvalidParameter, "area must be defined for exactly the vertices");
        for (auto& [id, r] : area) {
            if (!graph.has_vertex(id)) fail(Errc::UnknownVertex, id);
            if (r <= 0) fail(Errc::NonPositiveArea, id + " has area " + rat_to_string(r));
        }
    }

    AugmentedGraph(PlumbingGraph g, const RatVec& a) : graph(std::move(g)) {
        if (a.size() != graph.size()) fail(Errc::DimensionMismatch, "area vector length");
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] <= 0) fail(Errc::NonPositiveArea, graph.vertex(i).id);
            area[graph.vertex(i).id] = a[i];
        }
    }

    RatVec area_vector() const {
        RatVec out;
        out.reserve(graph.size());
        for (const Vertex& v : graph.vertices()) out.push_back(area.at(v.id));
        return out;
    }
};

// Symmetric matrix with self-intersections on the diagonal and edge counts
// off-diagonal; row order follows the graph's vertex order.
struct IntersectionMatrix {
    IntMat entries;
    std::vector<std::string> vertex_order;

    std::size_t size() const { return entries.size(); }
};

inline IntersectionMatrix intersection_matrix(const PlumbingGraph& g) {
    const std::size_t k = g.size();
    IntersectionMatrix q;
    q.entries.assign(k, IntVec(k, Int(0)));
    for (std::size_t i = 0; i < k; ++i) {
        q.entries[i][i] = g.vertex(i).self_int;
        q.vertex_order.push_back(g.vertex(i).id);
    }
    for (auto& [u, w] : g.edges()) {
        std::size_t i = g.index_of(u), j = g.index_of(w);
        q.entries[i][j] += 1;
        q.entries[j][i] += 1;
    }
    return q;
}

inline Int graph_determinant(const PlumbingGraph& g) { return determinant(intersection_matrix(g).entries); }

inline bool is_tree(const PlumbingGraph& g) {
    if (g.empty()) return false;
    if (g.edges().size() != g.size() - 1) return false;
    for (auto& [u, w] : g.edges())
        if (g.edge_multiplicity(u, w) > 1) return false;
    return true;  // connected is a class invariant
}

inline bool is_linear(const PlumbingGraph& g) {
    if (!is_tree(g)) return false;
    for (const Vertex& v : g.vertices())
        if (g.degree(v.id) > 2) return false;
    return true;
}

inline std::vector<std::string> branch_points(const PlumbingGraph& g) {
    std::vector<std::string> out;
    for (const Vertex& v : g.vertices())
        if (g.degree(v.id) >= 3) out.push_back(v.id);
    return out;
}

// Connected components of g - v, each returned as a graph; the union of their
// vertex sets partitions the other vertices.
inline std::vector<PlumbingGraph> branches_at(const PlumbingGraph& g, const std::string& v) {
    g.index_of(v);  // throws UnknownVertex
    std::map<std::string, std::size_t> component;
    std::size_t n_components = 0;
    for (const Vertex& u : g.vertices()) {
        if (u.id == v || component.count(u.id)) continue;
        std::size_t c = n_components++;
        std::vector<std::string> stack{u.id};
        component[u.id] = c;
        while (!stack.empty()) {
            std::string x = stack.back();
            stack.pop_back();
            for (const std::string& y : g.neighbors(x)) {
                if (y == v || component.count(y)) continue;
                component[y] = c;
                stack.push_back(y);
            }
        }
    }
    std::vector<std::vector<Vertex>> vs(n_components);
    std::vector<std::vector<std::pair<std::string, std::string>>> es(n_components);
    for (const Vertex& u : g.vertices())
        if (u.id != v) vs[component[u.id]].push_back(u);
    for (auto& [a, b] : g.edges())
        if (a != v && b != v) es[component[a]].push_back({a, b});
    std::vector<PlumbingGraph> out;
    for (std::size_t c = 0; c < n_components; ++c) out.emplace_back(std::move(vs[c]), std::move(es[c]));
    return out;
}

// A vertex admits a blow-down when it is a genus-0 sphere of self-intersection
// -1 meeting at most two other components (a degree-3 one would create a
// triple point).
inline bool blow_down_admissible(const PlumbingGraph& g, const std::string& id) {
    const Vertex& v = g.vertex(id);
    if (v.genus != 0 || v.self_int != -1) return false;
    if (g.degree(id) > 2) return false;
    auto nb = g.neighbors(id);
    if (nb.size() == 2 && nb[0] == nb[1]) return false;
    return true;
}

inline bool is_minimal(const PlumbingGraph& g) {
    for (const Vertex& v : g.vertices())
        if (blow_down_admissible(g, v.id)) return false;
    return true;
}

}  // namespace plumbing
