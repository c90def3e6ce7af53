#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "plumbing/graph.hpp"

namespace plumbing {

namespace detail {

inline std::string ahu_encode(const PlumbingGraph& g, std::size_t v, std::size_t parent,
                              const std::vector<std::vector<std::size_t>>& adj, std::size_t mark) {
    std::vector<std::string> kids;
    for (std::size_t w : adj[v])
        if (w != parent) kids.push_back(ahu_encode(g, w, v, adj, mark));
    std::sort(kids.begin(), kids.end());
    std::string out = "(" + std::to_string(g.vertex(v).self_int) + "g" + std::to_string(g.vertex(v).genus);
    if (v == mark) out += "*";
    for (auto& kidenc : kids) out += kidenc;
    out += ")";
    return out;
}

}  // namespace detail

// Canonical string for a tree, via AHU encoding rooted at the center(s). An
// optional marked vertex participates in the encoding, so equal keys mean the
// marked trees are isomorphic as marked trees.
inline std::string canonical_tree_key(const PlumbingGraph& g, const std::string& marked = "") {
    if (g.empty()) return "()";
    const std::size_t k = g.size();
    std::size_t mark = k;
    if (!marked.empty()) mark = g.index_of(marked);

    std::vector<std::vector<std::size_t>> adj(k);
    for (auto& [u, w] : g.edges()) {
        adj[g.index_of(u)].push_back(g.index_of(w));
        adj[g.index_of(w)].push_back(g.index_of(u));
    }

    // peel leaves to find the 1 or 2 centers
    std::vector<std::size_t> deg(k);
    for (std::size_t i = 0; i < k; ++i) deg[i] = adj[i].size();
    std::vector<std::size_t> layer;
    std::vector<bool> removed(k, false);
    for (std::size_t i = 0; i < k; ++i)
        if (deg[i] <= 1) layer.push_back(i);
    std::size_t left = k;
    while (left > 2) {
        std::vector<std::size_t> next;
        for (std::size_t v : layer) {
            removed[v] = true;
            --left;
            for (std::size_t w : adj[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<std::size_t> centers;
    for (std::size_t i = 0; i < k; ++i)
        if (!removed[i]) centers.push_back(i);

    if (centers.size() == 1) return detail::ahu_encode(g, centers[0], k, adj, mark);
    std::string a = detail::ahu_encode(g, centers[0], centers[1], adj, mark);
    std::string b = detail::ahu_encode(g, centers[1], centers[0], adj, mark);
    return a < b ? a + b : b + a;
}

// Isomorphism-invariant fingerprint usable for any graph; canonical only for
// trees, where it is the AHU key.
inline std::string graph_key(const PlumbingGraph& g, const std::string& marked = "") {
    if (g.empty() || is_tree(g)) return canonical_tree_key(g, marked);
    std::vector<std::string> features;
    for (const Vertex& v : g.vertices())
        features.push_back("[" + std::to_string(v.self_int) + "g" + std::to_string(v.genus) + "d" +
                           std::to_string(g.degree(v.id)) + (v.id == marked ? "*" : "") + "]");
    std::sort(features.begin(), features.end());
    std::string out = "multi:";
    for (auto& f : features) out += f;
    out += "e" + std::to_string(g.edges().size());
    return out;
}

inline std::uint64_t graph_hash(const PlumbingGraph& g) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (char c : graph_key(g)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

// Exact isomorphism test: AHU for trees, backtracking on degree/label classes
// for the small non-tree graphs that blow-downs can create.
inline bool is_isomorphic(const PlumbingGraph& a, const PlumbingGraph& b) {
    if (a.size() != b.size() || a.edges().size() != b.edges().size()) return false;
    if (a.empty()) return true;
    if (is_tree(a) && is_tree(b)) return canonical_tree_key(a) == canonical_tree_key(b);
    if (is_tree(a) != is_tree(b)) return false;

    const std::size_t k = a.size();
    std::vector<std::size_t> perm(k, k), used(k, 0);
    auto label = [](const PlumbingGraph& g, std::size_t i) {
        return std::to_string(g.vertex(i).self_int) + "g" + std::to_string(g.vertex(i).genus) + "d" +
               std::to_string(g.degree(g.vertex(i).id));
    };
    auto mult = [](const PlumbingGraph& g, std::size_t i, std::size_t j) {
        return g.edge_multiplicity(g.vertex(i).id, g.vertex(j).id);
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == k) return true;
        for (std::size_t j = 0; j < k; ++j) {
            if (used[j] || label(a, i) != label(b, j)) continue;
            bool ok = true;
            for (std::size_t p = 0; p < i && ok; ++p)
                if (mult(a, i, p) != mult(b, j, perm[p])) ok = false;
            if (!ok) continue;
            perm[i] = j;
            used[j] = 1;
            if (rec(i + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    return rec(0);
}

}  // namespace plumbing
