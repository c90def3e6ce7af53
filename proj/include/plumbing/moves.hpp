#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "plumbing/canonical.hpp"
#include "plumbing/graph.hpp"

namespace plumbing {

struct Move {
    enum class Kind { BlowUpVertex, BlowUpEdge, BlowDown, ClawExtend, DualBlowUp };
    Kind kind;
    std::string v;             // vertex, or first edge endpoint
    std::string w;             // second edge endpoint (BlowUpEdge only)
    std::optional<Rat> weight; // augmented blow-ups only

    static Move blow_up_vertex(std::string v) { return {Kind::BlowUpVertex, std::move(v), "", std::nullopt}; }
    static Move blow_up_edge(std::string u, std::string w) { return {Kind::BlowUpEdge, std::move(u), std::move(w), std::nullopt}; }
    static Move blow_down(std::string v) { return {Kind::BlowDown, std::move(v), "", std::nullopt}; }
    static Move claw_extend(std::string v) { return {Kind::ClawExtend, std::move(v), "", std::nullopt}; }
    static Move dual_blow_up(std::string v) { return {Kind::DualBlowUp, std::move(v), "", std::nullopt}; }
};

inline const char* move_name(Move::Kind k) {
    switch (k) {
        case Move::Kind::BlowUpVertex: return "blow_up_vertex";
        case Move::Kind::BlowUpEdge: return "blow_up_edge";
        case Move::Kind::BlowDown: return "blow_down";
        case Move::Kind::ClawExtend: return "claw_extend";
        case Move::Kind::DualBlowUp: return "dual_blow_up";
    }
    return "?";
}

struct MoveStep {
    Move move;
    std::uint64_t before_hash = 0;
    std::uint64_t after_hash = 0;
};

struct MoveTrace {
    std::uint64_t initial_hash = 0;
    std::uint64_t final_hash = 0;
    std::vector<MoveStep> steps;
};

// ---- the five moves -------------------------------------------------------

inline PlumbingGraph blow_up_vertex(const PlumbingGraph& g, const std::string& v,
                                    std::string* new_id_out = nullptr) {
    g.index_of(v);
    std::string fresh = g.fresh_id("b0");
    auto vs = g.vertices();
    auto es = g.edges();
    for (Vertex& u : vs)
        if (u.id == v) u.self_int -= 1;
    vs.push_back({fresh, 0, -1});
    es.push_back({v, fresh});
    if (new_id_out) *new_id_out = fresh;
    return PlumbingGraph(std::move(vs), std::move(es));
}

inline AugmentedGraph blow_up_vertex(const AugmentedGraph& ag, const std::string& v, const Rat& weight) {
    if (!(weight > 0 && weight < ag.area.at(v)))
        fail(Errc::WeightOutOfRange, "need 0 < a0 < area(" + v + ")");
    std::string fresh;
    PlumbingGraph g = blow_up_vertex(ag.graph, v, &fresh);
    auto areas = ag.area;
    areas[v] -= weight;
    areas[fresh] = weight;
    return AugmentedGraph(std::move(g), std::move(areas));
}

inline PlumbingGraph blow_up_edge(const PlumbingGraph& g, const std::string& u, const std::string& w,
                                  std::string* new_id_out = nullptr) {
    if (!g.adjacent(u, w)) fail(Errc::UnknownEdge, u + " -- " + w);
    std::string fresh = g.fresh_id("b0");
    auto vs = g.vertices();
    auto es = g.edges();
    for (Vertex& x : vs)
        if (x.id == u || x.id == w) x.self_int -= 1;
    // remove one copy of the edge
    for (auto it = es.begin(); it != es.end(); ++it) {
        if ((it->first == u && it->second == w) || (it->first == w && it->second == u)) {
            es.erase(it);
            break;
        }
    }
    vs.push_back({fresh, 0, -1});
    es.push_back({u, fresh});
    es.push_back({fresh, w});
    if (new_id_out) *new_id_out = fresh;
    return PlumbingGraph(std::move(vs), std::move(es));
}

inline AugmentedGraph blow_up_edge(const AugmentedGraph& ag, const std::string& u, const std::string& w,
                                   const Rat& weight) {
    const Rat lim = std::min(ag.area.at(u), ag.area.at(w));
    if (!(weight > 0 && weight < lim))
        fail(Errc::WeightOutOfRange, "need 0 < a0 < min(area(" + u + "), area(" + w + "))");
    std::string fresh;
    PlumbingGraph g = blow_up_edge(ag.graph, u, w, &fresh);
    auto areas = ag.area;
    areas[u] -= weight;
    areas[w] -= weight;
    areas[fresh] = weight;
    return AugmentedGraph(std::move(g), std::move(areas));
}

inline PlumbingGraph blow_down(const PlumbingGraph& g, const std::string& v) {
    if (!blow_down_admissible(g, v))
        fail(Errc::NotBlowDownable, v + " is not a genus-0 (-1)-vertex of degree <= 2 with distinct neighbors");
    auto nb = g.neighbors(v);
    std::vector<Vertex> vs;
    for (const Vertex& u : g.vertices()) {
        if (u.id == v) continue;
        Vertex copy = u;
        for (const std::string& n : nb)
            if (n == u.id) copy.self_int += 1;
        vs.push_back(std::move(copy));
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (auto& [a, b] : g.edges())
        if (a != v && b != v) es.push_back({a, b});
    if (nb.size() == 2) es.push_back({nb[0], nb[1]});
    return PlumbingGraph(std::move(vs), std::move(es));
}

inline AugmentedGraph blow_down(const AugmentedGraph& ag, const std::string& v) {
    auto nb = ag.graph.neighbors(v);
    PlumbingGraph g = blow_down(ag.graph, v);
    auto areas = ag.area;
    Rat a0 = areas.at(v);
    areas.erase(v);
    for (const std::string& n : nb) areas[n] += a0;
    return AugmentedGraph(std::move(g), std::move(areas));
}

// Appends a length-2 chain v -- x0 -- x-1 of genus-0, self-intersection-0
// vertices.
inline PlumbingGraph claw_extend(const PlumbingGraph& g, const std::string& v,
                                 std::pair<std::string, std::string>* new_ids = nullptr) {
    g.index_of(v);
    std::string x0 = g.fresh_id("c0");
    auto vs = g.vertices();
    auto es = g.edges();
    vs.push_back({x0, 0, 0});
    PlumbingGraph tmp(vs, es);  // reserve x0 before drawing the second id
    std::string x1 = tmp.fresh_id("c0");
    vs.push_back({x1, 0, 0});
    es.push_back({v, x0});
    es.push_back({x0, x1});
    if (new_ids) *new_ids = {x0, x1};
    return PlumbingGraph(std::move(vs), std::move(es));
}

// Increments v's self-intersection and attaches a fresh (+1)-vertex; equals
// claw_extend followed by an edge blow-up and two blow-downs.
inline PlumbingGraph dual_blow_up(const PlumbingGraph& g, const std::string& v,
                                  std::string* new_id_out = nullptr) {
    g.index_of(v);
    std::string fresh = g.fresh_id("d0");
    auto vs = g.vertices();
    auto es = g.edges();
    for (Vertex& u : vs)
        if (u.id == v) u.self_int += 1;
    vs.push_back({fresh, 0, 1});
    es.push_back({v, fresh});
    if (new_id_out) *new_id_out = fresh;
    return PlumbingGraph(std::move(vs), std::move(es));
}

inline PlumbingGraph apply_move(const PlumbingGraph& g, const Move& m) {
    switch (m.kind) {
        case Move::Kind::BlowUpVertex: return blow_up_vertex(g, m.v);
        case Move::Kind::BlowUpEdge: return blow_up_edge(g, m.v, m.w);
        case Move::Kind::BlowDown: return blow_down(g, m.v);
        case Move::Kind::ClawExtend: return claw_extend(g, m.v);
        case Move::Kind::DualBlowUp: return dual_blow_up(g, m.v);
    }
    fail(Errc::InvalidParameter, "apply_move");
}

// ---- minimal model --------------------------------------------------------

inline void require_genus_zero_tree(const PlumbingGraph& g, const char* who) {
    if (!g.empty() && !is_tree(g)) fail(Errc::NotATree, who);
    if (!g.all_genus_zero()) fail(Errc::NonzeroGenus, who);
}

// Blows down the admissible vertex earliest in declaration order until no
// blow-down can be performed.
inline std::pair<PlumbingGraph, MoveTrace> minimal_model(const PlumbingGraph& g) {
    require_genus_zero_tree(g, "minimal_model");
    PlumbingGraph cur = g;
    MoveTrace trace;
    trace.initial_hash = graph_hash(cur);
    for (;;) {
        std::string pick;
        for (const Vertex& v : cur.vertices()) {
            if (blow_down_admissible(cur, v.id)) {
                pick = v.id;
                break;
            }
        }
        if (pick.empty()) break;
        MoveStep step{Move::blow_down(pick), graph_hash(cur), 0};
        cur = blow_down(cur, pick);
        step.after_hash = graph_hash(cur);
        trace.steps.push_back(std::move(step));
    }
    trace.final_hash = graph_hash(cur);
    return {std::move(cur), std::move(trace)};
}

// ---- bounded equivalence search ------------------------------------------

struct SearchOptions {
    std::size_t extra_vertices = 4;  // blow-up headroom above each side's size
    std::size_t depth = 12;          // total move budget across both frontiers
    std::size_t max_states = 200000;
};

struct EquivalenceResult {
    enum class Kind { Proof, NotEquivalent, Unknown };
    Kind kind = Kind::Unknown;
    MoveTrace trace;     // Proof only
    std::string reason;  // NotEquivalent / Unknown
};

inline PlumbingGraph replay(const PlumbingGraph& g, const MoveTrace& trace) {
    PlumbingGraph cur = g;
    for (const MoveStep& s : trace.steps) cur = apply_move(cur, s.move);
    return cur;
}

inline Json move_trace_json(const MoveTrace& t) {
    Json steps = Json::array();
    for (const MoveStep& s : t.steps) {
        Json js{{"move", move_name(s.move.kind)},
                {"before", s.before_hash},
                {"after", s.after_hash}};
        if (s.move.kind == Move::Kind::BlowUpEdge)
            js["edge"] = Json::array({s.move.v, s.move.w});
        else
            js["vertex"] = s.move.v;
        if (s.move.weight) js["weight"] = rational_json(*s.move.weight);
        steps.push_back(std::move(js));
    }
    return Json{{"initial", t.initial_hash}, {"final", t.final_hash}, {"steps", std::move(steps)}};
}

namespace detail {

struct SearchNode {
    PlumbingGraph graph;
    int parent = -1;
    Move move = Move::blow_down("");
    std::size_t depth = 0;
};

// Neighbor moves within the tree class: all blow-downs plus, below the size
// cap, all vertex and edge blow-ups.
inline std::vector<Move> neighbor_moves(const PlumbingGraph& g, std::size_t max_size) {
    std::vector<Move> out;
    for (const Vertex& v : g.vertices())
        if (g.size() > 1 && blow_down_admissible(g, v.id)) out.push_back(Move::blow_down(v.id));
    if (g.size() < max_size) {
        for (const Vertex& v : g.vertices()) out.push_back(Move::blow_up_vertex(v.id));
        for (auto& [u, w] : g.edges()) out.push_back(Move::blow_up_edge(u, w));
    }
    return out;
}

}  // namespace detail

// Bidirectional bounded search for a blow-up/blow-down path between two
// genus-0 trees. NotEquivalent only with an invariant certificate (|det|,
// b2+ / nullity, or nontrivial Smith factors == abelianization data);
// Unknown when the budget runs out.
inline EquivalenceResult equivalent_graphs(const PlumbingGraph& g1, const PlumbingGraph& g2,
                                           const SearchOptions& opt = {}) {
    require_genus_zero_tree(g1, "equivalent_graphs");
    require_genus_zero_tree(g2, "equivalent_graphs");

    EquivalenceResult out;

    {
        IntMat q1 = intersection_matrix(g1).entries;
        IntMat q2 = intersection_matrix(g2).entries;
        if (abs(determinant(q1)) != abs(determinant(q2))) {
            out.kind = EquivalenceResult::Kind::NotEquivalent;
            out.reason = "determinants differ in absolute value";
            return out;
        }
        Inertia i1 = inertia(q1), i2 = inertia(q2);
        if (i1.n_plus != i2.n_plus || i1.n_zero != i2.n_zero) {
            out.kind = EquivalenceResult::Kind::NotEquivalent;
            out.reason = "inertia differs (b2+ or nullity)";
            return out;
        }
        if (nontrivial_invariant_factors(q1) != nontrivial_invariant_factors(q2)) {
            out.kind = EquivalenceResult::Kind::NotEquivalent;
            out.reason = "abelianization invariant factors differ";
            return out;
        }
    }

    // Graphs reducing to the empty graph (only a single (-1)-vertex does) are
    // handled by direct minimalization, so the search never needs to invert a
    // vertex deletion. The trace runs from the non-empty endpoint, identified
    // by its hash.
    if (g1.empty() || g2.empty()) {
        if (g1.empty() && g2.empty()) {
            out.kind = EquivalenceResult::Kind::Proof;
            out.trace.initial_hash = out.trace.final_hash = graph_hash(g1);
            return out;
        }
        auto [m, trace] = minimal_model(g1.empty() ? g2 : g1);
        if (!m.empty()) {
            out.kind = EquivalenceResult::Kind::Unknown;
            out.reason = "no move path into the empty graph found";
            return out;
        }
        out.kind = EquivalenceResult::Kind::Proof;
        out.trace = trace;
        return out;
    }

    const std::size_t cap1 = g1.size() + opt.extra_vertices;
    const std::size_t cap2 = g2.size() + opt.extra_vertices;
    const std::size_t half_depth = (opt.depth + 1) / 2;

    std::vector<detail::SearchNode> nodes1, nodes2;
    std::map<std::string, int> seen1, seen2;
    nodes1.push_back({g1, -1, Move::blow_down(""), 0});
    nodes2.push_back({g2, -1, Move::blow_down(""), 0});
    seen1[canonical_tree_key(g1)] = 0;
    seen2[canonical_tree_key(g2)] = 0;

    // Builds the proof as forward side-1 moves to the meet state followed by
    // the reversed side-2 chain. The reversed moves are re-derived on the
    // actual running graph (which may carry different vertex ids than the
    // side-2 nodes) by matching canonical keys of the targets.
    auto build_trace = [&](int end1, int end2) {
        std::vector<int> chain1;
        for (int i = end1; i != -1; i = nodes1[i].parent) chain1.push_back(i);
        std::vector<MoveStep> steps;
        for (auto it = chain1.rbegin(); it != chain1.rend(); ++it) {
            int i = *it;
            if (nodes1[i].parent == -1) continue;
            steps.push_back({nodes1[i].move, graph_hash(nodes1[nodes1[i].parent].graph),
                             graph_hash(nodes1[i].graph)});
        }
        PlumbingGraph cur = nodes1[end1].graph;
        for (int i = end2; i != -1; i = nodes2[i].parent) {
            if (nodes2[i].parent == -1) break;
            const std::string want = canonical_tree_key(nodes2[nodes2[i].parent].graph);
            bool found = false;
            for (const Move& m : detail::neighbor_moves(cur, cur.size() + 1)) {
                PlumbingGraph next = apply_move(cur, m);
                if (canonical_tree_key(next) == want) {
                    steps.push_back({m, graph_hash(cur), graph_hash(next)});
                    cur = std::move(next);
                    found = true;
                    break;
                }
            }
            if (!found) fail(Errc::InvalidParameter, "equivalent_graphs: trace reconstruction failed");
        }
        MoveTrace t;
        t.initial_hash = graph_hash(g1);
        t.final_hash = graph_hash(g2);
        t.steps = std::move(steps);
        return t;
    };

    auto expand = [&](std::vector<detail::SearchNode>& nodes, std::map<std::string, int>& seen,
                      std::map<std::string, int>& other_seen, std::size_t cap, std::size_t from,
                      std::size_t to) -> std::optional<std::pair<int, int>> {
        for (std::size_t idx = from; idx < to; ++idx) {
            if (nodes[idx].depth >= half_depth) continue;
            const PlumbingGraph base = nodes[idx].graph;  // nodes may reallocate below
            const std::size_t base_depth = nodes[idx].depth;
            for (const Move& m : detail::neighbor_moves(base, cap)) {
                PlumbingGraph next = apply_move(base, m);
                std::string key = canonical_tree_key(next);
                if (seen.count(key)) continue;
                if (nodes.size() + 1 > opt.max_states) return std::nullopt;
                nodes.push_back({std::move(next), static_cast<int>(idx), m, base_depth + 1});
                seen[key] = static_cast<int>(nodes.size() - 1);
                auto hit = other_seen.find(key);
                if (hit != other_seen.end())
                    return std::make_pair(static_cast<int>(nodes.size() - 1), hit->second);
            }
        }
        return std::make_pair(-1, -1);
    };

    if (canonical_tree_key(g1) == canonical_tree_key(g2)) {
        out.kind = EquivalenceResult::Kind::Proof;
        out.trace.initial_hash = graph_hash(g1);
        out.trace.final_hash = graph_hash(g2);
        return out;
    }

    std::size_t done1 = 0, done2 = 0;
    for (std::size_t round = 0; round < opt.depth; ++round) {
        bool progress = false;
        {
            std::size_t end = nodes1.size();
            if (done1 < end) {
                auto meet = expand(nodes1, seen1, seen2, cap1, done1, end);
                if (!meet) {
                    out.kind = EquivalenceResult::Kind::Unknown;
                    out.reason = "state budget exhausted";
                    return out;
                }
                if (meet->first >= 0) {
                    out.kind = EquivalenceResult::Kind::Proof;
                    out.trace = build_trace(meet->first, meet->second);
                    return out;
                }
                done1 = end;
                progress = true;
            }
        }
        {
            std::size_t end = nodes2.size();
            if (done2 < end) {
                auto meet = expand(nodes2, seen2, seen1, cap2, done2, end);
                if (!meet) {
                    out.kind = EquivalenceResult::Kind::Unknown;
                    out.reason = "state budget exhausted";
                    return out;
                }
                if (meet->first >= 0) {
                    out.kind = EquivalenceResult::Kind::Proof;
                    out.trace = build_trace(meet->second, meet->first);
                    return out;
                }
                done2 = end;
                progress = true;
            }
        }
        if (!progress) break;
    }

    out.kind = EquivalenceResult::Kind::Unknown;
    out.reason = "move budget exhausted";
    return out;
}

}  // namespace plumbing
