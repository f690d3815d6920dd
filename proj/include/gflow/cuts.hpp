#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gflow/multigraph.hpp"

namespace gflow {

// One orientation of a single edge.
struct DirectedEdge {
    std::string edge;
    std::string tail;
    std::string head;
};

// A bipartition (A, B) of the vertex set together with its crossing edges,
// read as oriented from A to B. Loops never cross a cut.
struct OrientedCut {
    std::vector<bool> side_a;   // per host vertex index
    std::vector<int> crossing;  // host edge indices, ascending

    bool in_a(int v) const { return side_a[v]; }

    std::vector<DirectedEdge> directed_crossing(const Multigraph& g) const {
        std::vector<DirectedEdge> out;
        out.reserve(crossing.size());
        for (int e : crossing) {
            int u = g.edge(e).u, v = g.edge(e).v;
            if (!side_a[u]) std::swap(u, v);
            out.push_back({g.edge(e).id, g.vertex_id(u), g.vertex_id(v)});
        }
        return out;
    }

    std::vector<std::string> side_a_ids(const Multigraph& g) const {
        std::vector<std::string> out;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (side_a[v]) out.push_back(g.vertex_id(v));
        return out;
    }
};

// Builds the cut (A, V\A) from a membership mask. Both sides must be
// nonempty. Crossing edges are computed, so the result is always a valid cut.
inline OrientedCut make_cut(const Multigraph& g, const std::vector<bool>& side_a) {
    if (static_cast<int>(side_a.size()) != g.vertex_count())
        throw Error("make_cut: side mask size mismatch");
    bool any_a = false, any_b = false;
    for (bool b : side_a) (b ? any_a : any_b) = true;
    if (!any_a || !any_b) throw Error("make_cut: both sides of a cut must be nonempty");
    OrientedCut cut;
    cut.side_a = side_a;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e)) continue;
        if (side_a[g.edge(e).u] != side_a[g.edge(e).v]) cut.crossing.push_back(e);
    }
    return cut;
}

inline OrientedCut make_cut_ids(const Multigraph& g, const std::vector<std::string>& side_a_ids) {
    std::vector<bool> mask(g.vertex_count(), false);
    for (const auto& id : side_a_ids) mask[g.vertex_index(id)] = true;
    return make_cut(g, mask);
}

inline OrientedCut single_vertex_cut(const Multigraph& g, int v) {
    std::vector<bool> mask(g.vertex_count(), false);
    mask[v] = true;
    return make_cut(g, mask);
}

// Relabels sides so that side A contains the first vertex in input order.
inline OrientedCut canonicalize_cut(OrientedCut cut) {
    if (!cut.side_a.empty() && !cut.side_a[0]) cut.side_a.flip();
    return cut;
}

// Checks that the claimed crossing set is exactly the A-B edge set.
inline bool is_valid_cut(const Multigraph& g, const OrientedCut& cut) {
    if (static_cast<int>(cut.side_a.size()) != g.vertex_count()) return false;
    auto reference = make_cut(g, cut.side_a);
    return reference.crossing == cut.crossing;
}

// All cuts of a finite connected multigraph, each once up to complementation
// (side A holds the first vertex in input order). Order is lexicographic on
// the characteristic vector of A under the vertex input order. Exponential in
// the vertex count; the guard rejects anything above max_vertices.
inline std::vector<OrientedCut> enumerate_cuts(const Multigraph& g, int max_vertices = 20) {
    g.require_connected("enumerate_cuts");
    int n = g.vertex_count();
    if (n > max_vertices)
        throw Error("enumerate_cuts: vertex count " + std::to_string(n) + " exceeds guard of " +
                    std::to_string(max_vertices));
    std::vector<OrientedCut> cuts;
    if (n < 2) return cuts;
    // A always holds vertex 0; iterate the remaining n-1 membership bits so
    // that the full characteristic vector ascends lexicographically.
    unsigned long long limit = 1ULL << (n - 1);
    std::vector<bool> mask(n, false);
    for (unsigned long long bits = 0; bits + 1 < limit; ++bits) {
        mask.assign(n, false);
        mask[0] = true;
        // bits == 0 means A = {v0}; bit j set puts vertex j+1 into A. The
        // lexicographic order over (v1..v_{n-1}) treats v1 as the most
        // significant position, so read bits from the top.
        for (int j = 1; j < n; ++j)
            if (bits >> (n - 1 - j) & 1ULL) mask[j] = true;
        cuts.push_back(make_cut(g, mask));
    }
    return cuts;
}

// An edge set lies in the cycle space of a finite graph exactly when it meets
// every cut evenly; for finite graphs that is the same as every vertex having
// even degree in the subset (loops contribute two).
inline bool is_cycle_space_member(const Multigraph& g, const EdgeSubset& f) {
    if (static_cast<int>(f.member.size()) != g.edge_count())
        throw Error("is_cycle_space_member: subset size mismatch");
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = 0;
        for (int e : g.incident(v))
            if (f.contains(e)) d += g.is_loop(e) ? 2 : 1;
        if (d % 2 != 0) return false;
    }
    return true;
}

// Minimum crossing-edge count over all cuts of a finite connected graph.
// A single-vertex graph has no cuts; we report "unbounded".
inline int edge_connectivity(const Multigraph& g, int max_vertices = 20) {
    g.require_connected("edge_connectivity");
    if (g.vertex_count() < 2) return std::numeric_limits<int>::max();
    int best = std::numeric_limits<int>::max();
    for (const auto& cut : enumerate_cuts(g, max_vertices))
        best = std::min(best, static_cast<int>(cut.crossing.size()));
    return best;
}

inline bool is_bridgeless(const Multigraph& g, int max_vertices = 20) {
    return edge_connectivity(g, max_vertices) >= 2;
}

// Smallest (by subset enumeration order) connected edge dominating set whose
// vertices all have degree 3 in g, or absent. Exhaustive over vertex subsets;
// desk scale only.
inline std::optional<std::vector<std::string>> edge_dominating_degree3_set(const Multigraph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) throw Error("edge_dominating_degree3_set: graph has a loop (" + g.edge(e).id + ")");
    int n = g.vertex_count();
    if (n > 22) throw Error("edge_dominating_degree3_set: too many vertices for exhaustive search");
    std::vector<int> deg3;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 3) deg3.push_back(v);

    auto qualifies = [&](unsigned long long bits) {
        std::vector<bool> in(n, false);
        std::vector<int> members;
        for (int j = 0; j < static_cast<int>(deg3.size()); ++j)
            if (bits >> j & 1ULL) {
                in[deg3[j]] = true;
                members.push_back(deg3[j]);
            }
        if (members.empty()) return false;
        for (int e = 0; e < g.edge_count(); ++e)
            if (!in[g.edge(e).u] && !in[g.edge(e).v]) return false;
        // connectivity of the induced subgraph
        std::vector<bool> seen(n, false);
        std::vector<int> stack{members[0]};
        seen[members[0]] = true;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident(v)) {
                int w = g.other_end(e, v);
                if (in[w] && !seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == static_cast<int>(members.size());
    };

    unsigned long long limit = 1ULL << deg3.size();
    for (unsigned long long bits = 1; bits < limit; ++bits) {
        if (qualifies(bits)) {
            std::vector<std::string> out;
            for (int j = 0; j < static_cast<int>(deg3.size()); ++j)
                if (bits >> j & 1ULL) out.push_back(g.vertex_id(deg3[j]));
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace gflow
