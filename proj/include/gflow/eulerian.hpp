#pragma once

#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "gflow/flow.hpp"
#include "gflow/multigraph.hpp"
#include "gflow/presentation.hpp"

namespace gflow {

namespace detail {

// Spanning + connected + all degrees even; for more than one vertex every
// vertex must actually be covered.
inline bool is_spanning_eulerian(const Multigraph& g, const EdgeSubset& c) {
    int n = g.vertex_count();
    std::vector<int> deg(n, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!c.contains(e)) continue;
        deg[g.edge(e).u] += 1;
        deg[g.edge(e).v] += 1;  // loops count twice via both increments
    }
    for (int v = 0; v < n; ++v) {
        if (deg[v] % 2 != 0) return false;
        if (n > 1 && deg[v] == 0) return false;
    }
    // connectivity over subset edges
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident(v)) {
            if (!c.contains(e)) continue;
            int w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

}  // namespace detail

// First spanning Eulerian subgraph in lexicographic order of characteristic
// vectors over the edge input order, or absent. Exhaustive; the guard bounds
// the edge count.
inline std::optional<EdgeSubset> find_spanning_eulerian(const Multigraph& g, int max_edges = 16) {
    g.require_connected("find_spanning_eulerian");
    int m = g.edge_count();
    if (m > max_edges)
        throw Error("find_spanning_eulerian: " + std::to_string(m) +
                    " edges exceeds the exhaustive guard of " + std::to_string(max_edges) +
                    "; raise max_edges to override");
    unsigned long long limit = 1ULL << m;
    for (unsigned long long bits = 0; bits < limit; ++bits) {
        EdgeSubset c(m);
        for (int e = 0; e < m; ++e)
            if (bits >> (m - 1 - e) & 1ULL) c.insert(e);  // edge 0 is the most significant position
        if (detail::is_spanning_eulerian(g, c)) return c;
    }
    return std::nullopt;
}

// The constructive Klein-group flow of a supereulerian graph: constant (0,1)
// on the spanning Eulerian subgraph c, then for every outside edge a (1,0)
// correction along a path inside c (breadth-first, ties by input order). The
// second coordinate stays 1 on c and outside edges keep (1,0), so the result
// is nonzero everywhere.
inline EdgeAssignment supereulerian_flow(const Multigraph& g, const EdgeSubset& c) {
    if (static_cast<int>(c.member.size()) != g.edge_count())
        throw Error("supereulerian_flow: subset size mismatch");
    if (!detail::is_spanning_eulerian(g, c))
        throw Error("supereulerian_flow: the given subgraph is not spanning Eulerian");

    FiniteAbelianGroup klein({2, 2});
    std::vector<GroupElement> values(g.edge_count(), klein.zero());
    for (int e = 0; e < g.edge_count(); ++e)
        if (c.contains(e)) values[e] = klein.make({0, 1});

    auto bfs_path = [&](int from, int to) {
        std::vector<int> via_edge(g.vertex_count(), -1);
        std::vector<int> parent(g.vertex_count(), -1);
        std::queue<int> q;
        q.push(from);
        std::vector<bool> seen(g.vertex_count(), false);
        seen[from] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (v == to) break;
            for (int e : g.incident(v)) {
                if (!c.contains(e) || g.is_loop(e)) continue;
                int w = g.other_end(e, v);
                if (seen[w]) continue;
                seen[w] = true;
                via_edge[w] = e;
                parent[w] = v;
                q.push(w);
            }
        }
        std::vector<int> path;
        for (int v = to; v != from; v = parent[v]) {
            if (parent[v] < 0) throw Error("supereulerian_flow: no path inside the Eulerian subgraph");
            path.push_back(via_edge[v]);
        }
        return path;
    };

    for (int e = 0; e < g.edge_count(); ++e) {
        if (c.contains(e)) continue;
        std::vector<int> support;
        if (!g.is_loop(e)) support = bfs_path(g.edge(e).u, g.edge(e).v);
        support.push_back(e);
        GroupElement kick = klein.make({1, 0});
        for (int pe : support) values[pe] = klein.add(values[pe], kick);
    }

    EdgeAssignment f = EdgeAssignment::group_valued(klein, std::move(values));
    FlowCheck chk = verify_flow(g, f, alphabet_nonzero(klein));
    if (!chk.ok) throw Error("supereulerian_flow: output failed verification; this is a bug");
    return f;
}

// A circle of a presented infinite graph, encoded by the edge ids it uses:
// instantiated per cell plus fixed prefix ids.
struct CircleTemplate {
    std::vector<std::string> cell_edges;    // template names, instantiated per cell index
    std::vector<std::string> prefix_edges;  // verbatim ids
};

struct HamiltonShadowResult {
    bool ok = false;  // every depth produced a spanning Eulerian shadow and a verified flow
    int depth = -1;   // deepest depth checked, or the failing depth
    std::string message;
    std::optional<Multigraph> failing_quotient;
    std::optional<Multigraph> last_quotient;
    std::optional<EdgeSubset> last_shadow;
    std::optional<EdgeAssignment> last_flow;
};

// Images of the circle under exhaustion must be spanning Eulerian subgraphs
// of every quotient; each then carries the constructive Klein-group flow.
inline HamiltonShadowResult hamilton_shadow_flow(const PeriodicPresentation& p,
                                                 const CircleTemplate& circle, int max_depth = 16) {
    HamiltonShadowResult out;
    for (int n = 0; n <= max_depth; ++n) {
        ExhaustionQuotient q = exhaustion_quotient(p, n);
        Materialized window = materialize(p, n);
        EdgeSubset shadow(q.graph.edge_count());
        for (const auto& id : circle.prefix_edges)
            if (q.graph.has_edge_id(id)) shadow.insert(q.graph.edge_index(id));
        for (int cell = window.lo_cell - 1; cell <= window.hi_cell + 1; ++cell)
            for (const auto& name : circle.cell_edges) {
                std::string id = PeriodicPresentation::instantiate(name, cell);
                if (q.graph.has_edge_id(id)) shadow.insert(q.graph.edge_index(id));
            }
        if (!detail::is_spanning_eulerian(q.graph, shadow)) {
            out.ok = false;
            out.depth = n;
            out.message = "circle shadow is not spanning Eulerian at depth " + std::to_string(n);
            out.failing_quotient = q.graph;
            return out;
        }
        out.last_flow = supereulerian_flow(q.graph, shadow);
        out.last_quotient = q.graph;
        out.last_shadow = shadow;
        out.depth = n;
        if (p.finite()) break;
    }
    out.ok = true;
    out.message = "verified Klein-group flows on every quotient";
    return out;
}

}  // namespace gflow
