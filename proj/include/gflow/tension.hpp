#pragma once

#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "gflow/assignment.hpp"
#include "gflow/flow.hpp"
#include "gflow/group.hpp"
#include "gflow/multigraph.hpp"
#include "gflow/presentation.hpp"
#include "gflow/search.hpp"

namespace gflow {

// A directed cycle as (edge, sign) terms: sign +1 when the cycle follows the
// edge's canonical orientation.
struct DirectedCycle {
    std::vector<std::pair<int, int>> terms;
};

namespace detail {

struct SpanningTree {
    std::vector<int> parent_edge;   // per vertex, -1 at roots
    std::vector<int> parent;        // per vertex, -1 at roots
    std::vector<bool> is_tree_edge; // per edge
    std::vector<int> depth;
};

inline SpanningTree bfs_tree(const Multigraph& g) {
    SpanningTree t;
    t.parent_edge.assign(g.vertex_count(), -1);
    t.parent.assign(g.vertex_count(), -1);
    t.is_tree_edge.assign(g.edge_count(), false);
    t.depth.assign(g.vertex_count(), 0);
    std::vector<bool> seen(g.vertex_count(), false);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : g.incident(v)) {
                if (g.is_loop(e)) continue;
                int w = g.other_end(e, v);
                if (seen[w]) continue;
                seen[w] = true;
                t.parent[w] = v;
                t.parent_edge[w] = e;
                t.is_tree_edge[e] = true;
                t.depth[w] = t.depth[v] + 1;
                q.push(w);
            }
        }
    }
    return t;
}

}  // namespace detail

// The fundamental cycles of a breadth-first spanning forest: one per chord,
// oriented along the chord's canonical direction. A loop is its own cycle.
// Every directed cycle is an integer combination of these, so zero sums here
// give zero sums around every cycle of an abelian-valued assignment.
inline std::vector<DirectedCycle> fundamental_cycles(const Multigraph& g) {
    auto t = detail::bfs_tree(g);
    std::vector<DirectedCycle> cycles;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (t.is_tree_edge[e]) continue;
        DirectedCycle c;
        c.terms.push_back({e, +1});
        if (!g.is_loop(e)) {
            // walk from head and tail up to their meeting point; the cycle
            // runs tail -> head along e, then head -> tail through the tree
            int a = g.canonical_head(e), b = g.canonical_tail(e);
            std::vector<std::pair<int, int>> up_from_head, up_from_tail;
            while (a != b) {
                if (t.depth[a] >= t.depth[b]) {
                    int pe = t.parent_edge[a];
                    // moving a -> parent(a): with the cycle direction, sign is
                    // +1 when the canonical orientation points a -> parent(a)
                    up_from_head.push_back({pe, g.canonical_tail(pe) == a ? +1 : -1});
                    a = t.parent[a];
                } else {
                    int pe = t.parent_edge[b];
                    // the tail side is traversed against its upward direction
                    up_from_tail.push_back({pe, g.canonical_tail(pe) == b ? -1 : +1});
                    b = t.parent[b];
                }
            }
            for (auto& term : up_from_head) c.terms.push_back(term);
            for (auto it = up_from_tail.rbegin(); it != up_from_tail.rend(); ++it) c.terms.push_back(*it);
        }
        cycles.push_back(std::move(c));
    }
    return cycles;
}

struct TensionCheck {
    bool ok = true;
    std::optional<DirectedCycle> violated_cycle;

    std::vector<DirectedEdge> cycle_edges(const Multigraph& g) const {
        std::vector<DirectedEdge> out;
        if (!violated_cycle) return out;
        for (auto [e, sign] : violated_cycle->terms) {
            int tail = g.canonical_tail(e), head = g.canonical_head(e);
            if (sign < 0) std::swap(tail, head);
            out.push_back({g.edge(e).id, g.vertex_id(tail), g.vertex_id(head)});
        }
        return out;
    }
};

// Zero-sum check around a fundamental cycle basis; for abelian value groups
// this is equivalent to checking every directed cycle. The overload taking a
// precomputed basis serves callers checking many assignments on one graph.
inline TensionCheck verify_tension(const Multigraph& g, const EdgeAssignment& f,
                                   const std::vector<DirectedCycle>& cycles) {
    if (f.integer_domain()) throw Error("verify_tension expects a group-valued assignment");
    detail::require_total(g, f);
    const auto& grp = f.group();
    for (const auto& cyc : cycles) {
        GroupElement s = grp.zero();
        for (auto [e, sign] : cyc.terms)
            s = grp.add(s, sign > 0 ? f.gvalue(e) : grp.neg(f.gvalue(e)));
        if (!s.is_zero()) {
            TensionCheck r;
            r.ok = false;
            r.violated_cycle = cyc;
            return r;
        }
    }
    return TensionCheck{};
}

inline TensionCheck verify_tension(const Multigraph& g, const EdgeAssignment& f) {
    return verify_tension(g, f, fundamental_cycles(g));
}

// Backtracking search for an A-tension: variables are edges in input order,
// constraints are the fundamental cycles. Loops can only carry zero, so a
// zero-free alphabet on a looped graph has no tension.
inline std::optional<EdgeAssignment> find_tension(const Multigraph& g, const FlowAlphabet& a,
                                                  int threads = 1) {
    if (a.kind() != FlowAlphabet::Kind::group_subset)
        throw Error("find_tension expects a group alphabet");
    auto tables = std::make_shared<const GroupTables>(a.group(), a.elements());
    GroupIndexOps ops{tables};
    ZeroSumProblem<GroupIndexOps> p;
    p.ops = ops;
    p.num_vars = g.edge_count();
    for (const auto& e : a.elements()) p.domain.push_back(static_cast<int>(a.group().index_of(e)));
    for (auto& cyc : fundamental_cycles(g)) {
        ZeroSumProblem<GroupIndexOps>::Constraint c;
        c.terms = cyc.terms;
        p.constraints.push_back(std::move(c));
    }
    auto sol = zero_sum_first(p, threads);
    if (!sol) return std::nullopt;
    std::vector<GroupElement> values;
    values.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) values.push_back(a.group().element_at((*sol)[e]));
    return EdgeAssignment::group_valued(a.group(), std::move(values));
}

// The coboundary of a vertex potential: f(u -> v) = p(v) - p(u) on canonical
// orientations.
inline EdgeAssignment tension_from_potential(const Multigraph& g,
                                             const FiniteAbelianGroup& grp,
                                             const std::vector<GroupElement>& potential) {
    if (static_cast<int>(potential.size()) != g.vertex_count())
        throw Error("tension_from_potential: one potential value per vertex required");
    for (const auto& x : potential) grp.check(x);
    std::vector<GroupElement> values;
    values.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        values.push_back(grp.add(potential[g.canonical_head(e)], grp.neg(potential[g.canonical_tail(e)])));
    return EdgeAssignment::group_valued(grp, std::move(values));
}

// Tree-propagates a potential realizing f, then confirms every edge; on a
// finite connected graph this holds exactly when f is a tension.
inline bool is_potential_difference(const Multigraph& g, const EdgeAssignment& f) {
    if (f.integer_domain()) throw Error("is_potential_difference expects a group-valued assignment");
    g.require_connected("is_potential_difference");
    detail::require_total(g, f);
    const auto& grp = f.group();
    auto t = detail::bfs_tree(g);
    std::vector<GroupElement> p(g.vertex_count(), grp.zero());
    // parents come earlier in BFS order; assign potentials outward
    std::vector<int> order;
    {
        std::vector<bool> seen(g.vertex_count(), false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int e : g.incident(v)) {
                if (g.is_loop(e)) continue;
                int w = g.other_end(e, v);
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
    }
    for (int v : order) {
        if (t.parent[v] < 0) continue;
        int e = t.parent_edge[v];
        // p(v) = p(parent) + f read parent -> v
        GroupElement step = g.canonical_head(e) == v ? f.gvalue(e) : grp.neg(f.gvalue(e));
        p[v] = grp.add(p[t.parent[v]], step);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        GroupElement expect = grp.add(p[g.canonical_head(e)], grp.neg(p[g.canonical_tail(e)]));
        if (!(expect == f.gvalue(e))) return false;
    }
    return true;
}

struct InfiniteTensionCheck {
    enum class Verdict { no, yes_up_to };
    Verdict verdict = Verdict::yes_up_to;
    int depth = -1;
    std::optional<Multigraph> failing_window;
    FlowAlphabet alphabet;

    InfiniteTensionCheck() : alphabet(FlowAlphabet::k_flow(2)) {}
    bool obstructed() const { return verdict == Verdict::no; }
};

// Tension analogue of the exhaustion check: windows are honest subgraphs of
// the presented graph, so their cycles are cycles of the whole graph and a
// failed window is a sound obstruction.
inline InfiniteTensionCheck check_infinite_tension(const PeriodicPresentation& p, const FlowAlphabet& a,
                                                   int max_depth = 16, int threads = 1) {
    InfiniteTensionCheck result;
    result.alphabet = a;
    for (int n = 0; n <= max_depth; ++n) {
        Materialized window = materialize(p, n);
        if (!find_tension(window.graph, a, threads)) {
            result.verdict = InfiniteTensionCheck::Verdict::no;
            result.depth = n;
            result.failing_window = window.graph;
            return result;
        }
        if (p.finite()) break;
    }
    result.verdict = InfiniteTensionCheck::Verdict::yes_up_to;
    result.depth = max_depth;
    return result;
}

}  // namespace gflow
