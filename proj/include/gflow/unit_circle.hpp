#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gflow/assignment.hpp"
#include "gflow/cuts.hpp"
#include "gflow/group.hpp"
#include "gflow/multigraph.hpp"
#include "gflow/search.hpp"

namespace gflow {

// Edge classes of a unit-circle flow relative to the seed value z1: every
// value is one of the six units s * w^r * z1 (s = +-1, w a primitive cube
// root of unity). The rotation classes r = 0, 1, 2 are the classes
// {z1, z2, z3}; the sign is absorbed by flipping the edge orientation.
struct UnitCircleClasses {
    std::vector<int> rotation;  // per edge, 0..2
    std::vector<int> sign;      // per edge, +1/-1, value on canonical orientation

    std::vector<std::vector<std::string>> partition(const Multigraph& g) const {
        std::vector<std::vector<std::string>> classes(3);
        for (int e = 0; e < g.edge_count(); ++e) classes[rotation[e]].push_back(g.edge(e).id);
        return classes;
    }

    // The cube-root classes correspond to Z3 values; the signed class map
    // sends every unit sum that vanishes in the plane to a sum divisible by
    // three, so this is always a Z3-flow (not necessarily zero-free).
    EdgeAssignment to_z3_flow(const Multigraph& g) const {
        FiniteAbelianGroup z3 = FiniteAbelianGroup::cyclic(3);
        std::vector<GroupElement> values;
        values.reserve(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e)
            values.push_back(z3.make({sign[e] > 0 ? rotation[e] : (3 - rotation[e]) % 3}));
        return EdgeAssignment::group_valued(z3, std::move(values));
    }
};

struct UnitCirclePropagation {
    bool found = false;
    UnitCircleClasses classes;
    std::string message;
};

// Searches for a unit-circle flow whose values all lie in the six signed
// rotations of the seed edge's value. The vertex sums are evaluated exactly
// in Z[w]; at every degree-3 vertex the only vanishing triples are
// {s*z1, s*z2, s*z3}, which is the propagation step the dominating set
// guarantees to reach every edge. Preconditions: no loops; u_set is a
// connected edge dominating set whose vertices all have degree 3.
inline UnitCirclePropagation propagate_unit_circle_classes(const Multigraph& g,
                                                           const std::vector<std::string>& u_set,
                                                           const std::string& seed_edge,
                                                           int threads = 1) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) throw Error("propagate_unit_circle_classes: graph has a loop");
    if (u_set.empty()) throw Error("propagate_unit_circle_classes: empty vertex set");
    if (g.edge_count() == 0) throw Error("propagate_unit_circle_classes: graph has no edges");

    std::vector<bool> in_u(g.vertex_count(), false);
    for (const auto& id : u_set) in_u[g.vertex_index(id)] = true;
    for (const auto& id : u_set)
        if (g.degree(g.vertex_index(id)) != 3)
            throw Error("propagate_unit_circle_classes: vertex " + id + " does not have degree 3");
    for (int e = 0; e < g.edge_count(); ++e)
        if (!in_u[g.edge(e).u] && !in_u[g.edge(e).v])
            throw Error("propagate_unit_circle_classes: edge " + g.edge(e).id + " is not dominated");
    {
        // connectivity of the induced subgraph on u_set
        int start = g.vertex_index(u_set.front());
        std::vector<bool> seen(g.vertex_count(), false);
        std::vector<int> stack{start};
        seen[start] = true;
        int reached = 1, want = 0;
        for (int v = 0; v < g.vertex_count(); ++v) want += in_u[v] ? 1 : 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident(v)) {
                int w = g.other_end(e, v);
                if (in_u[w] && !seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != want) throw Error("propagate_unit_circle_classes: the vertex set is not connected");
    }
    int seed = g.edge_index(seed_edge);

    // the six signed cube roots of unity in Z[w]; branch order fixes the
    // lexicographically first class assignment
    auto units = std::make_shared<std::vector<Eisenstein>>(std::vector<Eisenstein>{
        {1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}, {1, 1}});
    EisensteinOps ops{units};
    ZeroSumProblem<EisensteinOps> p;
    p.ops = ops;
    p.num_vars = g.edge_count();
    p.domain = *units;
    p.fixed.push_back({seed, Eisenstein{1, 0}});
    for (int v = 0; v < g.vertex_count(); ++v) {
        ZeroSumProblem<EisensteinOps>::Constraint c;
        for (int e : g.incident(v)) c.terms.push_back({e, g.canonical_head(e) == v ? +1 : -1});
        if (!c.terms.empty()) p.constraints.push_back(std::move(c));
    }

    UnitCirclePropagation out;
    auto sol = zero_sum_first(p, threads);
    if (!sol) {
        out.found = false;
        out.message = "no unit-circle flow on this class";
        return out;
    }
    out.found = true;
    out.classes.rotation.resize(g.edge_count());
    out.classes.sign.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Eisenstein& x = (*sol)[e];
        for (int r = 0; r < 3; ++r) {
            if (x == (*units)[r]) {
                out.classes.rotation[e] = r;
                out.classes.sign[e] = +1;
            } else if (x == (*units)[3 + r]) {
                out.classes.rotation[e] = r;
                out.classes.sign[e] = -1;
            }
        }
    }
    out.message = "three-class partition found";
    return out;
}

}  // namespace gflow
