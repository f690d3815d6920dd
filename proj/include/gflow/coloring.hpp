#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gflow/cuts.hpp"
#include "gflow/flow.hpp"
#include "gflow/group.hpp"
#include "gflow/multigraph.hpp"

namespace gflow {

// Total edge coloring with colors 1..k.
struct EdgeColoring {
    int k = 0;
    std::vector<int> colors;  // per edge index

    static EdgeColoring constant(const Multigraph& g, int k, int color) {
        EdgeColoring c;
        c.k = k;
        c.colors.assign(g.edge_count(), color);
        return c;
    }
};

struct SemiColoringCheck {
    bool ok = true;
    std::optional<OrientedCut> violated_cut;
};

namespace detail {
inline void require_total_coloring(const Multigraph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        throw Error("coloring is partial");
    for (int col : c.colors)
        if (col < 1 || col > c.k) throw Error("color out of range 1..k");
}

inline bool cut_colors_share_parity(const EdgeColoring& c, const std::vector<int>& crossing) {
    std::vector<int> count(c.k + 1, 0);
    for (int e : crossing) ++count[c.colors[e]];
    int parity = count[1] % 2;
    for (int col = 2; col <= c.k; ++col)
        if (count[col] % 2 != parity) return false;
    return true;
}
}  // namespace detail

// A coloring is semi when, in every cut, the per-color edge counts all share
// one parity. Checks every cut of a finite connected graph, subject to the
// cut enumeration guard.
inline SemiColoringCheck is_semi_coloring(const Multigraph& g, const EdgeColoring& c,
                                          int max_vertices = 20) {
    detail::require_total_coloring(g, c);
    SemiColoringCheck r;
    for (const auto& cut : enumerate_cuts(g, max_vertices)) {
        if (!detail::cut_colors_share_parity(c, cut.crossing)) {
            r.ok = false;
            r.violated_cut = cut;
            return r;
        }
    }
    return r;
}

// Backtracking search for a semi-k-edge-coloring. Edges are colored in input
// order with colors ascending; a vertex whose incident edges are all colored
// prunes the branch unless its color counts share parity (the single-vertex
// cut condition), and complete leaves are confirmed against every cut.
inline std::optional<EdgeColoring> find_semi_coloring(const Multigraph& g, int k,
                                                      int max_vertices = 20) {
    if (k < 1) throw Error("semi coloring requires k >= 1");
    g.require_connected("find_semi_coloring");
    if (g.vertex_count() > max_vertices)
        throw Error("find_semi_coloring: vertex count exceeds guard of " + std::to_string(max_vertices));

    int m = g.edge_count();
    std::vector<int> colors(m, 0);
    // last edge index per vertex, to know when a vertex completes
    std::vector<int> last_edge(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int e : g.incident(v)) last_edge[v] = std::max(last_edge[v], e);

    auto vertex_ok = [&](int v) {
        std::vector<int> count(k + 1, 0);
        for (int e : g.incident(v)) count[colors[e]] += g.is_loop(e) ? 2 : 1;
        int parity = count[1] % 2;
        for (int col = 2; col <= k; ++col)
            if (count[col] % 2 != parity) return false;
        return true;
    };

    std::function<bool(int)> place = [&](int e) -> bool {
        if (e == m) return true;
        const auto& ed = g.edge(e);
        for (int col = 1; col <= k; ++col) {
            colors[e] = col;
            bool ok = true;
            if (last_edge[ed.u] == e && !vertex_ok(ed.u)) ok = false;
            if (ok && ed.v != ed.u && last_edge[ed.v] == e && !vertex_ok(ed.v)) ok = false;
            if (ok && place(e + 1)) return true;
        }
        colors[e] = 0;
        return false;
    };
    if (m == 0) {
        EdgeColoring c;
        c.k = k;
        return c;
    }
    if (!place(0)) return std::nullopt;
    EdgeColoring c;
    c.k = k;
    c.colors = colors;
    auto confirm = is_semi_coloring(g, c, max_vertices);
    if (!confirm.ok) throw Error("find_semi_coloring: vertex-parity solution fails a cut; this is a bug");
    return c;
}

// The flow alphabet matched to semi-k-colorings: the standard basis of the
// rank k-1 vector space over Z2 plus the all-ones vector.
inline FlowAlphabet semi_coloring_alphabet(int k) {
    if (k < 1) throw Error("semi coloring alphabet requires k >= 1");
    std::vector<int> moduli(k - 1, 2);
    FiniteAbelianGroup v(moduli);
    std::vector<GroupElement> elems;
    for (int i = 0; i < k - 1; ++i) {
        std::vector<int> coords(k - 1, 0);
        coords[i] = 1;
        elems.push_back(v.make(coords));
    }
    elems.push_back(v.make(std::vector<int>(k - 1, 1)));
    return FlowAlphabet::of(v, elems);
}

// Color i (i < k) maps to the i-th basis vector and color k to the sum of the
// basis; this is a bijection between semi-k-colorings and flows over the
// alphabet above.
inline EdgeAssignment coloring_to_flow(const Multigraph& g, const EdgeColoring& c,
                                       int max_vertices = 20) {
    auto chk = is_semi_coloring(g, c, max_vertices);
    if (!chk.ok) {
        std::string side;
        for (const auto& id : chk.violated_cut->side_a_ids(g)) side += side.empty() ? id : "," + id;
        throw Error("coloring_to_flow: not a semi coloring (cut {" + side + "} has mixed parities)");
    }
    FlowAlphabet a = semi_coloring_alphabet(c.k);
    const auto& grp = a.group();
    std::vector<GroupElement> values;
    values.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        int col = c.colors[e];
        if (col < c.k) {
            std::vector<int> coords(c.k - 1, 0);
            coords[col - 1] = 1;
            values.push_back(grp.make(coords));
        } else {
            values.push_back(grp.make(std::vector<int>(c.k - 1, 1)));
        }
    }
    return EdgeAssignment::group_valued(grp, std::move(values));
}

inline EdgeColoring flow_to_coloring(const Multigraph& g, const EdgeAssignment& f, int k) {
    FlowAlphabet a = semi_coloring_alphabet(k);
    FlowCheck chk = verify_flow(g, f, a);
    if (!chk.ok) {
        if (chk.offending_edge)
            throw Error("flow_to_coloring: edge " + *chk.offending_edge + " carries a value outside the alphabet");
        throw Error("flow_to_coloring: " + chk.message);
    }
    EdgeColoring c;
    c.k = k;
    c.colors.reserve(g.edge_count());
    GroupElement all_ones = a.group().make(std::vector<int>(k - 1, 1));
    for (int e = 0; e < g.edge_count(); ++e) {
        const GroupElement& x = f.gvalue(e);
        if (x == all_ones && k != 2) {
            c.colors.push_back(k);
            continue;
        }
        // locate the basis vector; for k == 2 the single alphabet value is
        // both e_1 and the basis sum, and color 1 is the canonical reading
        int col = k;
        for (int i = 0; i < k - 1; ++i)
            if (x.coords[i] != 0) {
                col = i + 1;
                break;
            }
        c.colors.push_back(col);
    }
    return c;
}

// Decides semi-3-colorability and nonzero Klein-group flow existence by
// independent searches; the two always agree.
inline ExistencePair semi3_iff_z4(const Multigraph& g, int max_vertices = 20, int threads = 1) {
    ExistencePair r;
    r.first_exists = find_flow(g, alphabet_nonzero(FiniteAbelianGroup({2, 2})), threads).has_value();
    r.second_exists = find_semi_coloring(g, 3, max_vertices).has_value();
    if (!r.agree()) throw Error("Z4-flow / semi-3-coloring equivalence violated; this is a bug");
    return r;
}

}  // namespace gflow
