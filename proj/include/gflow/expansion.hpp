#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gflow/coloring.hpp"
#include "gflow/contraction.hpp"
#include "gflow/flow.hpp"
#include "gflow/multigraph.hpp"

namespace gflow {

namespace detail {

// Mutable graph scratchpad for the expansion constructions. Every vertex
// remembers which original vertex it descends from; contracting those groups
// recovers the input graph.
struct Workspace {
    struct WEdge {
        std::string id;
        std::string u, v;
        GroupElement val;  // flow value directed u -> v (cubic expansion)
        int color = 0;     // edge color (regular expansion)
    };

    std::vector<std::string> vertex_order;      // input order, then creation order
    std::map<std::string, bool> alive;
    std::map<std::string, int> owner;           // -> original vertex index
    std::vector<WEdge> edges;

    void add_vertex(const std::string& id, int owner_index) {
        vertex_order.push_back(id);
        alive[id] = true;
        owner[id] = owner_index;
    }

    std::vector<int> incident_sorted_by_id(const std::string& v) const {
        std::vector<int> out;
        for (int e = 0; e < static_cast<int>(edges.size()); ++e)
            if (edges[e].u == v || edges[e].v == v) out.push_back(e);
        std::sort(out.begin(), out.end(),
                  [&](int a, int b) { return edges[a].id < edges[b].id; });
        return out;
    }

    int degree(const std::string& v) const {
        int d = 0;
        for (const auto& e : edges) d += (e.u == v) + (e.v == v);
        return d;
    }

    void move_endpoint(int e, const std::string& from, const std::string& to) {
        if (edges[e].u == from)
            edges[e].u = to;
        else
            edges[e].v = to;
    }

    Multigraph to_graph() const {
        std::vector<std::string> vs;
        for (const auto& v : vertex_order)
            if (alive.at(v)) vs.push_back(v);
        std::vector<Multigraph::EdgeSpec> es;
        for (const auto& e : edges) es.push_back({e.id, e.u, e.v});
        return Multigraph(vs, es);
    }
};

}  // namespace detail

struct CubicExpansion {
    Multigraph cubic;
    EdgeAssignment flow;
    CutFamily family;  // one cut per original vertex, in input order
    std::vector<std::pair<std::string, std::string>> correspondence;  // original vertex -> word
};

// Rebuilds the input as a contraction of a cubic graph carrying the same
// nonzero Z_k-flow (k odd, k >= 3). Vertices of degree four or more are split
// two edges at a time: a zero-sum pair is detached outright, any other pair
// moves onto a claw whose new edge carries the pair sum. Remaining degree-two
// vertices are then replaced by a complete bipartite gadget on 3+3 vertices
// whose flow uses the values {a1, a, b} with a1 + a + b = 0.
inline CubicExpansion expand_to_cubic(const Multigraph& g, const EdgeAssignment& f) {
    if (f.integer_domain() || f.group().rank() != 1)
        throw Error("expand_to_cubic expects a Z_k-valued assignment");
    int k = f.group().moduli()[0];
    if (k % 2 == 0 || k < 3) throw Error("expand_to_cubic requires odd k >= 3");
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) throw Error("expand_to_cubic: input has a loop (" + g.edge(e).id + ")");
    if (g.edge_count() == 0) throw Error("expand_to_cubic: input has no edges");
    const auto& grp = f.group();
    FlowCheck chk = verify_flow(g, f, alphabet_nonzero(grp));
    if (!chk.ok) throw Error("expand_to_cubic: input is not a nonzero flow: " + chk.message);

    detail::Workspace w;
    for (int v = 0; v < g.vertex_count(); ++v) w.add_vertex(g.vertex_id(v), v);
    for (int e = 0; e < g.edge_count(); ++e)
        w.edges.push_back({g.edge(e).id, g.vertex_id(g.canonical_tail(e)), g.vertex_id(g.canonical_head(e)),
                           f.gvalue(e), 0});

    auto value_into = [&](const detail::Workspace::WEdge& e, const std::string& v) {
        return e.v == v ? e.val : grp.neg(e.val);
    };

    // split high-degree vertices
    for (int ov = 0; ov < g.vertex_count(); ++ov) {
        const std::string vid = g.vertex_id(ov);
        int counter = 0;
        while (w.degree(vid) >= 4) {
            auto inc = w.incident_sorted_by_id(vid);
            int pick_i = -1, pick_j = -1;
            bool zero_sum = false;
            for (size_t i = 0; i < inc.size() && !zero_sum; ++i)
                for (size_t j = i + 1; j < inc.size(); ++j) {
                    GroupElement s = grp.add(value_into(w.edges[inc[i]], vid), value_into(w.edges[inc[j]], vid));
                    if (s.is_zero()) {
                        pick_i = inc[i];
                        pick_j = inc[j];
                        zero_sum = true;
                        break;
                    }
                }
            if (!zero_sum) {
                pick_i = inc[0];
                pick_j = inc[1];
            }
            GroupElement s = grp.add(value_into(w.edges[pick_i], vid), value_into(w.edges[pick_j], vid));
            std::string u = vid + ".s" + std::to_string(counter);
            w.add_vertex(u, ov);
            w.move_endpoint(pick_i, vid, u);
            w.move_endpoint(pick_j, vid, u);
            if (!zero_sum)
                w.edges.push_back({vid + ".c" + std::to_string(counter), u, vid, s, 0});
            ++counter;
        }
    }

    // replace degree-two vertices with gadgets; new gadget vertices have
    // degree three and never re-enter the scan
    for (size_t idx = 0; idx < w.vertex_order.size(); ++idx) {
        std::string vid = w.vertex_order[idx];
        if (!w.alive[vid] || w.degree(vid) != 2) continue;
        auto inc = w.incident_sorted_by_id(vid);
        int e1 = inc[0], e2 = inc[1];
        GroupElement a1 = value_into(w.edges[e1], vid);
        // smallest nonzero a with b = -a1 - a nonzero
        GroupElement a = grp.zero(), b = grp.zero();
        for (long long i = 1; i < grp.order(); ++i) {
            a = grp.element_at(i);
            b = grp.neg(grp.add(a1, a));
            if (!b.is_zero()) break;
        }
        int ov = w.owner[vid];
        std::vector<std::string> gv;
        for (int i = 0; i < 6; ++i) {
            gv.push_back(vid + ".g" + std::to_string(i));
            w.add_vertex(gv.back(), ov);
        }
        // three matchings of the bipartite gadget, oriented left to right;
        // matching 0 carries a1 and loses its (g0, g3) edge
        const GroupElement vals[3] = {a1, a, b};
        int ge = 0;
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) {
                int r = 3 + (i + j) % 3;
                if (j == 0 && i == 0) continue;
                w.edges.push_back({vid + ".ge" + std::to_string(ge++), gv[i], gv[r], vals[j], 0});
            }
        w.move_endpoint(e1, vid, gv[3]);  // e1 carried a1 into v; g3 received a1
        w.move_endpoint(e2, vid, gv[0]);  // e2 carried a1 out of v; g0 sent a1
        w.alive[vid] = false;
    }

    CubicExpansion out;
    out.cubic = w.to_graph();
    for (int v = 0; v < out.cubic.vertex_count(); ++v)
        if (out.cubic.degree(v) != 3)
            throw Error("expand_to_cubic: construction failed to reach degree 3; this is a bug");

    std::vector<GroupElement> values;
    for (const auto& e : w.edges) {
        int tail = out.cubic.canonical_tail(out.cubic.edge_index(e.id));
        values.push_back(out.cubic.vertex_id(tail) == e.u ? e.val : grp.neg(e.val));
    }
    out.flow = EdgeAssignment::group_valued(grp, std::move(values));
    FlowCheck post = verify_flow(out.cubic, out.flow, alphabet_nonzero(grp));
    if (!post.ok) throw Error("expand_to_cubic: output flow failed verification; this is a bug");

    for (int ov = 0; ov < g.vertex_count(); ++ov) {
        std::vector<bool> side(out.cubic.vertex_count(), false);
        for (int v = 0; v < out.cubic.vertex_count(); ++v)
            side[v] = w.owner.at(out.cubic.vertex_id(v)) == ov;
        out.family.cuts.push_back(make_cut(out.cubic, side));
    }
    auto [cg, cmap] = contract(out.cubic, out.family);
    Multigraph shrunk = without_loops(cg.quotient);
    if (shrunk.edge_count() != g.edge_count())
        throw Error("expand_to_cubic: contraction does not recover the input; this is a bug");
    for (int ov = 0; ov < g.vertex_count(); ++ov) {
        // the word of any group member stands for the original vertex
        for (int v = 0; v < out.cubic.vertex_count(); ++v)
            if (w.owner.at(out.cubic.vertex_id(v)) == ov) {
                out.correspondence.push_back({g.vertex_id(ov), cmap.word(v)});
                break;
            }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        int qe = shrunk.edge_index(g.edge(e).id);
        std::string wu = out.correspondence[g.edge(e).u].second;
        std::string wv = out.correspondence[g.edge(e).v].second;
        std::string qu = shrunk.vertex_id(shrunk.edge(qe).u);
        std::string qv = shrunk.vertex_id(shrunk.edge(qe).v);
        if (!((qu == wu && qv == wv) || (qu == wv && qv == wu)))
            throw Error("expand_to_cubic: contraction endpoints disagree; this is a bug");
    }
    return out;
}

struct RegularExpansion {
    Multigraph regular;
    EdgeColoring coloring;  // proper k-edge-coloring of the output
    CutFamily family;
    std::vector<std::pair<std::string, std::string>> correspondence;
};

namespace detail {

// Proper k-edge-coloring of the complete graph on k+1 vertices (k odd),
// by the round-robin construction. Colors are 0-based here.
inline int round_robin_color(int i, int j, int k) {
    if (j == k) return (2 * i) % k;
    if (i == k) return (2 * j) % k;
    return (i + j) % k;
}

}  // namespace detail

// Rebuilds the input as a contraction of a k-regular properly k-edge-colored
// graph (k odd), given a semi-k-coloring. At each vertex, same-colored edge
// pairs are spliced through a complete-graph gadget missing one edge of their
// color; at odd-degree vertices one edge of each color is first detached to a
// fresh degree-k vertex. Vertices already of degree k with one edge per color
// are left untouched.
inline RegularExpansion expand_to_regular(const Multigraph& g, const EdgeColoring& c,
                                          int max_vertices = 20) {
    int k = c.k;
    if (k % 2 == 0 || k < 3) throw Error("expand_to_regular requires odd k >= 3");
    if (g.edge_count() == 0) throw Error("expand_to_regular: input has no edges");
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) throw Error("expand_to_regular: input has a loop (" + g.edge(e).id + ")");
    auto chk = is_semi_coloring(g, c, max_vertices);
    if (!chk.ok) {
        std::string side;
        for (const auto& id : chk.violated_cut->side_a_ids(g)) side += side.empty() ? id : "," + id;
        throw Error("expand_to_regular: not a semi coloring (cut {" + side + "} has mixed parities)");
    }

    detail::Workspace w;
    for (int v = 0; v < g.vertex_count(); ++v) w.add_vertex(g.vertex_id(v), v);
    for (int e = 0; e < g.edge_count(); ++e)
        w.edges.push_back({g.edge(e).id, g.vertex_id(g.edge(e).u), g.vertex_id(g.edge(e).v),
                           GroupElement{}, c.colors[e]});

    for (int ov = 0; ov < g.vertex_count(); ++ov) {
        const std::string vid = g.vertex_id(ov);
        auto inc = w.incident_sorted_by_id(vid);
        // leave locally proper degree-k vertices alone
        if (static_cast<int>(inc.size()) == k) {
            std::vector<int> seen(k + 1, 0);
            bool proper = true;
            for (int e : inc)
                if (++seen[w.edges[e].color] > 1) proper = false;
            if (proper) continue;
        }
        int deg = static_cast<int>(inc.size());
        if (deg % 2 == 1) {
            // detach one edge of each color to a fresh degree-k vertex
            std::string u = vid + ".u";
            w.add_vertex(u, ov);
            for (int col = 1; col <= k; ++col) {
                int pick = -1;
                for (int e : inc)
                    if (w.edges[e].color == col) {
                        pick = e;
                        break;
                    }
                if (pick < 0)
                    throw Error("expand_to_regular: odd vertex misses color " + std::to_string(col) +
                                "; this is a bug");
                w.move_endpoint(pick, vid, u);
            }
            inc = w.incident_sorted_by_id(vid);
        }
        // pair remaining same-colored edges through gadgets
        int pair_index = 0;
        for (int col = 1; col <= k; ++col) {
            std::vector<int> of_color;
            for (int e : inc)
                if (w.edges[e].color == col) of_color.push_back(e);
            if (of_color.size() % 2 != 0)
                throw Error("expand_to_regular: odd color count after detachment; this is a bug");
            for (size_t t = 0; t + 1 < of_color.size(); t += 2) {
                std::string base = vid + ".p" + std::to_string(pair_index++);
                std::vector<std::string> gv;
                for (int i = 0; i <= k; ++i) {
                    gv.push_back(base + "." + std::to_string(i));
                    w.add_vertex(gv.back(), ov);
                }
                bool deleted = false;
                int ge = 0;
                int att_a = -1, att_b = -1;
                for (int i = 0; i <= k; ++i)
                    for (int j = i + 1; j <= k; ++j) {
                        int ecol = detail::round_robin_color(i, j, k) + 1;
                        if (!deleted && ecol == col) {
                            deleted = true;
                            att_a = i;
                            att_b = j;
                            continue;
                        }
                        w.edges.push_back({base + ".e" + std::to_string(ge++), gv[i], gv[j],
                                           GroupElement{}, ecol});
                    }
                w.move_endpoint(of_color[t], vid, gv[att_a]);
                w.move_endpoint(of_color[t + 1], vid, gv[att_b]);
            }
        }
        w.alive[vid] = false;
    }

    RegularExpansion out;
    out.regular = w.to_graph();
    out.coloring.k = k;
    for (const auto& e : w.edges) out.coloring.colors.push_back(e.color);

    for (int v = 0; v < out.regular.vertex_count(); ++v) {
        if (out.regular.degree(v) != k)
            throw Error("expand_to_regular: output is not k-regular; this is a bug");
        std::vector<int> seen(k + 1, 0);
        for (int e : out.regular.incident(v))
            if (++seen[out.coloring.colors[e]] > 1)
                throw Error("expand_to_regular: output coloring is not proper; this is a bug");
    }

    for (int ov = 0; ov < g.vertex_count(); ++ov) {
        std::vector<bool> side(out.regular.vertex_count(), false);
        for (int v = 0; v < out.regular.vertex_count(); ++v)
            side[v] = w.owner.at(out.regular.vertex_id(v)) == ov;
        out.family.cuts.push_back(make_cut(out.regular, side));
    }
    auto [cg, cmap] = contract(out.regular, out.family);
    Multigraph shrunk = without_loops(cg.quotient);
    if (shrunk.edge_count() != g.edge_count())
        throw Error("expand_to_regular: contraction does not recover the input; this is a bug");
    for (int ov = 0; ov < g.vertex_count(); ++ov)
        for (int v = 0; v < out.regular.vertex_count(); ++v)
            if (w.owner.at(out.regular.vertex_id(v)) == ov) {
                out.correspondence.push_back({g.vertex_id(ov), cmap.word(v)});
                break;
            }
    for (int e = 0; e < g.edge_count(); ++e) {
        int qe = shrunk.edge_index(g.edge(e).id);
        std::string wu = out.correspondence[g.edge(e).u].second;
        std::string wv = out.correspondence[g.edge(e).v].second;
        std::string qu = shrunk.vertex_id(shrunk.edge(qe).u);
        std::string qv = shrunk.vertex_id(shrunk.edge(qe).v);
        if (!((qu == wu && qv == wv) || (qu == wv && qv == wu)))
            throw Error("expand_to_regular: contraction endpoints disagree; this is a bug");
    }
    return out;
}

}  // namespace gflow
