#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gflow/assignment.hpp"
#include "gflow/cuts.hpp"
#include "gflow/group.hpp"
#include "gflow/multigraph.hpp"
#include "gflow/search.hpp"

namespace gflow {

struct FlowCheck {
    bool ok = true;
    std::optional<OrientedCut> violated_cut;
    std::optional<std::string> offending_edge;
    std::string message;

    static FlowCheck pass() { return {}; }
    static FlowCheck bad_cut(OrientedCut c, std::string msg) {
        FlowCheck r;
        r.ok = false;
        r.violated_cut = std::move(c);
        r.message = std::move(msg);
        return r;
    }
    static FlowCheck bad_edge(std::string e, std::string msg) {
        FlowCheck r;
        r.ok = false;
        r.offending_edge = std::move(e);
        r.message = std::move(msg);
        return r;
    }
};

namespace detail {

inline void require_total(const Multigraph& g, const EdgeAssignment& f) {
    if (f.size() != g.edge_count())
        throw Error("assignment is partial: " + std::to_string(f.size()) + " values for " +
                    std::to_string(g.edge_count()) + " edges");
}

inline void require_alphabet_domain_match(const EdgeAssignment& f, const FlowAlphabet& a) {
    if (a.kind() == FlowAlphabet::Kind::integer_k) {
        if (!f.integer_domain()) throw Error("integer alphabet given for a group-valued assignment");
    } else {
        if (f.integer_domain()) throw Error("group alphabet given for an integer-valued assignment");
        if (!(f.group() == a.group()))
            throw Error("assignment group " + f.group().label() + " does not match alphabet group " +
                        a.group().label());
    }
}

// Signed sum of f over the crossing edges of a cut, oriented A to B.
inline bool cut_sum_is_zero(const Multigraph& g, const EdgeAssignment& f, const OrientedCut& cut) {
    if (f.integer_domain()) {
        long long s = 0;
        for (int e : cut.crossing) s += cut.side_a[g.canonical_tail(e)] ? f.ivalue(e) : -f.ivalue(e);
        return s == 0;
    }
    const auto& grp = f.group();
    GroupElement s = grp.zero();
    for (int e : cut.crossing) {
        const GroupElement& x = f.gvalue(e);
        s = grp.add(s, cut.side_a[g.canonical_tail(e)] ? x : grp.neg(x));
    }
    return s.is_zero();
}

}  // namespace detail

// Checks value membership and the zero-sum law. With an explicit cut family
// only those cuts are checked (a flow "with respect to M"); otherwise all
// single-vertex cuts are checked, which for a finite graph is equivalent to
// checking every cut, since a cut's sum is the sum of the vertex sums of one
// side. Loops never contribute to any cut.
inline FlowCheck verify_flow(const Multigraph& g, const EdgeAssignment& f, const FlowAlphabet& a,
                             const std::vector<OrientedCut>* cuts = nullptr) {
    detail::require_total(g, f);
    detail::require_alphabet_domain_match(f, a);
    for (int e = 0; e < g.edge_count(); ++e) {
        bool in = f.integer_domain() ? a.contains_integer(f.ivalue(e)) : a.contains(f.gvalue(e));
        if (!in) return FlowCheck::bad_edge(g.edge(e).id, "edge value outside alphabet");
    }
    if (cuts) {
        for (const auto& cut : *cuts) {
            if (!is_valid_cut(g, cut)) throw Error("verify_flow: not a cut");
            if (!detail::cut_sum_is_zero(g, f, cut))
                return FlowCheck::bad_cut(cut, "cut sum is nonzero");
        }
        return FlowCheck::pass();
    }
    if (g.vertex_count() < 2) return FlowCheck::pass();
    for (int v = 0; v < g.vertex_count(); ++v) {
        OrientedCut cut = single_vertex_cut(g, v);
        if (!detail::cut_sum_is_zero(g, f, cut))
            return FlowCheck::bad_cut(cut, "vertex law fails at " + g.vertex_id(v));
    }
    return FlowCheck::pass();
}

namespace detail {

// Builds the vertex-law problem over non-loop edges. var_of[e] is -1 for
// loops.
template <class Ops>
ZeroSumProblem<Ops> vertex_law_problem(const Multigraph& g, Ops ops,
                                       std::vector<typename Ops::value_t> domain,
                                       std::vector<int>& var_of) {
    ZeroSumProblem<Ops> p;
    p.ops = std::move(ops);
    p.domain = std::move(domain);
    var_of.assign(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (!g.is_loop(e)) var_of[e] = p.num_vars++;
    for (int v = 0; v < g.vertex_count(); ++v) {
        typename ZeroSumProblem<Ops>::Constraint c;
        for (int e : g.incident(v)) {
            if (g.is_loop(e)) continue;
            c.terms.push_back({var_of[e], g.canonical_head(e) == v ? +1 : -1});
        }
        if (!c.terms.empty()) p.constraints.push_back(std::move(c));
    }
    return p;
}

inline EdgeAssignment assemble_group_assignment(const Multigraph& g, const FlowAlphabet& a,
                                                const std::vector<int>& var_of,
                                                const std::vector<int>& solution) {
    const auto& grp = a.group();
    std::vector<GroupElement> values(g.edge_count(), grp.zero());
    for (int e = 0; e < g.edge_count(); ++e)
        values[e] = var_of[e] < 0 ? a.elements().front() : grp.element_at(solution[var_of[e]]);
    return EdgeAssignment::group_valued(grp, std::move(values));
}

inline EdgeAssignment assemble_integer_assignment(const Multigraph& g, const FlowAlphabet& a,
                                                  const std::vector<int>& var_of,
                                                  const std::vector<long long>& solution) {
    std::vector<long long> values(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        values[e] = var_of[e] < 0 ? a.integer_values().front() : solution[var_of[e]];
    return EdgeAssignment::integer_valued(a.k(), std::move(values));
}

}  // namespace detail

// Backtracking search for an A-flow. Variable order is edge input order,
// value order is alphabet construction order, and the first (hence
// lexicographically least) solution is returned. Loops are unconstrained and
// receive the first alphabet value.
inline std::optional<EdgeAssignment> find_flow(const Multigraph& g, const FlowAlphabet& a,
                                               int threads = 1) {
    std::vector<int> var_of;
    if (a.kind() == FlowAlphabet::Kind::integer_k) {
        IntegerOps ops{a.k()};
        auto p = detail::vertex_law_problem(g, ops, a.integer_values(), var_of);
        auto sol = zero_sum_first(p, threads);
        if (!sol) return std::nullopt;
        return detail::assemble_integer_assignment(g, a, var_of, *sol);
    }
    auto tables = std::make_shared<const GroupTables>(a.group(), a.elements());
    GroupIndexOps ops{tables};
    std::vector<int> domain;
    for (const auto& e : a.elements()) domain.push_back(static_cast<int>(a.group().index_of(e)));
    auto p = detail::vertex_law_problem(g, ops, domain, var_of);
    auto sol = zero_sum_first(p, threads);
    if (!sol) return std::nullopt;
    return detail::assemble_group_assignment(g, a, var_of, *sol);
}

// Exhaustive count of A-flows on the canonical orientation. Loops are fixed
// to the first alphabet value, so they contribute a factor of one.
inline unsigned long long count_flows(const Multigraph& g, const FlowAlphabet& a, int max_edges = 12) {
    if (g.edge_count() > max_edges)
        throw Error("count_flows: " + std::to_string(g.edge_count()) + " edges exceeds exhaustive guard of " +
                    std::to_string(max_edges));
    std::vector<int> var_of;
    if (a.kind() == FlowAlphabet::Kind::integer_k) {
        IntegerOps ops{a.k()};
        auto p = detail::vertex_law_problem(g, ops, a.integer_values(), var_of);
        return zero_sum_count(p);
    }
    auto tables = std::make_shared<const GroupTables>(a.group(), a.elements());
    GroupIndexOps ops{tables};
    std::vector<int> domain;
    for (const auto& e : a.elements()) domain.push_back(static_cast<int>(a.group().index_of(e)));
    auto p = detail::vertex_law_problem(g, ops, domain, var_of);
    return zero_sum_count(p);
}

inline std::optional<EdgeAssignment> find_k_flow(const Multigraph& g, int k, int threads = 1) {
    return find_flow(g, alphabet_k_flow(k), threads);
}

struct ExistencePair {
    bool first_exists = false;
    bool second_exists = false;
    bool agree() const { return first_exists == second_exists; }
};

// Integer k-flow existence against nonzero Z_k-flow existence; the two always
// agree, and a disagreement would be an implementation fault.
inline ExistencePair k_flow_iff_zk(const Multigraph& g, int k, int threads = 1) {
    ExistencePair r;
    r.first_exists = find_k_flow(g, k, threads).has_value();
    r.second_exists = find_flow(g, alphabet_nonzero(FiniteAbelianGroup::cyclic(k)), threads).has_value();
    if (!r.agree()) throw Error("k-flow / Z_k-flow equivalence violated; this is a bug");
    return r;
}

// Nonzero-flow existence for two groups of equal order.
inline ExistencePair order_equivalence(const Multigraph& g, const FiniteAbelianGroup& h1,
                                       const FiniteAbelianGroup& h2, int threads = 1) {
    if (!same_order(h1, h2))
        throw Error("order_equivalence: groups " + h1.label() + " and " + h2.label() +
                    " have different orders");
    ExistencePair r;
    r.first_exists = find_flow(g, alphabet_nonzero(h1), threads).has_value();
    r.second_exists = find_flow(g, alphabet_nonzero(h2), threads).has_value();
    if (!r.agree()) throw Error("equal-order flow equivalence violated; this is a bug");
    return r;
}

// The indicator assignment of an edge subset, over Z2.
inline EdgeAssignment indicator_flow(const Multigraph& g, const EdgeSubset& f) {
    if (static_cast<int>(f.member.size()) != g.edge_count())
        throw Error("indicator_flow: subset size mismatch");
    FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    std::vector<GroupElement> values;
    values.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) values.push_back(z2.make({f.contains(e) ? 1 : 0}));
    return EdgeAssignment::group_valued(z2, std::move(values));
}

// The indicator of F is a Z2-flow exactly when F lies in the cycle space.
inline ExistencePair z2_flow_iff_cycle_space(const Multigraph& g, const EdgeSubset& f) {
    FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    FlowAlphabet full = FlowAlphabet::of(z2, {z2.make({0}), z2.make({1})});
    ExistencePair r;
    r.first_exists = verify_flow(g, indicator_flow(g, f), full).ok;
    r.second_exists = is_cycle_space_member(g, f);
    if (!r.agree()) throw Error("Z2 indicator / cycle space equivalence violated; this is a bug");
    return r;
}

namespace detail {
inline const FiniteAbelianGroup& require_klein(const EdgeAssignment& f) {
    if (f.integer_domain() || f.group().moduli() != std::vector<int>{2, 2})
        throw Error("expected a Z2xZ2-valued assignment");
    return f.group();
}
}  // namespace detail

// Splits a non-elusive Z2xZ2-flow into the supports of its two coordinate
// projections: both lie in the cycle space and cover every edge.
inline std::pair<EdgeSubset, EdgeSubset> z4_to_double_cover(const Multigraph& g,
                                                            const EdgeAssignment& f) {
    const auto& grp = detail::require_klein(f);
    FlowCheck chk = verify_flow(g, f, alphabet_nonzero(grp));
    if (!chk.ok) {
        if (chk.offending_edge)
            throw Error("not a non-elusive Z2xZ2-flow: edge " + *chk.offending_edge);
        throw Error("not a non-elusive Z2xZ2-flow: " + chk.message);
    }
    EdgeSubset e1(g.edge_count()), e2(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (f.gvalue(e).coords[0] != 0) e1.insert(e);
        if (f.gvalue(e).coords[1] != 0) e2.insert(e);
    }
    return {e1, e2};
}

// Rebuilds the Z2xZ2-flow from two cycle-space members covering every edge.
inline EdgeAssignment double_cover_to_z4(const Multigraph& g, const EdgeSubset& e1,
                                         const EdgeSubset& e2) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (!e1.contains(e) && !e2.contains(e))
            throw Error("double cover misses edge " + g.edge(e).id);
    auto require_member = [&](const EdgeSubset& s, const char* which) {
        if (!is_cycle_space_member(g, s))
            throw Error(std::string(which) + " is not a cycle space member");
    };
    require_member(e1, "first edge set");
    require_member(e2, "second edge set");
    FiniteAbelianGroup klein({2, 2});
    std::vector<GroupElement> values;
    values.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        values.push_back(klein.make({e1.contains(e) ? 1 : 0, e2.contains(e) ? 1 : 0}));
    EdgeAssignment f = EdgeAssignment::group_valued(klein, std::move(values));
    FlowCheck chk = verify_flow(g, f, alphabet_nonzero(klein));
    if (!chk.ok) throw Error("double cover does not assemble to a flow: " + chk.message);
    return f;
}

}  // namespace gflow
