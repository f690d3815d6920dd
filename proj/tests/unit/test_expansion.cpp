#include <catch2/catch_amalgamated.hpp>

#include "gflow/expansion.hpp"
#include "gflow/named_graphs.hpp"

using namespace gflow;

namespace {

void check_cubic_postconditions(const Multigraph& g, const EdgeAssignment& f,
                                const CubicExpansion& r) {
    for (int v = 0; v < r.cubic.vertex_count(); ++v) REQUIRE(r.cubic.degree(v) == 3);
    REQUIRE(verify_flow(r.cubic, r.flow, alphabet_nonzero(f.group())).ok);
    // the contraction family recovers the input up to loops
    auto [cg, cmap] = contract(r.cubic, r.family);
    Multigraph shrunk = without_loops(cg.quotient);
    REQUIRE(shrunk.vertex_count() == g.vertex_count());
    REQUIRE(shrunk.edge_count() == g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) REQUIRE(shrunk.has_edge_id(g.edge(e).id));
    // and the original flow values survive on the original edges
    for (int e = 0; e < g.edge_count(); ++e) {
        int he = r.cubic.edge_index(g.edge(e).id);
        GroupElement hv = r.flow.gvalue(he);
        REQUIRE((hv == f.gvalue(e) || hv == f.group().neg(f.gvalue(e))));
    }
}

}  // namespace

TEST_CASE("expanding a triangle flow to a cubic graph") {
    auto tri = triangle_graph();
    auto z3 = FiniteAbelianGroup::cyclic(3);
    auto f = find_flow(tri, alphabet_nonzero(z3));
    REQUIRE(f.has_value());
    auto r = expand_to_cubic(tri, *f);
    // each degree-2 vertex becomes a six-vertex gadget
    REQUIRE(r.cubic.vertex_count() == 18);
    check_cubic_postconditions(tri, *f, r);
}

TEST_CASE("expanding a wheel flow splits the high-degree hub") {
    auto w4 = wheel_graph(4);  // hub degree 4
    auto z5 = FiniteAbelianGroup::cyclic(5);
    auto f = find_flow(w4, alphabet_nonzero(z5));
    REQUIRE(f.has_value());
    auto r = expand_to_cubic(w4, *f);
    check_cubic_postconditions(w4, *f, r);
}

TEST_CASE("cubic inputs come back unchanged") {
    auto k4 = complete_graph(4);
    auto z5 = FiniteAbelianGroup::cyclic(5);
    auto f = find_flow(k4, alphabet_nonzero(z5));
    REQUIRE(f.has_value());
    auto r = expand_to_cubic(k4, *f);
    REQUIRE(r.cubic.vertex_count() == 4);
    REQUIRE(r.cubic.edge_count() == 6);
    for (int e = 0; e < 6; ++e) REQUIRE(r.cubic.edge(e).id == k4.edge(e).id);
    check_cubic_postconditions(k4, *f, r);
}

TEST_CASE("cubic expansion rejects bad inputs") {
    auto tri = triangle_graph();
    auto z4 = FiniteAbelianGroup::cyclic(4);
    auto f4 = find_flow(tri, alphabet_nonzero(z4));
    REQUIRE(f4.has_value());
    REQUIRE_THROWS_WITH(expand_to_cubic(tri, *f4), Catch::Matchers::ContainsSubstring("odd"));

    auto z3 = FiniteAbelianGroup::cyclic(3);
    auto bogus = EdgeAssignment::group_valued(
        z3, {z3.make({1}), z3.make({1}), z3.make({1})});
    REQUIRE_THROWS_WITH(expand_to_cubic(tri, bogus), Catch::Matchers::ContainsSubstring("flow"));

    Multigraph looped({"a", "b"}, {{"e0", "a", "b"}, {"e1", "a", "b"}, {"l", "a", "a"}});
    auto fl = find_flow(looped, alphabet_nonzero(z3));
    REQUIRE(fl.has_value());
    REQUIRE_THROWS_WITH(expand_to_cubic(looped, *fl), Catch::Matchers::ContainsSubstring("loop"));
}

TEST_CASE("expanding more graphs round-trips for k in {3,5}") {
    std::vector<Multigraph> hosts = {theta_graph(3), cycle_graph(4), complete_bipartite(2, 3),
                                     wheel_graph(5), complete_graph(5)};
    for (const auto& g : hosts)
        for (int k : {3, 5}) {
            auto grp = FiniteAbelianGroup::cyclic(k);
            auto f = find_flow(g, alphabet_nonzero(grp));
            if (!f) continue;
            auto r = expand_to_cubic(g, *f);
            check_cubic_postconditions(g, *f, r);
        }
}

namespace {

void check_regular_postconditions(const Multigraph& g, const RegularExpansion& r, int k) {
    for (int v = 0; v < r.regular.vertex_count(); ++v) REQUIRE(r.regular.degree(v) == k);
    // proper coloring
    for (int v = 0; v < r.regular.vertex_count(); ++v) {
        std::vector<int> seen(k + 1, 0);
        for (int e : r.regular.incident(v)) ++seen[r.coloring.colors[e]];
        for (int c = 1; c <= k; ++c) REQUIRE(seen[c] == 1);
    }
    auto [cg, cmap] = contract(r.regular, r.family);
    Multigraph shrunk = without_loops(cg.quotient);
    REQUIRE(shrunk.vertex_count() == g.vertex_count());
    REQUIRE(shrunk.edge_count() == g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) REQUIRE(shrunk.has_edge_id(g.edge(e).id));
}

}  // namespace

TEST_CASE("regular expansion leaves a properly colored K4 unchanged") {
    auto k4 = complete_graph(4);
    EdgeColoring proper;
    proper.k = 3;
    proper.colors = {1, 2, 3, 3, 2, 1};
    auto r = expand_to_regular(k4, proper);
    REQUIRE(r.regular.vertex_count() == 4);
    REQUIRE(r.regular.edge_count() == 6);
    REQUIRE(r.coloring.colors == proper.colors);
    check_regular_postconditions(k4, r, 3);
}

TEST_CASE("regular expansion splices same-colored pairs through gadgets") {
    auto c4 = cycle_graph(4);
    auto c = EdgeColoring::constant(c4, 3, 1);
    REQUIRE(is_semi_coloring(c4, c).ok);
    auto r = expand_to_regular(c4, c);
    // every vertex is replaced by one complete-graph gadget on four vertices
    REQUIRE(r.regular.vertex_count() == 16);
    check_regular_postconditions(c4, r, 3);
}

TEST_CASE("regular expansion rejects non-semi inputs with a witness cut") {
    // the star colored 1,2,3 fails the semi condition at each leaf cut
    auto star = star_graph(3);
    EdgeColoring c;
    c.k = 3;
    c.colors = {1, 2, 3};
    REQUIRE_FALSE(is_semi_coloring(star, c).ok);
    REQUIRE_THROWS_WITH(expand_to_regular(star, c), Catch::Matchers::ContainsSubstring("cut"));
}

TEST_CASE("regular expansion handles odd degrees above k") {
    // five parallel edges: both endpoints have odd degree five
    auto theta5 = theta_graph(5);
    EdgeColoring c;
    c.k = 3;
    c.colors = {1, 2, 3, 1, 1};  // counts (3,1,1): all odd
    REQUIRE(is_semi_coloring(theta5, c).ok);
    auto r = expand_to_regular(theta5, c);
    check_regular_postconditions(theta5, r, 3);
}

TEST_CASE("regular expansion rejects even k") {
    auto c4 = cycle_graph(4);
    REQUIRE_THROWS_WITH(expand_to_regular(c4, EdgeColoring::constant(c4, 4, 1)),
                        Catch::Matchers::ContainsSubstring("odd"));
}
