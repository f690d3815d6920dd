#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "gflow/coloring.hpp"
#include "gflow/contraction.hpp"
#include "gflow/named_graphs.hpp"

using namespace gflow;

namespace {

// Literal-definition semi check used as the oracle for coloring searches.
bool brute_semi(const Multigraph& g, const EdgeColoring& c) {
    for (const auto& cut : enumerate_cuts(g)) {
        std::vector<int> count(c.k + 1, 0);
        for (int e : cut.crossing) ++count[c.colors[e]];
        for (int col = 2; col <= c.k; ++col)
            if (count[col] % 2 != count[1] % 2) return false;
    }
    return true;
}

bool brute_semi_colorable(const Multigraph& g, int k) {
    long long total = 1;
    for (int e = 0; e < g.edge_count(); ++e) total *= k;
    for (long long code = 0; code < total; ++code) {
        EdgeColoring c;
        c.k = k;
        long long x = code;
        for (int e = 0; e < g.edge_count(); ++e) {
            c.colors.push_back(static_cast<int>(x % k) + 1);
            x /= k;
        }
        if (brute_semi(g, c)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("semi coloring examples") {
    auto c4 = cycle_graph(4);
    REQUIRE(is_semi_coloring(c4, EdgeColoring::constant(c4, 2, 1)).ok);

    // a proper 3-edge-coloring of K4 is semi
    auto k4 = complete_graph(4);
    EdgeColoring proper;
    proper.k = 3;
    // edges e0:v0v1 e1:v0v2 e2:v0v3 e3:v1v2 e4:v1v3 e5:v2v3
    proper.colors = {1, 2, 3, 3, 2, 1};
    REQUIRE(is_semi_coloring(k4, proper).ok);

    auto path = path_graph(3);
    auto bad = is_semi_coloring(path, EdgeColoring::constant(path, 2, 1));
    REQUIRE_FALSE(bad.ok);
    REQUIRE(bad.violated_cut.has_value());
}

TEST_CASE("semi coloring search agrees with brute force on small graphs") {
    std::vector<Multigraph> hosts = {cycle_graph(3), cycle_graph(4), path_graph(3), theta_graph(3),
                                     complete_graph(4), star_graph(3),
                                     Multigraph({"a", "b"}, {{"e0", "a", "b"}, {"e1", "a", "b"},
                                                             {"l", "a", "a"}})};
    for (const auto& g : hosts)
        for (int k : {1, 2, 3}) {
            bool brute = brute_semi_colorable(g, k);
            auto found = find_semi_coloring(g, k);
            REQUIRE(found.has_value() == brute);
            if (found) REQUIRE(is_semi_coloring(g, *found).ok);
        }
}

TEST_CASE("coloring to flow and back") {
    auto c4 = cycle_graph(4);
    auto f = coloring_to_flow(c4, EdgeColoring::constant(c4, 3, 1));
    // color 1 maps to the first basis vector of the rank-2 space
    for (int e = 0; e < 4; ++e) REQUIRE(f.gvalue(e) == f.group().make({1, 0}));
    REQUIRE(verify_flow(c4, f, semi_coloring_alphabet(3)).ok);

    auto k4 = complete_graph(4);
    EdgeColoring proper;
    proper.k = 3;
    proper.colors = {1, 2, 3, 3, 2, 1};
    auto fk = coloring_to_flow(k4, proper);
    FiniteAbelianGroup klein({2, 2});
    REQUIRE(verify_flow(k4, fk, alphabet_nonzero(klein)).ok);  // the alphabet is all of Klein minus zero

    // round trips
    auto back = flow_to_coloring(k4, fk, 3);
    REQUIRE(back.colors == proper.colors);
    auto again = coloring_to_flow(k4, back);
    REQUIRE(again == fk);
}

TEST_CASE("k = 2 collapses the alphabet to one value") {
    // with two colors both map to the single nonzero vector, so only the
    // flow -> coloring -> flow direction is the identity
    auto c4 = cycle_graph(4);
    auto f = coloring_to_flow(c4, EdgeColoring::constant(c4, 2, 2));
    auto c = flow_to_coloring(c4, f, 2);
    auto f2 = coloring_to_flow(c4, c);
    REQUIRE(f == f2);
}

TEST_CASE("conversion preconditions carry witness cuts") {
    auto path = path_graph(3);
    REQUIRE_THROWS_WITH(coloring_to_flow(path, EdgeColoring::constant(path, 3, 1)),
                        Catch::Matchers::ContainsSubstring("cut"));
    auto c4 = cycle_graph(4);
    FiniteAbelianGroup v2({2, 2});
    auto not_flow = EdgeAssignment::group_valued(
        v2, {v2.make({1, 0}), v2.make({0, 1}), v2.make({1, 0}), v2.make({1, 0})});
    REQUIRE_THROWS_AS(flow_to_coloring(c4, not_flow, 3), Error);
}

TEST_CASE("bijection between semi colorings and alphabet flows, exhaustively") {
    std::vector<Multigraph> hosts = {cycle_graph(3), cycle_graph(4), theta_graph(3),
                                     complete_graph(4), path_graph(4)};
    for (const auto& g : hosts) {
        int k = 3;
        long long total = 1;
        for (int e = 0; e < g.edge_count(); ++e) total *= k;
        int semi_count = 0;
        for (long long code = 0; code < total; ++code) {
            EdgeColoring c;
            c.k = k;
            long long x = code;
            for (int e = 0; e < g.edge_count(); ++e) {
                c.colors.push_back(static_cast<int>(x % k) + 1);
                x /= k;
            }
            if (!brute_semi(g, c)) continue;
            ++semi_count;
            auto f = coloring_to_flow(g, c);
            auto back = flow_to_coloring(g, f, k);
            REQUIRE(back.colors == c.colors);
        }
        // every alphabet flow arises from a semi coloring
        auto a = semi_coloring_alphabet(k);
        REQUIRE(static_cast<long long>(count_flows(g, a)) == semi_count);
    }
}

TEST_CASE("semi-3 equals Klein flow existence") {
    auto k4 = complete_graph(4);
    auto rk4 = semi3_iff_z4(k4);
    REQUIRE(rk4.first_exists);
    REQUIRE(rk4.second_exists);

    auto petersen = petersen_graph();
    auto rp = semi3_iff_z4(petersen);
    REQUIRE_FALSE(rp.first_exists);
    REQUIRE_FALSE(rp.second_exists);

    auto c5 = cycle_graph(5);
    REQUIRE(brute_semi_colorable(c5, 3));
    REQUIRE(testing::brute_flow_exists(c5, alphabet_nonzero(FiniteAbelianGroup({2, 2}))));
    auto rc5 = semi3_iff_z4(c5);
    REQUIRE(rc5.first_exists);
    REQUIRE(rc5.second_exists);
}

TEST_CASE("semi-2 colorability equals even degrees equals Z2 flows") {
    std::vector<Multigraph> hosts = {cycle_graph(3), cycle_graph(4), path_graph(3), theta_graph(3),
                                     complete_graph(4), complete_bipartite(2, 2), star_graph(3)};
    for (const auto& g : hosts) {
        bool even = true;
        for (int v = 0; v < g.vertex_count(); ++v) even = even && g.degree(v) % 2 == 0;
        bool semi2 = find_semi_coloring(g, 2).has_value();
        bool z2 = find_flow(g, alphabet_nonzero(FiniteAbelianGroup::cyclic(2))).has_value();
        REQUIRE(semi2 == even);
        REQUIRE(z2 == even);
    }
}

TEST_CASE("semi colorability is preserved under contraction") {
    std::vector<Multigraph> hosts = {cycle_graph(4), complete_graph(4), theta_graph(3)};
    for (const auto& g : hosts) {
        auto c = find_semi_coloring(g, 3);
        if (!c) continue;
        for (const auto& cut : enumerate_cuts(g)) {
            CutFamily m;
            m.cuts.push_back(cut);
            auto [cg, cmap] = contract(g, m);
            EdgeColoring induced;
            induced.k = c->k;
            induced.colors = c->colors;  // same edges, same ids
            REQUIRE(is_semi_coloring(cg.quotient, induced).ok);
        }
    }
}
