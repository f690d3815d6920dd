#include <catch2/catch_amalgamated.hpp>

#include "gflow/group.hpp"

using namespace gflow;

TEST_CASE("componentwise modular arithmetic") {
    auto z4 = FiniteAbelianGroup::cyclic(4);
    REQUIRE(z4.add(z4.make({3}), z4.make({3})) == z4.make({2}));

    FiniteAbelianGroup klein({2, 2});
    REQUIRE(klein.add(klein.make({1, 0}), klein.make({0, 1})) == klein.make({1, 1}));

    auto z3 = FiniteAbelianGroup::cyclic(3);
    REQUIRE(z3.neg(z3.make({1})) == z3.make({2}));

    REQUIRE(z3.sum({}) == z3.zero());
    REQUIRE_THROWS_AS(z4.add(z4.make({1}), klein.make({1, 0})), Error);
}

TEST_CASE("group axioms hold exhaustively for small orders") {
    std::vector<FiniteAbelianGroup> groups = {
        FiniteAbelianGroup::cyclic(2),  FiniteAbelianGroup::cyclic(5),
        FiniteAbelianGroup({2, 2}),     FiniteAbelianGroup({2, 3}),
        FiniteAbelianGroup({4, 4}),     FiniteAbelianGroup({2, 2, 2, 2}),
        FiniteAbelianGroup({16}),       FiniteAbelianGroup(std::vector<int>{}),
    };
    for (const auto& g : groups) {
        REQUIRE(g.order() <= 16);
        auto elems = g.elements();
        for (const auto& a : elems) {
            REQUIRE(g.add(a, g.zero()) == a);
            REQUIRE(g.add(a, g.neg(a)).is_zero());
            for (const auto& b : elems) {
                REQUIRE(g.add(a, b) == g.add(b, a));
                for (const auto& c : elems)
                    REQUIRE(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
            }
        }
    }
}

TEST_CASE("same order and abstract isomorphism") {
    auto z4 = FiniteAbelianGroup::cyclic(4);
    FiniteAbelianGroup klein({2, 2});
    REQUIRE(same_order(z4, klein));
    REQUIRE_FALSE(z4.isomorphic_to(klein));

    REQUIRE_FALSE(same_order(FiniteAbelianGroup::cyclic(3), z4));

    auto z6 = FiniteAbelianGroup::cyclic(6);
    FiniteAbelianGroup z2xz3({2, 3});
    REQUIRE(same_order(z6, z2xz3));
    REQUIRE(z6.isomorphic_to(z2xz3));  // 6 = 2*3 coprime

    REQUIRE(FiniteAbelianGroup::roots_of_unity(3).isomorphic_to(FiniteAbelianGroup::cyclic(3)));
}

TEST_CASE("alphabets") {
    auto z2 = FiniteAbelianGroup::cyclic(2);
    auto a2 = alphabet_nonzero(z2);
    REQUIRE(a2.elements() == std::vector<GroupElement>{z2.make({1})});
    REQUIRE(a2.non_elusive());

    FiniteAbelianGroup klein({2, 2});
    auto ak = alphabet_nonzero(klein);
    REQUIRE(ak.elements() == std::vector<GroupElement>{klein.make({0, 1}), klein.make({1, 0}),
                                                       klein.make({1, 1})});

    auto k3 = alphabet_k_flow(3);
    REQUIRE(k3.integer_values() == std::vector<long long>{-2, -1, 1, 2});
    REQUIRE_THROWS_AS(alphabet_k_flow(1), Error);

    // nonzero alphabets are closed under negation for every small group
    for (const auto& g : {FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(7),
                          FiniteAbelianGroup({2, 4}), FiniteAbelianGroup({3, 3})})
        REQUIRE(alphabet_nonzero(g).closed_under_negation());

    auto partial = FlowAlphabet::of(klein, {klein.make({1, 0})});
    REQUIRE_FALSE(partial.non_elusive());
    REQUIRE(partial.closed_under_negation());  // 2-torsion
}

TEST_CASE("group spec strings") {
    REQUIRE(parse_group_spec("Z4").moduli() == std::vector<int>{4});
    REQUIRE(parse_group_spec("Z2xZ2").moduli() == std::vector<int>{2, 2});
    REQUIRE(parse_group_spec("Z2xZ3").moduli() == std::vector<int>{2, 3});
    REQUIRE(parse_group_spec("R3").label() == "R3");
    REQUIRE(parse_group_spec("R3").moduli() == std::vector<int>{3});
    REQUIRE(parse_group_spec("Z1").order() == 1);
    REQUIRE_THROWS_AS(parse_group_spec("Q8"), Error);
    REQUIRE_THROWS_AS(parse_group_spec("Zx"), Error);
    REQUIRE_THROWS_AS(parse_group_spec(""), Error);
}

TEST_CASE("element enumeration order puts zero first and ascends") {
    FiniteAbelianGroup g({2, 3});
    auto elems = g.elements();
    REQUIRE(elems.front().is_zero());
    for (size_t i = 0; i + 1 < elems.size(); ++i) REQUIRE(elems[i] < elems[i + 1]);
    REQUIRE(g.index_of(g.make({1, 2})) == 5);
    REQUIRE(g.element_at(5) == g.make({1, 2}));
}
