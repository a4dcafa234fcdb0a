#include "doctest.h"

#include "presmon/alphabet.hpp"
#include "presmon/error.hpp"
#include "presmon/grid_function.hpp"
#include "presmon/monoid.hpp"

#include <vector>

using namespace presmon;

TEST_CASE("compose applies the right factor first") {
    DistanceAlphabet a = parse_alphabet("0,1,2");
    GridFunction f(a, {0, 1, 1});
    GridFunction g(a, {0, 2, 2});
    CHECK(compose(f, g).table()[1] == 1);
    CHECK(compose(g, f).table()[1] == 2);
    CHECK_THROWS_WITH_AS(compose(f, identity_function(parse_alphabet("0,1,3"))),
                         "alphabet mismatch between composed functions", Error);
}

TEST_CASE("compose is associative with identity as the neutral element") {
    DistanceAlphabet a = uniform_grid(1);
    FunctionSet all = all_endofunctions(a);
    GridFunction id = identity_function(a);
    for (const GridFunction& f : all.members()) {
        CHECK(compose(f, id) == f);
        CHECK(compose(id, f) == f);
        for (const GridFunction& g : all.members()) {
            for (const GridFunction& h : all.members()) {
                CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
            }
        }
    }
}

TEST_CASE("function_less orders tables lexicographically") {
    DistanceAlphabet a = parse_alphabet("0,1,2");
    GridFunction low(a, {0, 0, 0});
    GridFunction mid(a, {0, 1, 2});
    GridFunction high(a, {2, 0, 0});
    CHECK(function_less(low, mid));
    CHECK(function_less(mid, high));
    CHECK_FALSE(function_less(mid, mid));
}

TEST_CASE("function sets sort, dedupe and test membership") {
    DistanceAlphabet a = parse_alphabet("0,1,2");
    GridFunction id = identity_function(a);
    GridFunction cap(a, {0, 1, 1});
    FunctionSet s(a, {id, cap, id});
    CHECK(s.size() == 2);
    CHECK(s.members()[0] == cap);
    CHECK(s.contains(id));
    CHECK_FALSE(s.contains(constant_function(a, 2)));
    CHECK_THROWS_WITH_AS(
        FunctionSet(a, {identity_function(parse_alphabet("0,1,3"))}),
        "set members must share the set alphabet", Error);
}

TEST_CASE("monoid_closure adds the identity and all compositions") {
    DistanceAlphabet a = parse_alphabet("0,1,2");
    GridFunction swap = swap_zero_one_function(a);
    FunctionSet closed = monoid_closure(FunctionSet(a, {swap}));
    CHECK(closed.size() == 2);
    CHECK(closed.contains(identity_function(a)));
    CHECK(closed.contains(swap));

    FunctionSet from_empty = monoid_closure(FunctionSet(a));
    CHECK(from_empty.size() == 1);
    CHECK(from_empty.contains(identity_function(a)));

    // a 3-cycle on the alphabet generates all three rotations
    GridFunction cycle(a, {1, 2, 0});
    FunctionSet rotations = monoid_closure(FunctionSet(a, {cycle}));
    CHECK(rotations.size() == 3);
}

TEST_CASE("monoid_closure is extensive, idempotent and yields submonoids") {
    DistanceAlphabet a = parse_alphabet("0,1,2");
    std::vector<FunctionSet> seeds;
    seeds.emplace_back(a);
    seeds.emplace_back(a, std::vector<GridFunction>{GridFunction(a, {0, 1, 1})});
    seeds.emplace_back(a, std::vector<GridFunction>{GridFunction(a, {1, 2, 0}),
                                                    GridFunction(a, {0, 0, 2})});
    seeds.emplace_back(a, std::vector<GridFunction>{GridFunction(a, {2, 2, 2}),
                                                    GridFunction(a, {0, 2, 1})});
    for (const FunctionSet& s : seeds) {
        FunctionSet c = monoid_closure(s);
        for (const GridFunction& f : s.members()) {
            CHECK(c.contains(f));
        }
        CHECK(monoid_closure(c) == c);
        CHECK(is_submonoid(c));
    }
}

TEST_CASE("is_submonoid checks identity membership and composition closure") {
    DistanceAlphabet a = parse_alphabet("0,1,2");
    GridFunction id = identity_function(a);
    GridFunction cap(a, {0, 1, 1});
    GridFunction swap = swap_zero_one_function(a);
    CHECK(is_submonoid(FunctionSet(a, {id})));
    CHECK(is_submonoid(FunctionSet(a, {id, cap})));
    CHECK_FALSE(is_submonoid(FunctionSet(a)));
    CHECK_FALSE(is_submonoid(FunctionSet(a, {swap})));
    // closed under composition but missing the identity
    CHECK_FALSE(is_submonoid(FunctionSet(a, {cap})));
    // contains the identity but composition escapes: (1,2,0) twice is (2,0,1)
    CHECK_FALSE(is_submonoid(FunctionSet(a, {id, GridFunction(a, {1, 2, 0})})));
}

TEST_CASE("submonoid test agrees with its definition on every subset") {
    DistanceAlphabet a = uniform_grid(1);
    FunctionSet all = all_endofunctions(a);
    REQUIRE(all.size() == 4);
    GridFunction id = identity_function(a);
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<GridFunction> picked;
        for (int i = 0; i < 4; ++i) {
            if (mask >> i & 1u) {
                picked.push_back(all.members()[static_cast<std::size_t>(i)]);
            }
        }
        FunctionSet s(a, picked);
        bool expected = s.contains(id);
        for (const GridFunction& f : picked) {
            for (const GridFunction& g : picked) {
                expected = expected && s.contains(compose(f, g));
            }
        }
        CHECK(is_submonoid(s) == expected);
    }
}

TEST_CASE("intersect keeps the common members") {
    DistanceAlphabet a = parse_alphabet("0,1,2");
    GridFunction id = identity_function(a);
    GridFunction cap(a, {0, 1, 1});
    GridFunction up(a, {0, 2, 2});
    FunctionSet s1(a, {id, cap});
    FunctionSet s2(a, {id, up});
    FunctionSet both = intersect(s1, s2);
    CHECK(both.size() == 1);
    CHECK(both.contains(id));
    CHECK(intersect(s1, s1) == s1);
    CHECK(intersect(s1, FunctionSet(a)).size() == 0);
    CHECK_THROWS_WITH_AS(
        intersect(s1, FunctionSet(parse_alphabet("0,1,3"))),
        "alphabet mismatch between function sets", Error);
}

TEST_CASE("all_endofunctions enumerates the full table space") {
    CHECK(all_endofunctions(uniform_grid(1)).size() == 4);
    CHECK(all_endofunctions(parse_alphabet("0,1,2")).size() == 27);
    CHECK(all_endofunctions(parse_alphabet("0,1,2,3")).size() == 256);
    FunctionSet all = all_endofunctions(parse_alphabet("0,1,2"));
    for (int i = 1; i < all.size(); ++i) {
        CHECK(function_less(all.members()[static_cast<std::size_t>(i - 1)],
                            all.members()[static_cast<std::size_t>(i)]));
    }
    CHECK_THROWS_AS(all_endofunctions(uniform_grid(20), 1000000), Error);
}
