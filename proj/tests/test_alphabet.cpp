#include "doctest.h"

#include "presmon/alphabet.hpp"
#include "presmon/error.hpp"

#include <vector>

using namespace presmon;

TEST_CASE("parse_rational accepts integers and fractions") {
    Rational r = parse_rational("3");
    CHECK(r.num == 3);
    CHECK(r.den == 1);
    r = parse_rational("1/2");
    CHECK(r.num == 1);
    CHECK(r.den == 2);
    r = parse_rational("4/6");
    CHECK(r.num == 2);
    CHECK(r.den == 3);
    r = parse_rational("0");
    CHECK(r.num == 0);
    CHECK(r.den == 1);
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("-1"), Error);
    CHECK_THROWS_AS(parse_rational("1/-2"), Error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
}

TEST_CASE("make_alphabet sorts, dedupes and inserts zero") {
    std::vector<Rational> raw{{2, 1}, {1, 2}, {2, 1}};
    DistanceAlphabet a = make_alphabet(raw);
    CHECK(a.scale() == 2);
    CHECK(a.size() == 3);
    CHECK(a.value(0) == 0);
    CHECK(a.value(1) == 1);
    CHECK(a.value(2) == 4);
}

TEST_CASE("make_alphabet needs a nonzero value") {
    CHECK_THROWS_AS(make_alphabet({}), Error);
    std::vector<Rational> zero{{0, 1}};
    CHECK_THROWS_WITH_AS(make_alphabet(zero),
                         "alphabet needs at least one nonzero value", Error);
}

TEST_CASE("uniform_grid builds 0..n") {
    DistanceAlphabet a = uniform_grid(3);
    CHECK(a.scale() == 1);
    CHECK(a.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(a.value(i) == i);
    }
    CHECK(is_uniform_grid(a));
    CHECK_THROWS_AS(uniform_grid(0), Error);
    CHECK_THROWS_AS(uniform_grid(-2), Error);
}

TEST_CASE("alphabet_from_scaled validates and canonicalizes") {
    DistanceAlphabet a = alphabet_from_scaled(2, {0, 2, 4});
    CHECK(a.scale() == 1);
    CHECK(a.value(1) == 1);
    CHECK(a.value(2) == 2);

    DistanceAlphabet gappy = alphabet_from_scaled(1, {0, 2, 4});
    CHECK(gappy.scale() == 1);
    CHECK(gappy.value(1) == 2);
    CHECK_FALSE(is_uniform_grid(gappy));

    CHECK_THROWS_AS(alphabet_from_scaled(0, {0, 1}), Error);
    CHECK_THROWS_AS(alphabet_from_scaled(1, {0}), Error);
    CHECK_THROWS_AS(alphabet_from_scaled(1, {1, 2}), Error);
    CHECK_THROWS_AS(alphabet_from_scaled(1, {0, 2, 2}), Error);
    CHECK_THROWS_AS(alphabet_from_scaled(1, {0, 2, 1}), Error);
}

TEST_CASE("index_of and sum_index") {
    DistanceAlphabet a = alphabet_from_scaled(1, {0, 1, 3});
    CHECK(a.index_of(3) == 2);
    CHECK(a.index_of(0) == 0);
    CHECK_FALSE(a.index_of(2).has_value());
    CHECK(a.sum_index(0, 2) == 2);
    CHECK_FALSE(a.sum_index(1, 1).has_value());
    CHECK_FALSE(a.sum_index(2, 2).has_value());
    CHECK_THROWS_AS(a.sum_index(0, 3), Error);
    CHECK_THROWS_AS(a.value(3), Error);
    CHECK_THROWS_AS(a.value(-1), Error);
}

TEST_CASE("is_uniform_grid requires scale 1 and consecutive values") {
    CHECK(is_uniform_grid(parse_alphabet("0,1,2")));
    CHECK_FALSE(is_uniform_grid(parse_alphabet("0,1,3")));
    CHECK_FALSE(is_uniform_grid(parse_alphabet("0,1/2,1")));
}

TEST_CASE("parse_alphabet handles rational lists") {
    DistanceAlphabet a = parse_alphabet("0,1/2,1");
    CHECK(a.scale() == 2);
    CHECK(a.size() == 3);
    CHECK(a.value(2) == 2);

    DistanceAlphabet b = parse_alphabet("2,1");
    CHECK(b.size() == 3);
    CHECK(b.value(0) == 0);

    CHECK_THROWS_AS(parse_alphabet(""), Error);
    CHECK_THROWS_AS(parse_alphabet("0,,1"), Error);
    CHECK_THROWS_AS(parse_alphabet("a,b"), Error);
}

TEST_CASE("format_scaled reduces and renders") {
    CHECK(format_scaled(3, 1) == "3");
    CHECK(format_scaled(1, 2) == "1/2");
    CHECK(format_scaled(2, 4) == "1/2");
    CHECK(format_scaled(0, 5) == "0");
    CHECK(format_scaled(4, 2) == "2");
}

TEST_CASE("alphabet equality is structural") {
    CHECK(parse_alphabet("0,1,2") == uniform_grid(2));
    CHECK(parse_alphabet("0,2/2,2") == uniform_grid(2));
    CHECK_FALSE(parse_alphabet("0,1,3") == uniform_grid(3));
}
