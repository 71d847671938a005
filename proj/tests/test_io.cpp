#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hfam/family_io.hpp"
#include "oracles.hpp"

using namespace hfam;

TEST_CASE("parse the brace format") {
    const SetFamily f = parse_family("n=3\n{}\n{1}\n{2,3}\n");
    CHECK_EQ(f.n(), 3);
    CHECK_EQ(f.members(), std::vector<Word>{0, 1, 6});

    CHECK_EQ(parse_family("n=2\n").size(), 0);
    CHECK_EQ(parse_family("n=2\n\n  {1}  \n").members(), std::vector<Word>{1});
}

TEST_CASE("parse the hex format and mixed lines") {
    const SetFamily f = parse_family("n=4\n0\n3\nf\n");
    CHECK_EQ(f.members(), std::vector<Word>{0, 3, 15});
    CHECK_EQ(parse_family("n=3\n{1,2}\n4\n").members(), std::vector<Word>{3, 4});
}

TEST_CASE("duplicate handling") {
    CHECK_EQ(parse_family("n=2\n{1}\n{1}\n").size(), 1);  // lenient collapses
    try {
        parse_family("n=2\n{1}\n{1}\n", ParseOptions{true});
        FAIL("strict mode accepted a duplicate");
    } catch (const parse_error& e) {
        CHECK_EQ(e.line(), 3);
    }
    // the same set written in both styles is still a duplicate
    CHECK_THROWS_AS(parse_family("n=2\n{1}\n1\n", ParseOptions{true}), parse_error);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_family(""), parse_error);
    CHECK_THROWS_AS(parse_family("{1}\n"), parse_error);
    CHECK_THROWS_AS(parse_family("n=0\n"), parse_error);
    CHECK_THROWS_AS(parse_family("n=25\n"), parse_error);

    try {
        parse_family("n=3\n{1}\n{2,9}\n");
        FAIL("out-of-range element accepted");
    } catch (const parse_error& e) {
        CHECK_EQ(e.line(), 3);
    }
    CHECK_THROWS_AS(parse_family("n=3\n{2,1}\n"), parse_error);   // not ascending
    CHECK_THROWS_AS(parse_family("n=3\n{1,1}\n"), parse_error);   // repeated element
    CHECK_THROWS_AS(parse_family("n=3\n{1\n"), parse_error);      // unterminated
    CHECK_THROWS_AS(parse_family("n=3\nzz\n"), parse_error);      // bad hex
    CHECK_THROWS_AS(parse_family("n=3\nff\n"), parse_error);      // word out of range
}

TEST_CASE("write and re-read both formats") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const SetFamily f = oracle::random_family(rng, n, trial % 3);
        CHECK_EQ(parse_family(family_to_text(f, false)), f);
        CHECK_EQ(parse_family(family_to_text(f, true)), f);
        CHECK_EQ(family_from_compact(family_to_compact(f)), f);
    }
}

TEST_CASE("compact encoding shape") {
    const SetFamily f = make_family(3, {{}, {1}, {1, 2}, {3}});
    CHECK_EQ(family_to_compact(f), "n=3;0,1,3,4");
    CHECK_EQ(family_to_compact(SetFamily(GroundSet(2))), "n=2;");
    CHECK_THROWS_AS(family_from_compact("3;0"), parse_error);
    CHECK_THROWS_AS(family_from_compact("n=3"), parse_error);
}
