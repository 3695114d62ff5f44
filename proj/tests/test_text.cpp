#include <doctest.h>

#include "trop/text.hpp"

#include "helpers.hpp"

using trop::parse_equation;
using trop::parse_matrix;
using troptest::col;
using troptest::E;
using troptest::M;

TEST_CASE("matrix parsing") {
    CHECK(parse_matrix("2 1\n0 3\n") == M({{2, 1}, {0, 3}}));
    CHECK(parse_matrix("* -inf\n2.5 -3\n") == M({{E(), E()}, {trop::TropScalar::ratio(5, 2), -3}}));
    CHECK(parse_matrix("# comment\n\n1 2\n\n# tail\n3 4\n") == M({{1, 2}, {3, 4}}));
    CHECK(parse_matrix("7") == M({{7}}));

    CHECK_THROWS_AS(parse_matrix(""), trop::ParseError);
    CHECK_THROWS_AS(parse_matrix("# only comments\n"), trop::ParseError);
    CHECK_THROWS_AS(parse_matrix("1 2\n3\n"), trop::ParseError);
    CHECK_THROWS_AS(parse_matrix("1 x\n"), trop::ParseError);
}

TEST_CASE("parse errors carry the source and line") {
    try {
        parse_matrix("1 2\n3 oops\n", "m.txt");
        FAIL("expected ParseError");
    } catch (const trop::ParseError& e) {
        CHECK(std::string(e.what()).find("m.txt:2") != std::string::npos);
    }
}

TEST_CASE("format and parse round-trip") {
    troptest::Gen gen(301);
    for (int t = 0; t < 100; ++t) {
        auto m = gen.matrix(gen.uniform(1, 5), gen.uniform(1, 5));
        CHECK(parse_matrix(trop::format_matrix(m)) == m);
    }
    // non-integer tokens round-trip too
    auto odd = M({{trop::TropScalar::ratio(7, 3), trop::TropScalar::ratio(-5, 2)}});
    CHECK(parse_matrix(trop::format_matrix(odd)) == odd);
}

TEST_CASE("equation file parsing") {
    const char* text =
        "# two-term system\n"
        "%A 1\n"
        "0 1\n"
        "* 0\n"
        "%B 1\n"
        "0\n"
        "%A 2\n"
        "1 *\n"
        "0 0\n"
        "%B 2\n"
        "-1\n"
        "%C\n"
        "1\n"
        "0\n";
    auto eq = parse_equation(text);
    REQUIRE(eq.terms().size() == 2);
    CHECK(eq.terms()[0].first == M({{0, 1}, {E(), 0}}));
    CHECK(eq.terms()[0].second == M({{0}}));
    CHECK(eq.terms()[1].first == M({{1, E()}, {0, 0}}));
    CHECK(eq.terms()[1].second == M({{-1}}));
    CHECK(eq.rhs() == col({1, 0}));
    CHECK(eq.x_rows() == 2);
    CHECK(eq.x_cols() == 1);
}

TEST_CASE("equation file structural errors") {
    CHECK_THROWS_AS(parse_equation("%C\n1\n"), trop::ParseError);            // no %A
    CHECK_THROWS_AS(parse_equation("%A 1\n1\n%B 1\n0\n"), trop::ParseError); // no %C
    CHECK_THROWS_AS(parse_equation("%A 1\n1\n%C\n1\n"), trop::ParseError);   // missing %B 1
    CHECK_THROWS_AS(parse_equation("%A 2\n1\n%B 2\n0\n%C\n1\n"), trop::ParseError); // gap at 1
    CHECK_THROWS_AS(parse_equation("%A 1\n1\n%A 1\n2\n%B 1\n0\n%C\n1\n"), trop::ParseError);
    CHECK_THROWS_AS(parse_equation("1 2\n%A 1\n"), trop::ParseError);        // row before section
    CHECK_THROWS_AS(parse_equation("%X\n"), trop::ParseError);
    CHECK_THROWS_AS(parse_equation("%A one\n1\n%B 1\n0\n%C\n1\n"), trop::ParseError);
}

TEST_CASE("read_file on a missing path") {
    CHECK_THROWS_AS(trop::read_file("/nonexistent/trop-test-file"), trop::ParseError);
}
