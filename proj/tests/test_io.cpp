#include <doctest.h>

#include "helpers.hpp"
#include "ssg/io.hpp"
#include "ssg/verify.hpp"

using namespace ssg;

namespace {

const char* kGroupText =
    "# the first Grigorchuk group\n"
    "group grig\n"
    "alphabet 2\n"
    "state a perm 1 0 -> id id\n"
    "state b perm 0 1 -> a c\n"
    "state c perm 0 1 -> a d\n"
    "state d perm 0 1 -> id b\n";

}  // namespace

TEST_CASE("group files parse and round-trip") {
    GroupPtr g = parse_group(kGroupText);
    CHECK(g->name() == "grig");
    CHECK(g->d() == 2);
    CHECK(g->state_count() == 4);
    CHECK(g->transition(*g->find_state("d"), 1) == *g->find_state("b"));

    GroupPtr again = parse_group(print_group(*g));
    CHECK(print_group(*again) == print_group(*g));

    for (const auto& name : builtin_names()) {
        GroupPtr builtin = builtin_group(name);
        CHECK(print_group(*parse_group(print_group(*builtin))) == print_group(*builtin));
    }
}

TEST_CASE("group parse errors carry line and column") {
    auto expect_error = [](const std::string& text, int line) {
        try {
            parse_group(text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
            CHECK(e.column >= 1);
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    };
    expect_error("alphabet 2\n", 1);
    expect_error("group g\nalphabet 12\n", 2);
    expect_error("group g\nalphabet 2\nstate a perm 1 0 -> id\n", 3);
    expect_error("group g\nalphabet 2\nstate a perm 1 2 -> id id\n", 3);
    expect_error("group g\nalphabet 2\n# fine\nstate id perm 0 1 -> id id\n", 4);
}

TEST_CASE("element files parse and round-trip") {
    GroupPtr g = builtin_group("reflection");
    const char* text =
        "rn h over reflection\n"
        "row 0 -> 01 act a\n"
        "row 10 -> 00 act id\n"
        "row 11 -> 1 act id\n";
    NamedElement named = parse_rn(text, g);
    CHECK(named.name == "h");
    CHECK(named.element.size() == 3);
    CHECK(named.element.rows()[0].range == "01");

    NamedElement again = parse_rn(print_rn(named), g);
    CHECK(print_rn(again) == print_rn(named));

    // '^' spells the empty address
    NamedElement global = parse_rn("rn a over reflection\nrow ^ -> ^ act a\n", g);
    CHECK(global.element.rows()[0].domain.empty());
    CHECK(print_rn(global).find("row ^ -> ^ act a") != std::string::npos);
}

TEST_CASE("element parse errors") {
    GroupPtr g = builtin_group("reflection");
    CHECK_THROWS_AS(parse_rn("rn h over nope\nrow ^ -> ^ act id\n", g), ParseError);
    CHECK_THROWS_AS(parse_rn("rn h over reflection\nrow 0 -> ^ act id\n", g), ParseError);
    CHECK_THROWS_AS(parse_rn("rn h over reflection\nrow 2 -> 0 act id\n", g), ParseError);
    CHECK_THROWS_AS(parse_rn("rn h over reflection\nrow 0 -> 1 act z\nrow 1 -> 0 act id\n", g),
                    ParseError);
    try {
        parse_rn("rn h over reflection\nrow 0 -> 0 act id\nrow 1 -> 01 act id\n", g);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);  // partition violation reported at the first row
    }
}

TEST_CASE("points and words parse") {
    CHECK(parse_point(2, "0(01)") == RationalPoint::make(2, "0", "01"));
    CHECK(parse_point(2, "(1)") == RationalPoint::make(2, "", "1"));
    CHECK(format_point(parse_point(2, "0(10)")) == "(01)");  // canonicalized
    CHECK_THROWS_AS(parse_point(2, "01"), ParseError);
    CHECK_THROWS_AS(parse_point(2, "(2)"), ParseError);
    CHECK_THROWS_AS(parse_point(2, "()"), ParseError);

    GroupPtr g = builtin_group("grigorchuk");
    CHECK(parse_word(g, "a.b'.c").str() == "a.b'.c");
    CHECK(parse_word(g, "id").is_identity_word());
    CHECK(parse_word(g, "a.id.b").str() == "a.b");
    CHECK(parse_word(g, "b'").letters()[0].sign == -1);
    CHECK_THROWS_AS(parse_word(g, "a..b"), ParseError);
    CHECK_THROWS_AS(parse_word(g, "z"), ParseError);

    CHECK(parse_address(2, "^").empty());
    CHECK(parse_address(2, "0110") == "0110");
    CHECK_THROWS_AS(parse_address(2, "012"), ParseError);
}

TEST_CASE("word round-trips through rendering on random samples") {
    Rng rng(67);
    GroupPtr g = builtin_group("gupta_sidki_3");
    for (int i = 0; i < 50; ++i) {
        GroupWord w = random_word(g, rng, 5);
        GroupWord back = parse_word(g, w.str());
        CHECK(back.key() == w.key());
    }
}
