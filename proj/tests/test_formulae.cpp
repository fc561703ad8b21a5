#include <doctest.h>

#include "intermute/error.hpp"
#include "intermute/formula.hpp"
#include "intermute/parser.hpp"
#include "intermute/random.hpp"

using namespace intermute;

namespace {
Formula f(const char* s) { return parse_formula(s); }
}  // namespace

TEST_CASE("parse round trip") {
    const Formula x = f("(p & q) | T");
    CHECK(parse_formula(to_string(x)) == x);
    Rng rng(3);
    FormulaShape shape;
    shape.unit_probability = 0.2;
    for (int i = 0; i < 200; ++i) {
        const Formula r = random_formula(rng, shape);
        CHECK(parse_formula(to_string(r)) == r);
    }
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(f("(p & q"), ParseError);
    CHECK_THROWS_AS(f("p & & q"), ParseError);
    CHECK_THROWS_AS(f("P"), ParseError);
    try {
        f("p & )");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("letters") {
    CHECK(letters(f("p & (q | p)")) == std::map<std::string, std::size_t>{{"p", 2}, {"q", 1}});
    CHECK(letters(f("T | F")).empty());
    CHECK(letters(f("(p&q)|(r&s)")).size() == 4);
}

TEST_CASE("diversified") {
    CHECK(is_diversified(f("(p&q)|(r&s)")));
    CHECK_FALSE(is_diversified(f("p&p")));
    CHECK(is_diversified(f("T")));
    const auto d = diversify(f("p&p"));
    CHECK(d.formula == f("p_1 & p_2"));
    CHECK(d.origin == std::map<std::string, std::string>{{"p_1", "p"}, {"p_2", "p"}});
    const auto same = diversify(f("p|q"));
    CHECK(same.formula == f("p|q"));
    const auto mixed = diversify(f("(p|q)&p"));
    CHECK(mixed.formula == f("(p_1|q)&p_2"));
    CHECK(mixed.origin.at("q") == "q");
}

TEST_CASE("unit normal form and purity") {
    CHECK(normal_form(f("p & T")) == f("p"));
    CHECK(normal_form(f("F & F")) == f("F"));
    CHECK(normal_form(f("p & F")) == f("p & F"));
    CHECK(normal_form(f("(p | F) & (T & q)")) == f("p & q"));
    CHECK(is_pure(f("p & (q | F)")));
    CHECK_FALSE(is_pure(f("p & F"), Unit::Bot));
    CHECK_FALSE(is_pure(f("T"), Unit::Top));
    CHECK(is_pure(f("T"), Unit::Bot));
}
