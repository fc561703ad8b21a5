#include <doctest.h>

#include "intermute/error.hpp"
#include "intermute/legitimacy.hpp"
#include "intermute/parser.hpp"
#include "intermute/theory.hpp"

using namespace intermute;

namespace {
FormSequence x(const char* s) { return strictify(parse_formula(s)); }
}  // namespace

TEST_CASE("letter deletion") {
    CHECK(delete_letters(x("q&p&r"), {"p"}) == x("q&r"));
    CHECK(delete_letters(x("(p&q)|(r&s)"), {"r", "s"}) == x("p&q"));
    CHECK(delete_letters(x("(p&q)|(r&s)"), {}) == x("(p&q)|(r&s)"));
    CHECK_THROWS_AS(delete_letters(x("p&q"), {"p", "q"}), WouldEraseAll);
}

TEST_CASE("legitimacy examples") {
    const auto w = check_legitimate(x("(p&q)|(r&s)"), x("(p|r)&(q|s)"));
    REQUIRE(w);
    CHECK(w.witness->merge.size() == 2);
    CHECK(w.witness->split.size() == 2);
    const ConnOccurrence target_and = occurrences(x("(p|r)&(q|s)"), Conn::And)[0];
    for (const auto& [from, to] : w.witness->merge) CHECK(to == target_and);
    CHECK_FALSE(check_legitimate(x("(p|r)&(q|s)"), x("(p&q)|(r&s)")));
    CHECK_FALSE(check_legitimate(x("p&q"), x("p|q")));
    CHECK_FALSE(check_legitimate(x("p&q"), x("p&r")));
}

TEST_CASE("interpolation") {
    const auto [a, b] = interpolate_or(x("p&q"), x("r&s"), x("(p|r)&(q|s)"));
    CHECK(a == x("p&q"));
    CHECK(b == x("r&s"));
    const FormSequence y = x("(p|r|t)&(q|s|u)");
    const auto [c, d] = interpolate_or(x("(p&q)|(r&s)"), x("t&u"), y);
    CHECK(check_legitimate(x("(p&q)|(r&s)"), c));
    CHECK(check_legitimate(x("t&u"), d));
    CHECK(x(to_string(FormSequence::node(Conn::Or, {c, d})).c_str()) == FormSequence::node(Conn::Or, {c, d}));
    CHECK(check_legitimate(FormSequence::node(Conn::Or, {c, d}), y));
}

TEST_CASE("synthesis examples") {
    CHECK(synthesize(x("(p&q)|(r&s)"), x("(p|r)&(q|s)")) == parse_arrow("ck{p,q,r,s}"));
    CHECK(synthesize(x("p|(q&r)"), x("p|(q&r)")).is_id());
    const FormSequence src = x("(p&q)|(r&s)|(t&u)"), tgt = x("(p|r|t)&(q|s|u)");
    const ArrowTerm f = synthesize(src, tgt);
    CHECK(count_generators(f, GenKind::Ck) == 2);
    const Type t = type_of(f, Objects::FormSequences);
    CHECK(strictify(t.source) == src);
    CHECK(strictify(t.target) == tgt);
    CHECK(validate_in_theory(f, TheoryId::ACk));
    CHECK_THROWS_AS(synthesize(x("(p|r)&(q|s)"), x("(p&q)|(r&s)")), NotLegitimate);
}

TEST_CASE("search oracle") {
    CHECK(exists_bfs(x("(p&q)|(r&s)"), x("(p|r)&(q|s)")));
    CHECK_FALSE(exists_bfs(x("(p|r)&(q|s)"), x("(p&q)|(r&s)")));
    CHECK(exists_bfs(x("p&(q|r)"), x("p&(q|r)")));
}
