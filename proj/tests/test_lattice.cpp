#include <doctest.h>

#include "intermute/equations.hpp"
#include "intermute/lattice.hpp"
#include "intermute/parser.hpp"
#include "intermute/random.hpp"
#include "intermute/semantics.hpp"
#include "intermute/theory.hpp"

using namespace intermute;

TEST_CASE("ac_reshape connects associativity and commutativity variants") {
    const Formula x = parse_formula("(p & (q | r)) & s");
    const Formula y = parse_formula("s & ((r | q) & p)");
    const ArrowTerm f = ac_reshape(x, y);
    CHECK(type_of(f) == Type{x, y});
    CHECK(validate_in_theory(f, TheoryId::S));
    CHECK_THROWS(ac_reshape(x, parse_formula("(p | (q & r)) & s")));
}

TEST_CASE("symmetric medial search") {
    const auto f = search_symmetric_medial(parse_formula("(p&q)|(r&s)"), parse_formula("(s|q)&(r|p)"));
    REQUIRE(f);
    CHECK(validate_in_theory(*f, TheoryId::SCk));
    CHECK(count_generators(*f, GenKind::Ck) == 1);
    CHECK_FALSE(search_symmetric_medial(parse_formula("(p|r)&(q|s)"), parse_formula("(p&q)|(r&s)")));
}

TEST_CASE("lattice_reduce on the lattice form of ck") {
    const auto letters = std::vector<Formula>{parse_formula("p"), parse_formula("q"), parse_formula("r"), parse_formula("s")};
    const ArrowTerm def = find_schema("def-ck-hat").build(letters).rhs;
    const auto r = lattice_reduce(def);
    REQUIRE(r);
    CHECK(validate_in_theory(*r, TheoryId::SCk));
    CHECK(eval_mat(*r) == eval_mat(parse_arrow("ck{p,q,r,s}")));
    CHECK_FALSE(lattice_reduce(parse_arrow("hk1{p,q}")));
    CHECK(lattice_reduce(parse_arrow("id{p}")) == parse_arrow("id{p}"));
}

TEST_CASE("lattice_reduce on expanded random symmetric medial terms") {
    Rng rng(11);
    FormulaShape shape;
    shape.max_letters = 8;
    std::size_t with_ck = 0;
    for (int t = 0; t < 30; ++t) {
        const Formula x = random_medial_source(rng, shape, 2 + t % 2);
        const ArrowTerm f = random_term(rng, x, generator_kinds(TheoryId::SCk), 10);
        const ArrowTerm l = expand_definitions(f);
        CAPTURE(to_string(f));
        CHECK(validate_in_theory(l, TheoryId::L));
        CHECK(eval_mat(l) == eval_mat(f));
        const auto r = lattice_reduce(l);
        REQUIRE(r);
        CHECK(validate_in_theory(*r, TheoryId::SCk));
        CHECK(type_of(*r) == type_of(f));
        CHECK(eval_mat(*r) == eval_mat(f));
        if (count_generators(f, GenKind::Ck) > 0) ++with_ck;
    }
    CHECK(with_ck >= 5);
}
