#include <doctest.h>

#include "intermute/arrow.hpp"
#include "intermute/error.hpp"
#include "intermute/parser.hpp"
#include "intermute/random.hpp"
#include "intermute/restrict.hpp"
#include "intermute/semantics.hpp"
#include "intermute/shape.hpp"
#include "intermute/theory.hpp"

using namespace intermute;

namespace {
Formula f(const char* s) { return parse_formula(s); }
ArrowTerm a(const char* s) { return parse_arrow(s); }
const Shape box = Shape::box();
}  // namespace

TEST_CASE("typing") {
    CHECK(type_of(a("ck{p,q,r,s}")) == Type{f("(p&q)|(r&s)"), f("(p|r)&(q|s)")});
    CHECK(type_of(a("id{p&q}")) == Type{f("p&q"), f("p&q")});
    CHECK_THROWS_AS(type_of(a("hd+{p} . ck{p,q,r,s}")), IllTyped);
    CHECK(parse_arrow(to_string(a("(ck{p,q,r,s} & id{t}) . hb+{p&q,r&s,t}"))) ==
          a("(ck{p,q,r,s} & id{t}) . hb+{p&q,r&s,t}"));
}

TEST_CASE("development") {
    const auto d = develop(a("ck{p,q,r,s} & ck{t,u,v,w}"));
    REQUIRE(d.factors.size() == 2);
    CHECK(d.factors[0] == a("ck{p,q,r,s} & id{(t&u)|(v&w)}"));
    CHECK(d.factors[1] == a("id{(p|r)&(q|s)} & ck{t,u,v,w}"));
    CHECK(develop(a("kappa")).factors == std::vector<ArrowTerm>{a("kappa")});
    const auto id = develop(a("id{p|q}"));
    CHECK(id.factors.empty());
    CHECK(id.source == f("p|q"));

    Rng rng(5);
    FormulaShape shape;
    for (int i = 0; i < 100; ++i) {
        const ArrowTerm t = random_term(rng, random_formula(rng, shape), generator_kinds(TheoryId::SCk), 8);
        const auto dev = develop(t);
        const ArrowTerm back = compose_all(dev.source, dev.factors);
        CHECK(type_of(back) == type_of(t));
        CHECK(eval_mat(back) == eval_mat(t));
        for (const auto& step : dev.factors) CHECK(count_generators(step) == 1);
    }
}

TEST_CASE("restriction") {
    CHECK(restrict_arrow(a("ck{p,q,r,s}"), {"r", "s"}) == a("id{p&q}"));
    CHECK(restrict_arrow(a("ck{p,q,r,s}"), {}) == a("ck{p,q,r,s}"));
    const ArrowTerm f1 = a("ck{p,q,r,s}");
    const ArrowTerm par = ArrowTerm::disj_par(f1, a("hc{t,u}"));
    CHECK(restrict_arrow(par, {"t", "u"}) == f1);
}

TEST_CASE("derived psi and pi arrows") {
    const Shape sq = Shape::combine(Conn::Or, box, box);
    CHECK(derive_psi(sq, {f("a"), f("b")}, {f("c"), f("d")}) == a("ck{a,c,b,d}"));
    CHECK(derive_psi(box, {f("a")}, {f("c")}) == a("id{a&c}"));
    CHECK(derive_psi(Shape::unit(Unit::Bot), {}, {}) == a("hwb-"));
    CHECK(derive_pi_top(Shape::unit(Unit::Bot)) == a("kappa"));
    CHECK(derive_pi_top(box) == a("id{T}"));
    CHECK(simplify_identities(derive_pi_top(sq)) == a("vwt+"));
}

TEST_CASE("theory membership") {
    CHECK_FALSE(validate_in_theory(a("ck{p,q,r,s}"), TheoryId::A));
    CHECK(validate_in_theory(a("hb+{p,q,r}"), TheoryId::ACk));
    CHECK_FALSE(validate_in_theory(a("hw{p}"), TheoryId::SCk));
    CHECK(validate_in_theory(a("hw{p}"), TheoryId::L));
}
