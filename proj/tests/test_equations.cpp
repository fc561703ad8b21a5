#include <doctest.h>

#include <random>

#include "intermute/equations.hpp"
#include "intermute/error.hpp"
#include "intermute/parser.hpp"
#include "intermute/random.hpp"

using namespace intermute;

namespace {
std::vector<Formula> letters(std::size_t n) {
    std::vector<Formula> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(Formula::letter("p" + std::to_string(i + 1)));
    return out;
}
}  // namespace

TEST_CASE("every schema holds on distinct letters") {
    for (const auto& s : schema_catalogue()) {
        CAPTURE(s.name);
        CHECK(check_equation(s, letters(s.arity)));
    }
}

TEST_CASE("every schema holds on random formulas with repeats") {
    Rng rng(7);
    FormulaShape shape;
    shape.letters = {"p", "q"};
    shape.max_letters = 3;
    shape.unit_probability = 0.2;
    for (const auto& s : schema_catalogue()) {
        CAPTURE(s.name);
        for (int t = 0; t < 5; ++t) {
            std::vector<Formula> args;
            for (std::size_t i = 0; i < s.arity; ++i) args.push_back(random_formula(rng, shape));
            CHECK(check_equation(s, args));
        }
    }
}

TEST_CASE("mutated equation is rejected") {
    const Schema bogus{"bogus", "test", 2, [](const std::vector<Formula>& x) {
                           const Schema& c = find_schema("product-w-k-k");
                           Equation e = c.build(x);
                           return Equation{ArrowTerm::prim(GenKind::Hc, {x[0], x[1]}), e.lhs};
                       }};
    const Formula p = Formula::letter("p");
    CHECK_FALSE(check_equation(bogus, {p, p}));
}

TEST_CASE("catalogue lookups") {
    CHECK_THROWS_AS(find_schema("nope"), UnknownSchema);
    CHECK_THROWS_AS(check_equation("pentagon-and", letters(3)), ArityMismatch);
    const auto ts = schema_theories(find_schema("pentagon-and"));
    CHECK(std::find(ts.begin(), ts.end(), TheoryId::A) != ts.end());
    const auto hx = schema_theories(find_schema("hexagon-or"));
    CHECK(std::find(hx.begin(), hx.end(), TheoryId::A) == hx.end());
    CHECK(std::find(hx.begin(), hx.end(), TheoryId::S) != hx.end());
}
