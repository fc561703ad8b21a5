#include <doctest.h>

#include "intermute/error.hpp"
#include "intermute/parser.hpp"
#include "intermute/semantics.hpp"
#include "intermute/splitting.hpp"
#include "intermute/theory.hpp"

using namespace intermute;

namespace {
FormSet fs(const char* s) { return FormSet(strictify(parse_formula(s))); }
constexpr Objects sets = Objects::FormSets;
}  // namespace

TEST_CASE("classification") {
    const auto c = classify(parse_arrow("ck{p,q,r,s}"), fs("p&q"), fs("r&s"));
    REQUIRE(c.tags.size() == 1);
    CHECK(c.all_splitting());
    const auto n = classify(parse_arrow("id{t} | ck{a,b,c,d}"), fs("t"), fs("(a&b)|(c&d)"));
    CHECK(n.all_nonsplitting());
    CHECK_FALSE(n.all_splitting());
    const auto i = classify(parse_arrow("id{(p&q)|(r&s)}"), fs("p&q"), fs("r&s"));
    CHECK(i.all_splitting());
    CHECK(i.all_nonsplitting());
    CHECK_THROWS_AS(classify(parse_arrow("ck{p,q,r,s}"), fs("p&q"), fs("r")), IllTyped);
}

TEST_CASE("normal form examples") {
    CHECK(splitting_normal_form(fs("p"), fs("q"), fs("p|q")).is_id());
    const ArrowTerm two = splitting_normal_form(fs("p1&p2"), fs("q1&q2"), fs("(p1|q1)&(p2|q2)"));
    CHECK(two == parse_arrow("ck{p1,p2,q1,q2}"));
    const ArrowTerm three = splitting_normal_form(fs("p1&p2&p3"), fs("q1&q2&q3"), fs("(p1|q1)&(p2|q2)&(p3|q3)"));
    CHECK(count_generators(three, GenKind::Ck) == 2);
    CHECK(type_of(three, sets).target == parse_formula("(p1|q1)&((p2|q2)&(p3|q3))"));
    CHECK_THROWS_AS(splitting_normal_form(parse_arrow("id{t} | ck{a,b,c,d}"), fs("t"), fs("(a&b)|(c&d)")), NotAllSplitting);
    CHECK_THROWS_AS(splitting_normal_form(fs("p"), fs("q&r"), fs("(p|q)&r")), NotLegitimate);
}

TEST_CASE("factor_split trivial cases") {
    const ArrowTerm n = parse_arrow("id{t} | ck{a,b,c,d}");
    const auto fn = factor_split(n, fs("t"), fs("(a&b)|(c&d)"));
    CHECK(fn.nonsplitting == n);
    CHECK(fn.splitting.is_id());
    const ArrowTerm s = parse_arrow("ck{p,q,r,s}");
    const auto fsp = factor_split(s, fs("p&q"), fs("r&s"));
    CHECK(fsp.nonsplitting.is_id());
    CHECK(fsp.splitting == s);
}

TEST_CASE("factor_split mixed composite") {
    // ck(p|a, q|b, r, s) after a nonsplitting step inside the left disjunct
    const ArrowTerm f = parse_arrow("ck{p|a,q|b,r,s} . (ck{p,q,a,b} | id{r&s})");
    const FormSet x1 = fs("(p&q)|(a&b)"), x2 = fs("r&s");
    const auto c = classify(f, x1, x2);
    CHECK_FALSE(c.all_splitting());
    CHECK_FALSE(c.all_nonsplitting());
    const auto r = factor_split(f, x1, x2);
    const ArrowTerm composite = ArrowTerm::compose(r.splitting, r.nonsplitting);
    CHECK(letter_links(composite, sets) == letter_links(f, sets));
    CHECK(classify(r.nonsplitting, x1, x2).all_nonsplitting());
    CHECK(classify(r.splitting, x1, x2).all_splitting());
    CHECK(count_generators(composite, GenKind::Ck) == count_generators(f, GenKind::Ck));
}

TEST_CASE("random strict terms factor and normalize") {
    Rng rng(17);
    FormulaShape shape;
    shape.letters = {"p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8"};
    shape.max_letters = 8;
    shape.distinct_letters = true;
    std::size_t mixed = 0;
    for (int n = 0; n < 120; ++n) {
        const Formula x = random_medial_source(rng, shape, 2 + n % 2);
        const FormSet x1(strictify(x.left())), x2(strictify(x.right()));
        const ArrowTerm f = random_strict_symmetric_term(rng, strictify(x), 1 + n % 5);
        CAPTURE(to_string(f));
        CHECK(validate_in_theory(f, TheoryId::SCk));
        const auto c = classify(f, x1, x2);
        mixed += !c.all_splitting() && !c.all_nonsplitting();
        const auto r = factor_split(f, x1, x2);
        const ArrowTerm composite = ArrowTerm::compose(r.splitting, r.nonsplitting);
        CHECK(letter_links(composite, sets) == letter_links(f, sets));
        CHECK(count_generators(composite, GenKind::Ck) == count_generators(f, GenKind::Ck));
        CHECK(classify(r.nonsplitting, x1, x2).all_nonsplitting());
        CHECK(classify(r.splitting, x1, x2).all_splitting());
        const ArrowTerm nf = splitting_normal_form(r.splitting, x1, x2);
        CHECK(splitting_normal_form(nf, x1, x2) == nf);
        CHECK(letter_links(nf, sets) == letter_links(r.splitting, sets));
        // The restriction of an all-splitting term to one side is an identity.
        if (c.all_splitting()) {
            const Formula y = type_of(f, sets).target;
            CHECK(FormSet(delete_letters(strictify(y), letter_set(x1.sequence()))) == x2);
        }
    }
    CHECK(mixed >= 10);
}

TEST_CASE("conjunction splitter") {
    Rng rng(23);
    FormulaShape shape;
    shape.letters = {"a", "b", "c", "d", "e", "f", "g", "h"};
    shape.max_letters = 4;
    shape.distinct_letters = true;
    for (int n = 0; n < 40; ++n) {
        const Formula l = random_medial_source(rng, shape, 2);
        std::map<std::string, std::string> prime;
        for (const auto& [k, v] : letters(l)) prime[k] = k + "x";
        const Formula r = rename_letters(l, prime);
        const Formula x = Formula::conj(l, r);
        const ArrowTerm f = random_strict_symmetric_term(rng, strictify(x), 4);
        const auto [f1, f2] = split_conjunction(f, FormSet(strictify(l)), FormSet(strictify(r)));
        CAPTURE(to_string(f));
        CHECK(letter_links(ArrowTerm::conj_par(f1, f2), sets) == letter_links(f, sets));
        CHECK(count_generators(f1, GenKind::Ck) + count_generators(f2, GenKind::Ck) == count_generators(f, GenKind::Ck));
    }
}
