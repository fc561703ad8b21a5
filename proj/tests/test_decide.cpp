#include <doctest.h>

#include "intermute/decide.hpp"
#include "intermute/error.hpp"
#include "intermute/form_sequence.hpp"
#include "intermute/legitimacy.hpp"
#include "intermute/parser.hpp"
#include "intermute/random.hpp"
#include "intermute/steps.hpp"

using namespace intermute;

namespace {
ArrowTerm a(const char* s) { return parse_arrow(s); }
Formula f(const char* s) { return parse_formula(s); }
}  // namespace

TEST_CASE("decide_equal examples") {
    CHECK(decide_equal(a("hc{p,p}"), a("id{p&p}"), TheoryId::SCk).tag == Verdict::Tag::NotEqual);
    CHECK(decide_equal(a("hc{p,p}"), a("id{p&p}"), TheoryId::S).tag == Verdict::Tag::NotEqual);
    CHECK(decide_equal(a("hc{p,q}"), a("hc{p,q}"), TheoryId::S).tag == Verdict::Tag::Equal);

    const ArrowTerm k1 = a("vwt- . kappa . hwb+");
    const ArrowTerm k2 = a("(kappa | id{T}) . vs-{T} . kappa . hs+{F} . (kappa & id{F})");
    REQUIRE(type_of(k1) == type_of(k2));
    CHECK(decide_equal(k1, k2, TheoryId::KA0).tag == Verdict::Tag::Equal);

    const ArrowTerm pb = a("id{p&F}");
    CHECK(decide_equal(pb, pb, TheoryId::ACkU).tag == Verdict::Tag::OutsideFragment);
    CHECK(decide_equal(a("id{p}"), a("id{q}"), TheoryId::A).tag == Verdict::Tag::NotEqual);
    CHECK_THROWS_AS(decide_equal(a("hc{p,q}"), a("hc{p,q}"), TheoryId::A), GeneratorNotInTheory);
}

TEST_CASE("distinct synthesized terms are equal in ACk") {
    const FormSequence x = strictify(f("(p&q&t)|(r&s&u)"));
    const FormSequence y = strictify(f("(p|r)&(q|s)&(t|u)"));
    const ArrowTerm s = synthesize(x, y);
    std::size_t alternatives = 0;
    for (const auto& step : ck_steps(x)) {
        if (!check_legitimate(step.result, y)) continue;
        const ArrowTerm other = ArrowTerm::compose(synthesize(step.result, y), step.factor);
        if (other == s) continue;
        ++alternatives;
        CHECK(decide_equal(s, other, TheoryId::ACk, Objects::FormSequences).tag == Verdict::Tag::Equal);
        CHECK(eval_rel(s, Objects::FormSequences) == eval_rel(other, Objects::FormSequences));
    }
    CHECK(alternatives >= 1);
}

TEST_CASE("decide_exists examples") {
    CHECK(decide_exists(f("(p&q)|(r&s)"), f("(p|r)&(q|s)"), TheoryId::ACk).tag == ExistsAnswer::Tag::True);
    const FormSequence x = strictify(f("(p|r)&(q|s)")), y = strictify(f("(p&q)|(r&s)"));
    CHECK_FALSE(exists_bfs(x, y));
    CHECK(decide_exists(f("(p|r)&(q|s)"), f("(p&q)|(r&s)"), TheoryId::ACk).tag == ExistsAnswer::Tag::False);
    CHECK(decide_exists(f("p&T"), f("p"), TheoryId::NA).tag == ExistsAnswer::Tag::True);
    CHECK(decide_exists(f("p&T"), f("q"), TheoryId::NA).tag == ExistsAnswer::Tag::False);
    CHECK(decide_exists(f("F&F"), f("T|T"), TheoryId::KA0).tag == ExistsAnswer::Tag::True);
    CHECK(decide_exists(f("T"), f("F"), TheoryId::K0).tag == ExistsAnswer::Tag::False);
    CHECK(decide_exists(f("(p&q)|(r&s)"), f("(s|q)&(r|p)"), TheoryId::SCk).tag == ExistsAnswer::Tag::True);
    CHECK(decide_exists(f("(p&q)|(r&s)"), f("(s|q)&(r|p)"), TheoryId::ACk).tag == ExistsAnswer::Tag::False);
    CHECK(decide_exists(f("(p&q)|(r&s)"), f("(p|r)&(q|s)"), TheoryId::Ck).tag == ExistsAnswer::Tag::True);
    CHECK(decide_exists(f("(p&q)|((r&s)|t)"), f("(p|r)&((q|s)|t)"), TheoryId::Ck).tag == ExistsAnswer::Tag::False);

    const auto iso = decide_exists(f("p&(T&q)"), f("(q&p)&T"), TheoryId::SCkU);
    CHECK(iso.tag == ExistsAnswer::Tag::True);
    REQUIRE(iso.witness);
    CHECK(type_of(*iso.witness) == Type{f("p&(T&q)"), f("(q&p)&T")});
    const auto far = decide_exists(f("p&F"), f("p&T"), TheoryId::ACkU);
    CHECK(far.tag == ExistsAnswer::Tag::OutsideFragment);
    CHECK(far.depth_cap.has_value());
}

TEST_CASE("exists with repeated letters tries occurrence matchings") {
    const auto r = decide_exists(f("(p&q)|(p&s)"), f("(p|p)&(q|s)"), TheoryId::ACk);
    CHECK(r.tag == ExistsAnswer::Tag::True);
    CHECK(decide_exists(f("(p&q)|(q&p)"), f("(p|q)&(q|p)"), TheoryId::ACk).tag == ExistsAnswer::Tag::True);
    CHECK(decide_exists(f("(p|p)&(q|q)"), f("(p&q)|(p&q)"), TheoryId::ACk).tag == ExistsAnswer::Tag::False);
    REQUIRE(r.witness);
    CHECK(type_of(*r.witness, Objects::FormSequences).target == f("(p|p)&(q|s)"));
}

TEST_CASE("equal verdicts agree with matrices") {
    Rng rng(5);
    FormulaShape shape;
    shape.unit_probability = 0.25;
    shape.max_letters = 5;
    for (TheoryId t : all_theories()) {
        if (theory(t).letterless_only) shape.letters = {};
        else shape.letters = {"p", "q", "r"};
        if (theory(t).letterless_only) shape.unit_probability = 1.0;
        else shape.unit_probability = theory(t).has_units() ? 0.25 : 0.0;
        std::vector<GenKind> iso;
        for (GenKind k : generator_kinds(t))
            if (is_invertible(k)) iso.push_back(k);
        for (int n = 0; n < 40; ++n) {
            const Formula x = t == TheoryId::Ck || t == TheoryId::ACk || t == TheoryId::SCk || t == TheoryId::L
                                  ? random_medial_source(rng, shape, 2)
                                  : random_formula(rng, shape);
            const ArrowTerm fx = random_term(rng, x, generator_kinds(t), 6);
            const Formula y = type_of(fx).target;
            const ArrowTerm h = random_term(rng, y, iso, 4);
            const ArrowTerm gx = ArrowTerm::compose(inverse(h), ArrowTerm::compose(h, fx));
            const ArrowTerm other = random_term(rng, x, generator_kinds(t), 6);
            for (const ArrowTerm* g : {&gx, &other}) {
                const Verdict v = decide_equal(fx, *g, t);
                CAPTURE(theory(t).name);
                CAPTURE(to_string(fx));
                CAPTURE(to_string(*g));
                if (v.tag == Verdict::Tag::Equal) CHECK(eval_mat(fx) == eval_mat(*g));
                CHECK(decide_equal(*g, fx, t).tag == v.tag);
                CHECK(decide_equal(fx, fx, t).tag != Verdict::Tag::NotEqual);
            }
        }
    }
}

TEST_CASE("purity scan") {
    const auto kappa = purity_scan(a("kappa"));
    REQUIRE(kappa.steps.size() == 1);
    CHECK(kappa.steps[0].letterless);
    CHECK(kappa.violations == 0);
    const auto ck = purity_scan(a("ck{T,F,F,T}"));
    CHECK(ck.steps[0].letterless);
    Rng rng(3);
    FormulaShape shape;
    shape.unit_probability = 0.3;
    for (int n = 0; n < 200; ++n) {
        const ArrowTerm t = random_term(rng, random_formula(rng, shape), generator_kinds(TheoryId::ACkU), 8);
        CAPTURE(to_string(t));
        CHECK(purity_scan(t).violations == 0);
    }
}
