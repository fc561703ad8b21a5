#include <doctest.h>

#include "intermute/error.hpp"
#include "intermute/parser.hpp"
#include "intermute/random.hpp"
#include "intermute/semantics.hpp"
#include "intermute/theory.hpp"

using namespace intermute;

namespace {
ArrowTerm a(const char* s) { return parse_arrow(s); }
using Pairs = std::set<std::pair<std::size_t, std::size_t>>;

IntMatrix matrix(std::size_t rows, std::size_t cols, std::initializer_list<int> entries) {
    IntMatrix m(rows, cols);
    std::size_t i = 0;
    for (int e : entries) {
        m.at(i / cols, i % cols) = e;
        ++i;
    }
    return m;
}
}  // namespace

TEST_CASE("relations") {
    CHECK(eval_rel(a("ck{p,q,r,s}")).pairs == Pairs{{0, 0}, {1, 2}, {2, 1}, {3, 3}});
    CHECK(eval_rel(a("id{p&q}")) == Relation::identity(2));
    CHECK(eval_rel(a("hw{p}")).pairs == Pairs{{0, 0}, {0, 1}});
}

TEST_CASE("matrices") {
    CHECK(eval_mat(a("ck{p,q,r,s}")) == matrix(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1}));
    CHECK(eval_mat(a("hk1{p,q}")) == matrix(1, 2, {1, 0}));
    CHECK(eval_mat(a("vw{p} . vk1{p,p}")) == matrix(1, 1, {1}));
    CHECK(to_string(eval_mat(a("ck{p,q,r,s}"))) == "1000\n0010\n0100\n0001\n");
}

TEST_CASE("functoriality") {
    Rng rng(31);
    FormulaShape shape;
    shape.unit_probability = 0.1;
    for (int i = 0; i < 150; ++i) {
        const Formula s = random_formula(rng, shape);
        const ArrowTerm f = random_term(rng, s, generator_kinds(TheoryId::L), 4);
        const ArrowTerm g = random_term(rng, type_of(f).target, generator_kinds(TheoryId::L), 4);
        CHECK(eval_mat(ArrowTerm::compose(g, f)) == eval_mat(g) * eval_mat(f));
        CHECK(eval_rel(ArrowTerm::compose(g, f)) == compose(eval_rel(g), eval_rel(f)));
        CHECK(support(eval_mat(f)) == eval_rel(f));
    }
}

TEST_CASE("letter links") {
    CHECK(letter_links(a("ck{p,q,r,s}")) ==
          std::set<std::pair<std::string, std::string>>{{"p", "p"}, {"q", "q"}, {"r", "r"}, {"s", "s"}});
    CHECK_THROWS_AS(letter_links(a("hc{p,p}")), NotDiversified);
}
