#include <doctest.h>

#include "intermute/form_sequence.hpp"
#include "intermute/grid.hpp"
#include "intermute/parser.hpp"
#include "intermute/random.hpp"

using namespace intermute;

namespace {
FormSequence x(const char* s) { return strictify(parse_formula(s)); }
LetterSeq seq(std::initializer_list<const char*> l) { return {l.begin(), l.end()}; }
const char* const x0 = "(p1&q1&r)|(((s&t)|(u&q2))&((v&p2)|w))";

// Cells on either side of each cut of the grid, paired across the cut.
LetterRelation across_cuts(const Grid& g, Orientation o) {
    LetterRelation out;
    for (const auto& seg : g.segments) {
        if (seg.orientation != o) continue;
        std::vector<std::string> before, after;
        for (const auto& c : g.cells) {
            if (o == Orientation::Horizontal) {
                const bool within = c.top_left.x < seg.to.x && seg.from.x < c.bottom_right.x;
                if (within && c.bottom_right.y == seg.from.y) before.push_back(c.letter);
                if (within && c.top_left.y == seg.from.y) after.push_back(c.letter);
            } else {
                const bool within = c.top_left.y < seg.to.y && seg.from.y < c.bottom_right.y;
                if (within && c.bottom_right.x == seg.from.x) before.push_back(c.letter);
                if (within && c.top_left.x == seg.from.x) after.push_back(c.letter);
            }
        }
        for (const auto& p : before)
            for (const auto& q : after) out.emplace(p, q);
    }
    return out;
}
}  // namespace

TEST_CASE("strictify") {
    CHECK(x("(p&q)&r") == x("p&(q&r)"));
    CHECK(x("(p&q)&r").children().size() == 3);
    CHECK(x("p").is_leaf());
    CHECK(x("(p|q)&(r|s)").conn() == Conn::And);
    CHECK(x("(p|q)&(r|s)").children().size() == 2);
    CHECK(FormSet(x("q&p")) == FormSet(x("p&q")));
}

TEST_CASE("tblr") {
    const TBLR t = tblr(x(x0));
    CHECK(t.top == seq({"p1", "q1", "r"}));
    CHECK(t.bottom == seq({"u", "q2", "w"}));
    CHECK(t.left == seq({"p1", "s", "u"}));
    CHECK(t.right == seq({"r", "p2", "w"}));
    const TBLR p = tblr(x("p"));
    CHECK((p.top == seq({"p"}) && p.bottom == seq({"p"}) && p.left == seq({"p"}) && p.right == seq({"p"})));
    const TBLR pq = tblr(x("p&q"));
    CHECK(pq.top == seq({"p", "q"}));
    CHECK(pq.bottom == seq({"p", "q"}));
    CHECK(pq.left == seq({"p"}));
    CHECK(pq.right == seq({"q"}));
}

TEST_CASE("flanks") {
    const FormSequence a = x("(p&q)|(r&s)");
    CHECK(flank(a, occurrences(a, Conn::And)[0]) == std::pair{seq({"q"}), seq({"p"})});
    const FormSequence b = x("p|q");
    CHECK(flank(b, occurrences(b, Conn::Or)[0]) == std::pair{seq({"q"}), seq({"p"})});
    const FormSequence c = x("p&q&r");
    CHECK(flank(c, occurrences(c, Conn::And)[0]) == std::pair{seq({"q"}), seq({"p"})});
}

TEST_CASE("grid crossings") {
    const Grid g = grid(x("p&q"));
    REQUIRE(g.segments.size() == 1);
    CHECK(g.segments[0].orientation == Orientation::Vertical);
    IndexSet down, up, right, left, both;
    down.add(Direction::Down);
    up.add(Direction::Up);
    right.add(Direction::Right);
    left.add(Direction::Left);
    both.add(Direction::Down);
    both.add(Direction::Up);
    CHECK(g.crossings.at(g.segments[0].from) == down);
    CHECK(g.crossings.at(g.segments[0].to) == up);
    const Grid h = grid(x("p|q"));
    REQUIRE(h.segments.size() == 1);
    CHECK(h.segments[0].orientation == Orientation::Horizontal);
    CHECK(h.crossings.at(h.segments[0].from) == right);
    CHECK(h.crossings.at(h.segments[0].to) == left);
    const Grid k = grid(x("(p&q)|(r&s)"));
    std::size_t inner = 0;
    for (const auto& [pt, idx] : k.crossings)
        if (idx == both) ++inner;
    CHECK(inner == 1);
}

TEST_CASE("borders and adjacency") {
    CHECK(borders(x(x0)).left == seq({"p1", "s", "u"}));
    const Borders pq = borders(x("p&q"));
    CHECK(pq.left == seq({"p"}));
    CHECK(pq.right == seq({"q"}));
    const Borders po = borders(x("p|q"));
    CHECK(po.left == seq({"p", "q"}));
    CHECK(po.top == seq({"p"}));
    CHECK(po.bottom == seq({"q"}));
    CHECK(above_below(x("p|q")).above == LetterRelation{{"p", "q"}});
    CHECK(above_below(x("p&q")).above.empty());
    CHECK(above_below(x("p&q")).left_of == LetterRelation{{"p", "q"}});
    CHECK(above_below(x(x0)).above_closure.count({"p1", "u"}));
}

TEST_CASE("adjacency agrees with the grid") {
    Rng rng(29);
    for (int i = 0; i < 200; ++i) {
        const FormSequence s = strictify(random_diversified_formula(rng, 2 + i % 7));
        const Grid g = grid(s);
        const Adjacency adj = above_below(s);
        CAPTURE(to_string(s));
        CHECK(across_cuts(g, Orientation::Horizontal) == adj.above);
        CHECK(across_cuts(g, Orientation::Vertical) == adj.left_of);
    }
}

TEST_CASE("transversals") {
    const FormSequence a = x(x0);
    const auto ors = occurrences(a, Conn::Or);
    REQUIRE(ors.size() == 3);
    const auto t = transversals(a);
    CHECK(t.size() == 2);
    CHECK(std::count(t.begin(), t.end(), std::vector<ConnOccurrence>{ors[0]}) == 1);
    CHECK(std::count(t.begin(), t.end(), std::vector<ConnOccurrence>{ors[1], ors[2]}) == 1);
    CHECK(transversals(x("p&q")).empty());
    CHECK(transversals(x("p|q")).size() == 1);
}
