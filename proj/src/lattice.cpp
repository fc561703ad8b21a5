#include "intermute/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "intermute/equations.hpp"
#include "intermute/error.hpp"
#include "intermute/form_sequence.hpp"
#include "intermute/semantics.hpp"
#include "intermute/steps.hpp"

namespace intermute {

namespace {

using A = ArrowTerm;

struct Builder {
    Formula cur;
    A term;
    explicit Builder(Formula x) : cur(x), term(A::id(std::move(x))) {}
    void apply(const A& step) {
        cur = type_of(step).target;
        term = A::compose(step, term);
    }
    void apply_at(const OccurrencePath& path, const A& head) { apply(in_context(cur, path, head)); }
};

const Formula& at(const Formula& f, const OccurrencePath& path) {
    const Formula* x = &f;
    for (Side s : path) x = s == Side::Left ? &x->left() : &x->right();
    return *x;
}

GenKind assoc_to(Conn c) { return c == Conn::And ? GenKind::HbPlus : GenKind::VbPlus; }
GenKind assoc_from(Conn c) { return c == Conn::And ? GenKind::HbMinus : GenKind::VbMinus; }
GenKind swap_kind(Conn c) { return c == Conn::And ? GenKind::Hc : GenKind::Vc; }

// x -> its left-associated flattening with items sorted, recursively.
A canon(const Formula& x) {
    if (!x.is_binary()) return A::id(x);
    const Conn c = x.conn();
    Builder b(x);
    b.apply(A::par(c, canon(x.left()), canon(x.right())));

    OccurrencePath p;
    while (true) {
        const Formula& s = at(b.cur, p);
        if (!s.is(c)) break;
        if (s.right().is(c)) {
            b.apply_at(p, A::prim(assoc_to(c), {s.left(), s.right().left(), s.right().right()}));
            continue;
        }
        p.push_back(Side::Left);
    }

    auto items = [&] {
        std::vector<Formula> out;
        const Formula* s = &b.cur;
        while (s->is(c)) {
            out.push_back(s->right());
            s = &s->left();
        }
        out.push_back(*s);
        std::reverse(out.begin(), out.end());
        return out;
    };
    for (bool swapped = true; swapped;) {
        swapped = false;
        const auto it = items();
        const std::size_t n = it.size();
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (!(it[k + 1] < it[k])) continue;
            OccurrencePath path(n - 2 - k, Side::Left);
            if (k == 0) {
                b.apply_at(path, A::prim(swap_kind(c), {it[0], it[1]}));
            } else {
                const Formula& sub = at(b.cur, path);
                const Formula& rest = sub.left().left();
                const A head = A::compose(
                    A::prim(assoc_to(c), {rest, it[k + 1], it[k]}),
                    A::compose(A::par(c, A::id(rest), A::prim(swap_kind(c), {it[k], it[k + 1]})),
                               A::prim(assoc_from(c), {rest, it[k], it[k + 1]})));
                b.apply_at(path, head);
            }
            swapped = true;
            break;
        }
    }
    return b.term;
}

// ---- search over form sets ----

using Path = std::vector<std::size_t>;

struct Move {
    Path or_path;
    std::size_t i, j;
    std::vector<bool> s1, s2;
};

FormSequence group(Conn c, const std::vector<FormSequence>& xs) {
    return xs.size() == 1 ? xs.front() : FormSequence::node(c, xs);
}

std::pair<FormSequence, FormSequence> split(const FormSequence& x, const std::vector<bool>& s) {
    std::vector<FormSequence> in, out;
    for (std::size_t k = 0; k < s.size(); ++k) (s[k] ? in : out).push_back(x.children()[k]);
    return {group(Conn::And, in), group(Conn::And, out)};
}

FormSequence replace_at(const FormSequence& x, const Path& path, std::size_t depth, const FormSequence& r) {
    if (depth == path.size()) return r;
    auto ch = x.children();
    ch[path[depth]] = replace_at(ch[path[depth]], path, depth + 1, r);
    return FormSequence::node(x.conn(), ch);
}

FormSequence apply_move(const FormSequence& x, const Move& m) {
    const FormSequence& node = node_at(x, m.or_path);
    const auto [a, b] = split(node.children()[m.i], m.s1);
    const auto [c, d] = split(node.children()[m.j], m.s2);
    std::vector<FormSequence> ch;
    for (std::size_t k = 0; k < node.children().size(); ++k)
        if (k != m.i && k != m.j) ch.push_back(node.children()[k]);
    ch.push_back(FormSequence::node(Conn::And, {FormSequence::node(Conn::Or, {a, c}), FormSequence::node(Conn::Or, {b, d})}));
    return canonical_order(replace_at(x, m.or_path, 0, group(Conn::Or, ch)));
}

void collect_moves(const FormSequence& x, Path& path, std::vector<Move>& out) {
    if (x.is_leaf()) return;
    const auto& ch = x.children();
    if (x.conn() == Conn::Or) {
        for (std::size_t i = 0; i < ch.size(); ++i)
            for (std::size_t j = i + 1; j < ch.size(); ++j) {
                if (ch[i].is_leaf() || ch[j].is_leaf()) continue;
                const std::size_t ni = ch[i].children().size(), nj = ch[j].children().size();
                for (std::uint32_t m1 = 1; m1 + 1 < (1u << ni); ++m1)
                    for (std::uint32_t m2 = 1; m2 + 1 < (1u << nj); ++m2) {
                        Move mv{path, i, j, std::vector<bool>(ni), std::vector<bool>(nj)};
                        for (std::size_t k = 0; k < ni; ++k) mv.s1[k] = (m1 >> k) & 1u;
                        for (std::size_t k = 0; k < nj; ++k) mv.s2[k] = (m2 >> k) & 1u;
                        out.push_back(std::move(mv));
                    }
            }
    }
    for (std::size_t k = 0; k < ch.size(); ++k) {
        path.push_back(k);
        collect_moves(ch[k], path, out);
        path.pop_back();
    }
}

using PairSet = std::vector<std::uint64_t>;

void and_pairs(const FormSequence& x, const std::map<std::string, int>& ids, PairSet& out, std::vector<int>& below) {
    if (x.is_leaf()) {
        below.push_back(ids.at(x.letter()));
        return;
    }
    std::vector<std::vector<int>> parts;
    for (const auto& c : x.children()) {
        parts.emplace_back();
        and_pairs(c, ids, out, parts.back());
    }
    if (x.conn() == Conn::And)
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (i != j)
                    for (int a : parts[i])
                        for (int b : parts[j]) out[a] |= std::uint64_t{1} << b;
    for (const auto& p : parts) below.insert(below.end(), p.begin(), p.end());
}

PairSet and_pairs(const FormSequence& x, const std::map<std::string, int>& ids) {
    PairSet out(ids.size(), 0);
    std::vector<int> below;
    and_pairs(x, ids, out, below);
    return out;
}

bool subset(const PairSet& a, const PairSet& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

struct Search {
    FormSequence goal;
    std::map<std::string, int> ids;
    PairSet goal_pairs;
    std::unordered_set<std::string> dead;
    std::vector<std::pair<FormSequence, Move>> trail;

    bool run(const FormSequence& x) {
        if (x == goal) return true;
        const std::string key = to_string(x);
        if (dead.count(key)) return false;
        std::vector<Move> moves;
        Path p;
        collect_moves(x, p, moves);
        for (const auto& m : moves) {
            FormSequence next = apply_move(x, m);
            if (!subset(and_pairs(next, ids), goal_pairs)) continue;
            trail.emplace_back(x, m);
            if (run(next)) return true;
            trail.pop_back();
        }
        dead.insert(key);
        return false;
    }
};

Formula fold(Conn c, const std::vector<FormSequence>& xs) { return to_formula(group(c, xs)); }

// A formula for x with the redex of m written out, and the path to the redex.
std::pair<Formula, OccurrencePath> redex_formula(const FormSequence& x, const Move& m, std::size_t depth,
                                                 Generator& head) {
    const auto& ch = x.children();
    std::vector<FormSequence> others;
    if (depth == m.or_path.size()) {
        const auto [a, b] = split(ch[m.i], m.s1);
        const auto [c, d] = split(ch[m.j], m.s2);
        head = Generator(GenKind::Ck, {to_formula(a), to_formula(b), to_formula(c), to_formula(d)});
        const Formula redex = Formula::disj(Formula::conj(head.arg(0), head.arg(1)), Formula::conj(head.arg(2), head.arg(3)));
        for (std::size_t k = 0; k < ch.size(); ++k)
            if (k != m.i && k != m.j) others.push_back(ch[k]);
        if (others.empty()) return {redex, {}};
        return {Formula::disj(redex, fold(Conn::Or, others)), {Side::Left}};
    }
    const std::size_t k = m.or_path[depth];
    auto [sub, path] = redex_formula(ch[k], m, depth + 1, head);
    for (std::size_t o = 0; o < ch.size(); ++o)
        if (o != k) others.push_back(ch[o]);
    path.insert(path.begin(), Side::Left);
    return {Formula::binary(x.conn(), sub, fold(x.conn(), others)), path};
}

void rename_occurrences(const Formula& f, const std::vector<std::string>& names, std::size_t& next,
                        Formula& out) {
    if (f.is_letter()) {
        out = Formula::letter(names.at(next++));
    } else if (f.is_unit()) {
        out = f;
    } else {
        Formula l = f, r = f;
        rename_occurrences(f.left(), names, next, l);
        rename_occurrences(f.right(), names, next, r);
        out = Formula::binary(f.conn(), l, r);
    }
}

Formula rename_occurrences(const Formula& f, const std::vector<std::string>& names) {
    std::size_t next = 0;
    Formula out = f;
    rename_occurrences(f, names, next, out);
    return out;
}

}  // namespace

std::vector<SymmetricCkStep> symmetric_ck_steps(const FormSequence& x) {
    const FormSequence cx = canonical_order(x);
    std::vector<Move> moves;
    Path p;
    collect_moves(cx, p, moves);
    std::vector<SymmetricCkStep> out;
    for (const auto& m : moves) {
        Generator head(GenKind::Kappa, {});
        auto [pre, path] = redex_formula(cx, m, 0, head);
        out.push_back({apply_move(cx, m), in_context(pre, path, A::prim(head))});
    }
    return out;
}

ArrowTerm ac_reshape(const Formula& x, const Formula& y) {
    const A cx = canon(x), cy = canon(y);
    if (!(type_of(cx).target == type_of(cy).target))
        throw PreconditionViolated(to_string(x) + " and " + to_string(y) + " differ beyond associativity and commutativity");
    return simplify_identities(A::compose(inverse(cy), cx));
}

std::optional<ArrowTerm> search_symmetric_medial(const Formula& x, const Formula& y) {
    const FormSequence sx = canonical_order(strictify(x)), sy = canonical_order(strictify(y));
    if (!is_diversified(sx) || !is_diversified(sy)) throw NotDiversified("search needs diversified formulas");
    if (letter_set(sx) != letter_set(sy)) return std::nullopt;
    Search s{sy, {}, {}, {}, {}};
    for (const auto& l : letter_set(sx)) s.ids.emplace(l, static_cast<int>(s.ids.size()));
    if (s.ids.size() > 64) throw PreconditionViolated("too many letters");
    s.goal_pairs = and_pairs(sy, s.ids);
    if (!subset(and_pairs(sx, s.ids), s.goal_pairs) || !s.run(sx)) return std::nullopt;

    Builder b(x);
    for (const auto& [state, move] : s.trail) {
        Generator head(GenKind::Kappa, {});
        auto [pre, path] = redex_formula(state, move, 0, head);
        b.apply(ac_reshape(b.cur, pre));
        b.apply_at(path, A::prim(head));
    }
    b.apply(ac_reshape(b.cur, y));
    return simplify_identities(b.term);
}

ArrowTerm expand_definitions(const ArrowTerm& f) {
    switch (f.kind()) {
        case A::Kind::Id: return f;
        case A::Kind::Comp: return A::compose(expand_definitions(f.after()), expand_definitions(f.before()));
        case A::Kind::ConjPar:
        case A::Kind::DisjPar: return A::par(f.conn(), expand_definitions(f.left()), expand_definitions(f.right()));
        case A::Kind::Prim: break;
    }
    const Generator& g = f.generator();
    switch (g.kind()) {
        case GenKind::HbPlus: return find_schema("def-hb-to").build(g.args()).rhs;
        case GenKind::HbMinus: return find_schema("def-hb-from").build(g.args()).rhs;
        case GenKind::Hc: return find_schema("def-hc").build(g.args()).rhs;
        case GenKind::Ck: return find_schema("def-ck-hat").build(g.args()).rhs;
        case GenKind::VbPlus:
        case GenKind::VbMinus:
        case GenKind::Vc: return dual(expand_definitions(dual(f)));
        default: return f;
    }
}

std::optional<ArrowTerm> lattice_reduce(const ArrowTerm& f) {
    const Type t = type_of(f);
    if (has_units(t.source) || has_units(t.target)) return std::nullopt;
    const IntMatrix m = eval_mat(f);
    if (!is_permutation_matrix(m)) return std::nullopt;

    const auto original = letter_sequence(t.source);
    std::vector<std::string> src_names, tgt_names(m.rows());
    std::map<std::string, std::string> back;
    for (std::size_t i = 0; i < m.cols(); ++i) {
        src_names.push_back("o" + std::to_string(i));
        back.emplace(src_names.back(), original[i]);
    }
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) == 1) tgt_names[r] = src_names[c];

    const auto found = search_symmetric_medial(rename_occurrences(t.source, src_names),
                                               rename_occurrences(t.target, tgt_names));
    if (!found) return std::nullopt;
    const A out = rename_letters(*found, back);
    if (!(type_of(out) == t) || !(eval_mat(out) == m)) return std::nullopt;
    return out;
}

}  // namespace intermute
