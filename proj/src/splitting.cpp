#include "intermute/splitting.hpp"

#include <algorithm>

#include "intermute/error.hpp"
#include "intermute/lattice.hpp"
#include "intermute/restrict.hpp"
#include "intermute/semantics.hpp"

namespace intermute {

namespace {

using A = ArrowTerm;
constexpr Objects sets = Objects::FormSets;

std::set<std::string> letters_of(const Formula& f) {
    std::set<std::string> out;
    for (const auto& [l, n] : letters(f)) out.insert(l);
    return out;
}

bool within(const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FormSequence seq(const Formula& f) { return canonical_order(strictify(f)); }

FormSequence erased(const FormSequence& y, const std::set<std::string>& p) { return canonical_order(delete_letters(y, p)); }

A par_all(Conn c, const std::vector<A>& fs) {
    A acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = A::par(c, acc, fs[i]);
    return acc;
}

Formula join(Conn c, const std::vector<FormSequence>& xs) {
    Formula acc = to_formula(xs.front());
    for (std::size_t i = 1; i < xs.size(); ++i) acc = Formula::binary(c, acc, to_formula(xs[i]));
    return acc;
}

// (P1 & ... & Pn) | (Q1 & ... & Qn) -> (P1 | Q1) & ... & (Pn | Qn)
A ck_chain(const std::vector<FormSequence>& p, const std::vector<FormSequence>& q, std::size_t from = 0) {
    const std::size_t n = p.size() - from;
    const Formula pf = to_formula(p[from]), qf = to_formula(q[from]);
    if (n == 1) return A::id(Formula::disj(pf, qf));
    const std::vector<FormSequence> prest(p.begin() + static_cast<std::ptrdiff_t>(from) + 1, p.end());
    const std::vector<FormSequence> qrest(q.begin() + static_cast<std::ptrdiff_t>(from) + 1, q.end());
    const A head = A::prim(GenKind::Ck, {pf, join(Conn::And, prest), qf, join(Conn::And, qrest)});
    if (n == 2) return head;
    return A::compose(A::conj_par(A::id(Formula::disj(pf, qf)), ck_chain(p, q, from + 1)), head);
}

A splitting_nf(const FormSequence& x1, const FormSequence& x2, const FormSequence& y) {
    const auto l1 = letter_set(x1), l2 = letter_set(x2);
    if (FormSet(FormSequence::node(Conn::Or, {x1, x2})) == FormSet(y)) return A::id(Formula::disj(to_formula(x1), to_formula(x2)));
    if (y.is_leaf()) throw NotLegitimate("no splitting term onto a letter");
    if (y.conn() == Conn::And) {
        std::vector<FormSequence> p, q;
        std::vector<A> inner;
        bool all_id = true;
        for (const auto& yi : y.children()) {
            const auto ly = letter_set(yi);
            if (within(ly, l1) || within(ly, l2)) throw NotLegitimate("conjunct " + to_string(yi) + " stays on one side");
            p.push_back(erased(yi, l2));
            q.push_back(erased(yi, l1));
            inner.push_back(splitting_nf(p.back(), q.back(), yi));
            all_id = all_id && inner.back().is_id();
        }
        if (!(FormSet(FormSequence::node(Conn::And, p)) == FormSet(x1)) ||
            !(FormSet(FormSequence::node(Conn::And, q)) == FormSet(x2)))
            throw NotLegitimate("conjuncts do not restrict to the disjuncts");
        const A chain = ck_chain(p, q);
        return all_id ? chain : A::compose(par_all(Conn::And, inner), chain);
    }
    std::vector<A> pieces;
    for (const auto& d : y.children()) {
        const auto ld = letter_set(d);
        if (within(ld, l1) || within(ld, l2)) pieces.push_back(A::id(to_formula(d)));
        else pieces.push_back(splitting_nf(erased(d, l2), erased(d, l1), d));
    }
    return par_all(Conn::Or, pieces);
}

// The disjuncts of the source of f grouped by the letters of x1 and x2.
std::pair<FormSequence, FormSequence> split_source(const ArrowTerm& f, const FormSet& x1, const FormSet& x2) {
    const FormSequence src = seq(type_of(f, sets).source);
    const auto l1 = letter_set(x1.sequence()), l2 = letter_set(x2.sequence());
    std::vector<FormSequence> g1, g2;
    if (!src.is_leaf() && src.conn() == Conn::Or)
        for (const auto& d : src.children()) {
            const auto ld = letter_set(d);
            if (within(ld, l1)) g1.push_back(d);
            else if (within(ld, l2)) g2.push_back(d);
        }
    if (g1.empty() || g2.empty() || letter_set(src) != letter_set(FormSequence::node(Conn::Or, {x1.sequence(), x2.sequence()})) ||
        g1.size() + g2.size() != src.children().size())
        throw IllTyped("source " + to_string(src) + " does not split as " + to_string(x1) + " | " + to_string(x2));
    return {canonical_order(FormSequence::node(Conn::Or, g1)), canonical_order(FormSequence::node(Conn::Or, g2))};
}

}  // namespace

bool SplitClass::all_splitting() const {
    return std::all_of(tags.begin(), tags.end(), [](Tag t) { return t == Tag::Splitting; });
}

bool SplitClass::all_nonsplitting() const {
    return std::all_of(tags.begin(), tags.end(), [](Tag t) { return t == Tag::Nonsplitting; });
}

bool is_splitting(const Generator& ck, const FormSet& x1, const FormSet& x2) {
    const auto l1 = letter_set(x1.sequence()), l2 = letter_set(x2.sequence());
    const auto st = letters_of(Formula::conj(ck.arg(0), ck.arg(1)));
    const auto uv = letters_of(Formula::conj(ck.arg(2), ck.arg(3)));
    return (within(st, l1) && within(uv, l2)) || (within(st, l2) && within(uv, l1));
}

SplitClass classify(const ArrowTerm& f, const FormSet& x1, const FormSet& x2) {
    split_source(f, x1, x2);
    SplitClass out;
    for (const auto& g : generators_of(f)) {
        if (g.kind() != GenKind::Ck) continue;
        out.occurrences.push_back(g);
        out.tags.push_back(is_splitting(g, x1, x2) ? SplitClass::Tag::Splitting : SplitClass::Tag::Nonsplitting);
    }
    return out;
}

std::pair<FormSet, FormSet> source_disjuncts(const ArrowTerm& f) {
    const Formula src = type_of(f, sets).source;
    if (!src.is(Conn::Or)) throw IllTyped("source " + to_string(src) + " is not a disjunction");
    return {FormSet(strictify(src.left())), FormSet(strictify(src.right()))};
}

ArrowTerm splitting_normal_form(const FormSet& x1, const FormSet& x2, const FormSet& y) {
    return splitting_nf(x1.sequence(), x2.sequence(), y.sequence());
}

ArrowTerm splitting_normal_form(const ArrowTerm& f, const FormSet& x1, const FormSet& x2) {
    if (!classify(f, x1, x2).all_splitting()) throw NotAllSplitting("a ck occurrence is not splitting");
    const auto [s1, s2] = split_source(f, x1, x2);
    return splitting_nf(s1, s2, seq(type_of(f, sets).target));
}

Factorization factor_split(const ArrowTerm& f, const FormSet& x1, const FormSet& x2) {
    const SplitClass c = classify(f, x1, x2);
    const Type t = type_of(f, sets);
    if (!is_diversified(t.source)) throw NotDiversified("factorization needs a diversified source");
    if (c.all_nonsplitting()) return {f, A::id(t.target)};
    if (c.all_splitting()) return {A::id(t.source), f};

    const auto l1 = letter_set(x1.sequence()), l2 = letter_set(x2.sequence());
    const FormSequence y = seq(t.target);
    const A left = erase_letters(f, l2), right = erase_letters(f, l1);
    const A first = A::disj_par(left, right);
    const A second = splitting_nf(erased(y, l2), erased(y, l1), y);
    return {first, second};
}

std::pair<ArrowTerm, ArrowTerm> split_conjunction(const ArrowTerm& f, const FormSet& x1, const FormSet& x2) {
    const Formula src = type_of(f, sets).source;
    if (!(FormSet(strictify(src)) == FormSet(FormSequence::node(Conn::And, {x1.sequence(), x2.sequence()}))))
        throw IllTyped("source " + to_string(src) + " is not " + to_string(x1) + " & " + to_string(x2));
    return {erase_letters(f, letter_set(x2.sequence())), erase_letters(f, letter_set(x1.sequence()))};
}

ArrowTerm random_strict_symmetric_term(Rng& rng, const FormSequence& x, std::size_t steps) {
    FormSequence cur = canonical_order(x);
    A acc = A::id(to_formula(cur));
    for (std::size_t i = 0; i < steps; ++i) {
        auto options = symmetric_ck_steps(cur);
        if (options.empty()) break;
        auto& pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        acc = A::compose(pick.factor, acc);
        cur = pick.result;
    }
    return simplify_identities(acc);
}

}  // namespace intermute
