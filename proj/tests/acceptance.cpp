#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "intermute/decide.hpp"
#include "intermute/equations.hpp"
#include "intermute/error.hpp"
#include "intermute/form_sequence.hpp"
#include "intermute/lattice.hpp"
#include "intermute/legitimacy.hpp"
#include "intermute/parser.hpp"
#include "intermute/random.hpp"
#include "intermute/semantics.hpp"
#include "intermute/splitting.hpp"
#include "intermute/theory.hpp"

using namespace intermute;

namespace {

constexpr std::size_t schema_trials = 100;
constexpr double schema_seconds = 60.0;
constexpr std::size_t max_letters = 5;
// Above this size the source ranges over one letter order per shape; legitimacy is invariant under renaming.
constexpr std::size_t full_pairs_up_to = 4;
// Paths only branch from six letters on; these sources cover every shape in one letter order.
constexpr std::size_t coherence_letters = 7;
constexpr std::size_t purity_terms = 500;
constexpr std::size_t split_terms = 200;
constexpr std::size_t split_letters = 8;
constexpr std::size_t lattice_terms = 50;

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", n, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// All form sequences whose letters, read left to right, are exactly `word`, with root connective c.
std::vector<FormSequence> rooted(const std::vector<std::string>& word, std::size_t lo, std::size_t hi, Conn c);

std::vector<FormSequence> block(const std::vector<std::string>& word, std::size_t lo, std::size_t hi, Conn c) {
    if (hi - lo == 1) return {FormSequence::leaf(word[lo])};
    return rooted(word, lo, hi, c);
}

std::vector<FormSequence> rooted(const std::vector<std::string>& word, std::size_t lo, std::size_t hi, Conn c) {
    std::vector<FormSequence> out;
    std::vector<FormSequence> children;
    std::function<void(std::size_t)> go = [&](std::size_t from) {
        if (from == hi) {
            if (children.size() >= 2) out.push_back(FormSequence::node(c, children));
            return;
        }
        for (std::size_t to = from + 1; to <= hi; ++to) {
            if (from == lo && to == hi) continue;
            for (const auto& b : block(word, from, to, dual(c))) {
                children.push_back(b);
                go(to);
                children.pop_back();
            }
        }
    };
    go(lo);
    return out;
}

std::vector<FormSequence> over_word(const std::vector<std::string>& word) {
    if (word.size() == 1) return {FormSequence::leaf(word[0])};
    auto out = rooted(word, 0, word.size(), Conn::And);
    auto ors = rooted(word, 0, word.size(), Conn::Or);
    out.insert(out.end(), ors.begin(), ors.end());
    return out;
}

std::vector<FormSequence> all_orders(std::vector<std::string> word) {
    std::vector<FormSequence> out;
    std::sort(word.begin(), word.end());
    do {
        auto more = over_word(word);
        out.insert(out.end(), more.begin(), more.end());
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

struct Pair {
    FormSequence x, y;
};

std::size_t and_count(const FormSequence& x) { return occurrences(x, Conn::And).size(); }

// Every composite of single intermutation steps from x to y.
void all_paths(const FormSequence& x, const FormSequence& y, const ArrowTerm& so_far,
               const std::function<void(const ArrowTerm&)>& visit) {
    if (x == y) visit(so_far);
    if (and_count(x) <= and_count(y)) return;
    for (const auto& s : ck_steps(x)) all_paths(s.result, y, ArrowTerm::compose(s.factor, so_far), visit);
}

std::vector<Formula> random_args(Rng& rng, std::size_t n) {
    FormulaShape shape;
    shape.letters = {"p", "q", "r", "s", "t"};
    shape.max_letters = 3;
    std::vector<Formula> args;
    for (std::size_t i = 0; i < n; ++i) args.push_back(random_formula(rng, shape));
    return args;
}

void schemas() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(1);
    std::size_t bad = 0, checks = 0;
    std::string first;
    for (const auto& s : schema_catalogue())
        for (std::size_t k = 0; k < schema_trials; ++k) {
            const auto args = random_args(rng, s.arity);
            ++checks;
            if (!check_equation(s, args)) {
                if (!bad++) first = s.name;
            }
        }
    const double secs = seconds_since(t0);
    report(1, bad == 0 && secs < schema_seconds, "schema catalogue under random instantiation",
           std::to_string(schema_catalogue().size()) + " schemas, " + std::to_string(checks) + " checks, " +
               std::to_string(bad) + " failures" + (bad ? " first " + first : "") + ", " + std::to_string(secs) +
               "s of " + std::to_string(static_cast<int>(schema_seconds)) + "s");
}

std::vector<Pair> legitimacy_against_search() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Pair> legit;
    std::size_t pairs = 0, disagree = 0;
    std::string first;
    for (std::size_t n = 1; n <= max_letters; ++n) {
        std::vector<std::string> word;
        for (std::size_t i = 1; i <= n; ++i) word.push_back("p" + std::to_string(i));
        const auto targets = all_orders(word);
        const auto sources = n <= full_pairs_up_to ? targets : over_word(word);
        for (const auto& x : sources)
            for (const auto& y : targets) {
                ++pairs;
                const bool l = static_cast<bool>(check_legitimate(x, y));
                if (l != exists_bfs(x, y)) {
                    if (!disagree++) first = to_string(x) + " -> " + to_string(y);
                }
                if (l) legit.push_back({x, y});
            }
    }
    report(2, disagree == 0, "check_legitimate agrees with exists_bfs",
           std::to_string(pairs) + " pairs, " + std::to_string(legit.size()) + " legitimate, " +
               std::to_string(disagree) + " discrepancies" + (disagree ? " first " + first : "") + ", " +
               std::to_string(seconds_since(t0)) + "s");
    return legit;
}

void synthesis(const std::vector<Pair>& legit) {
    std::size_t bad = 0;
    std::string first;
    for (const auto& [x, y] : legit) {
        bool ok = false;
        try {
            const ArrowTerm f = synthesize(x, y);
            const Type t = type_of(f, Objects::FormSequences);
            ok = strictify(t.source) == x && strictify(t.target) == y &&
                 count_generators(f, GenKind::Ck) == and_count(x) - and_count(y);
        } catch (const Error&) {
        }
        if (!ok && !bad++) first = to_string(x) + " -> " + to_string(y);
    }
    report(3, bad == 0, "synthesize types and counts intermutations",
           std::to_string(legit.size()) + " pairs, " + std::to_string(bad) + " failures" + (bad ? " first " + first : ""));
}

struct PathCount {
    std::size_t terms = 0, most = 0, bad = 0;
    std::string first;

    void check(const FormSequence& x, const FormSequence& y) {
        std::optional<Relation> seen;
        std::size_t here = 0;
        bool ok = true;
        all_paths(x, y, ArrowTerm::id(to_formula(x)), [&](const ArrowTerm& f) {
            ++here;
            const Relation r = eval_rel(f, Objects::FormSequences);
            if (!seen) seen = r;
            else if (!(r == *seen)) ok = false;
        });
        terms += here;
        most = std::max(most, here);
        if ((!ok || here == 0) && !bad++) first = to_string(x) + " -> " + to_string(y);
    }
};

std::set<FormSequence> reachable(const FormSequence& x) {
    std::set<FormSequence> seen{x};
    std::vector<FormSequence> todo{x};
    while (!todo.empty()) {
        const FormSequence s = todo.back();
        todo.pop_back();
        for (const auto& step : ck_steps(s))
            if (seen.insert(step.result).second) todo.push_back(step.result);
    }
    return seen;
}

void coherence(const std::vector<Pair>& legit) {
    PathCount small, large;
    for (const auto& [x, y] : legit) small.check(x, y);
    std::size_t pairs = 0;
    std::vector<std::string> word;
    for (std::size_t i = 1; i <= coherence_letters; ++i) {
        word.push_back("p" + std::to_string(i));
        if (i <= max_letters) continue;
        for (const auto& x : over_word(word))
            for (const auto& y : reachable(x)) {
                ++pairs;
                large.check(x, y);
            }
    }
    const std::size_t bad = small.bad + large.bad;
    report(4, bad == 0, "all strict intermutation terms per pair share one relation",
           std::to_string(small.terms) + " terms over " + std::to_string(legit.size()) + " pairs, at most " +
               std::to_string(small.most) + " per pair; " + std::to_string(max_letters + 1) + " to " +
               std::to_string(coherence_letters) + " letters: " +
               std::to_string(large.terms) + " terms over " + std::to_string(pairs) + " pairs, at most " +
               std::to_string(large.most) + " per pair; " + std::to_string(bad) + " failures" +
               (bad ? " first " + (small.bad ? small.first : large.first) : ""));
}

void anchor() {
    const ArrowTerm ck = parse_arrow("ck{p,q,r,s}");
    IntMatrix expected(4, 4);
    const int rows[4][4] = {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) expected.at(i, j) = rows[i][j];
    Relation crossing;
    crossing.source_size = crossing.target_size = 4;
    crossing.pairs = {{0, 0}, {1, 2}, {2, 1}, {3, 3}};
    const bool ok = eval_mat(ck) == expected && eval_rel(ck) == crossing;
    report(5, ok, "intermutation matrix and crossing", "matrix rows 1000/0010/0100/0001, pairs (0,0) (1,2) (2,1) (3,3)");
}

void purity() {
    Rng rng(5);
    FormulaShape shape;
    shape.max_letters = 4;
    shape.unit_probability = 0.3;
    std::size_t violations = 0, factors = 0, checked = 0;
    for (std::size_t n = 0; n < purity_terms; ++n) {
        const ArrowTerm t = random_term(rng, random_formula(rng, shape), generator_kinds(TheoryId::ACkU), 10);
        if (!validate_in_theory(t, TheoryId::ACkU)) {
            ++violations;
            continue;
        }
        const auto r = purity_scan(t);
        violations += r.violations;
        factors += r.steps.size();
        for (const auto& s : r.steps) checked += !s.letterless;
    }
    report(6, violations == 0, "purity propagates along developed factors",
           std::to_string(purity_terms) + " terms, " + std::to_string(factors) + " factors, " + std::to_string(checked) +
               " with letters, " + std::to_string(violations) + " violations");
}

void shared_borders(const std::vector<Pair>& legit) {
    std::size_t bad = 0;
    std::string first;
    for (const auto& [x, y] : legit) {
        const Borders a = borders(x), b = borders(y);
        if (!(a.left == b.left && a.right == b.right && a.top == b.top && a.bottom == b.bottom) && !bad++)
            first = to_string(x) + " -> " + to_string(y);
    }
    report(7, bad == 0, "borders coincide on legitimate pairs",
           std::to_string(legit.size()) + " pairs, " + std::to_string(bad) + " mismatches" + (bad ? " first " + first : ""));
}

void splitting() {
    Rng rng(17);
    FormulaShape shape;
    shape.letters.clear();
    for (std::size_t i = 1; i <= split_letters; ++i) shape.letters.push_back("x" + std::to_string(i));
    shape.max_letters = split_letters;
    shape.distinct_letters = true;
    constexpr Objects sets = Objects::FormSets;
    std::size_t bad = 0, mixed = 0, with_ck = 0;
    std::string first;
    for (std::size_t n = 0; n < split_terms; ++n) {
        const Formula x = random_medial_source(rng, shape, 2 + n % 2);
        const FormSet x1(strictify(x.left())), x2(strictify(x.right()));
        const ArrowTerm f = random_strict_symmetric_term(rng, strictify(x), 1 + n % 5);
        bool ok = false;
        try {
            const auto c = classify(f, x1, x2);
            mixed += !c.all_splitting() && !c.all_nonsplitting();
            with_ck += count_generators(f, GenKind::Ck) > 0;
            const auto r = factor_split(f, x1, x2);
            const bool composable =
                objects_equal(type_of(r.nonsplitting, sets).target, type_of(r.splitting, sets).source, sets);
            const ArrowTerm composite = ArrowTerm::compose(r.splitting, r.nonsplitting);
            const ArrowTerm nf = splitting_normal_form(r.splitting, x1, x2);
            ok = composable && letter_links(composite, sets) == letter_links(f, sets) &&
                 count_generators(composite, GenKind::Ck) == count_generators(f, GenKind::Ck) &&
                 splitting_normal_form(nf, x1, x2) == nf;
        } catch (const Error&) {
        }
        if (!ok && !bad++) first = to_string(f);
    }
    report(8, bad == 0, "splitting factorization and idempotent normal form",
           std::to_string(split_terms) + " terms, " + std::to_string(with_ck) + " with intermutations, " +
               std::to_string(mixed) + " mixed, " + std::to_string(bad) + " failures" + (bad ? " first " + first : ""));
}

void lattice() {
    Rng rng(11);
    FormulaShape shape;
    shape.max_letters = 8;
    std::size_t bad = 0, with_ck = 0;
    std::string first;
    for (std::size_t n = 0; n < lattice_terms; ++n) {
        const Formula x = random_medial_source(rng, shape, 2 + n % 2);
        const ArrowTerm f = random_term(rng, x, generator_kinds(TheoryId::SCk), 10);
        with_ck += count_generators(f, GenKind::Ck) > 0;
        const ArrowTerm l = expand_definitions(f);
        bool ok = false;
        try {
            const IntMatrix m = eval_mat(l);
            const auto r = lattice_reduce(l);
            ok = validate_in_theory(l, TheoryId::L) && is_permutation_matrix(m) && r &&
                 validate_in_theory(*r, TheoryId::SCk) && type_of(*r) == type_of(l) && eval_mat(*r) == m;
        } catch (const Error&) {
        }
        if (!ok && !bad++) first = to_string(l);
    }
    report(9, bad == 0, "lattice terms with bijective image reduce to symmetric medial terms",
           std::to_string(lattice_terms) + " terms, " + std::to_string(with_ck) + " from terms with intermutations, " +
               std::to_string(bad) + " failures" + (bad ? " first " + first : ""));
}

}  // namespace

int main() {
    schemas();
    const auto legit = legitimacy_against_search();
    synthesis(legit);
    coherence(legit);
    anchor();
    purity();
    shared_borders(legit);
    splitting();
    lattice();
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
