#include "intermute/decide.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "intermute/error.hpp"
#include "intermute/form_sequence.hpp"
#include "intermute/lattice.hpp"
#include "intermute/legitimacy.hpp"
#include "intermute/steps.hpp"

namespace intermute {

namespace {

using Tag = Verdict::Tag;
using ETag = ExistsAnswer::Tag;

Verdict equal(std::string reason) { return {Tag::Equal, std::move(reason), {}, {}, {}, {}}; }
Verdict outside(std::string reason) { return {Tag::OutsideFragment, std::move(reason), {}, {}, {}, {}}; }

void require_in_theory(const ArrowTerm& f, TheoryId t) {
    const auto foreign = foreign_generators(f, t);
    if (!foreign.empty())
        throw GeneratorNotInTheory(to_string(foreign.front()) + " is not a generator of " + std::string(theory(t).name));
}

Verdict compare_images(const ArrowTerm& f, const ArrowTerm& g, bool multiplicities, Objects mode) {
    const Relation rf = eval_rel(f, mode), rg = eval_rel(g, mode);
    if (!(rf == rg)) {
        Verdict v{Tag::NotEqual, "relations differ", {}, {}, rf, rg};
        return v;
    }
    if (multiplicities && !(eval_mat(f, mode) == eval_mat(g, mode))) return {Tag::NotEqual, "matrices differ", {}, {}, rf, rg};
    return equal("same image under a faithful functor");
}

// ---- existence ----

ExistsAnswer answer(ETag t, std::string reason) { return {t, std::move(reason), {}, Objects::Formulas, {}}; }

// Renamings of y's occurrences onto x's occurrences of the same letter, each tried once.
template <class Try>
std::optional<ExistsAnswer> over_renamings(const Formula& x, const Formula& y, std::size_t cap, Try&& attempt) {
    if (letters(x) != letters(y)) return answer(ETag::False, "letter multisets differ");
    const Diversified dx = diversify(x);
    std::map<std::string, std::vector<std::string>> copies;
    for (const auto& [fresh, orig] : dx.origin) copies[orig].push_back(fresh);
    std::size_t total = 1;
    for (auto& [orig, v] : copies) {
        std::sort(v.begin(), v.end());
        for (std::size_t k = 2; k <= v.size(); ++k) {
            total *= k;
            if (total > cap) return std::nullopt;
        }
    }
    const auto seq = letter_sequence(y);
    std::vector<std::string> names(seq.size());
    std::function<bool()> next = [&] {
        for (auto& [orig, v] : copies)
            if (std::next_permutation(v.begin(), v.end())) return true;
        return false;
    };
    std::size_t tried = 0;
    do {
        std::map<std::string, std::size_t> used;
        for (std::size_t i = 0; i < seq.size(); ++i) names[i] = copies.at(seq[i])[used[seq[i]]++];
        std::size_t k = 0;
        std::function<Formula(const Formula&)> rename = [&](const Formula& f) -> Formula {
            if (f.is_letter()) return Formula::letter(names[k++]);
            if (f.is_unit()) return f;
            Formula l = rename(f.left());
            return Formula::binary(f.conn(), l, rename(f.right()));
        };
        ++tried;
        if (auto a = attempt(dx.formula, rename(y), dx.origin)) return a;
    } while (next());
    return answer(ETag::False, "no arrow for any of " + std::to_string(tried) + " occurrence matchings");
}

ExistsAnswer exists_ack(const Formula& x, const Formula& y, const ExistsOptions& o) {
    auto r = over_renamings(x, y, o.max_renamings,
                            [](const Formula& dx, const Formula& dy,
                               const std::map<std::string, std::string>& origin) -> std::optional<ExistsAnswer> {
                                const FormSequence sx = strictify(dx), sy = strictify(dy);
                                if (!check_legitimate(sx, sy)) return std::nullopt;
                                ExistsAnswer a = answer(ETag::True, "legitimate pair");
                                a.witness = rename_letters(synthesize(sx, sy), origin);
                                a.witness_objects = Objects::FormSequences;
                                return a;
                            });
    if (!r) return answer(ETag::OutsideFragment, "too many occurrence matchings to try");
    if (r->tag == ETag::False && r->reason.rfind("no arrow", 0) == 0) r->reason = "not a legitimate pair under any occurrence matching";
    return *r;
}

ExistsAnswer exists_sck(const Formula& x, const Formula& y, const ExistsOptions& o) {
    auto r = over_renamings(x, y, o.max_renamings,
                            [](const Formula& dx, const Formula& dy,
                               const std::map<std::string, std::string>& origin) -> std::optional<ExistsAnswer> {
                                auto f = search_symmetric_medial(dx, dy);
                                if (!f) return std::nullopt;
                                ExistsAnswer a = answer(ETag::True, "found by search over form sets");
                                a.witness = rename_letters(*f, origin);
                                return a;
                            });
    if (!r) return answer(ETag::OutsideFragment, "too many occurrence matchings to try");
    return *r;
}

ExistsAnswer exists_ck(const Formula& x, const Formula& y, const ExistsOptions& o) {
    if (letters(x) != letters(y) || x.size() != y.size()) return answer(ETag::False, "letters or sizes differ");
    std::unordered_map<Formula, std::optional<ArrowTerm>, FormulaHash> seen;
    std::deque<std::pair<Formula, ArrowTerm>> queue{{x, ArrowTerm::id(x)}};
    seen.emplace(x, std::nullopt);
    while (!queue.empty()) {
        auto [cur, path] = queue.front();
        queue.pop_front();
        if (cur == y) {
            ExistsAnswer a = answer(ETag::True, "reached by intermutations");
            a.witness = simplify_identities(path);
            return a;
        }
        for (const auto& step : beta_terms(cur, {GenKind::Ck})) {
            Formula next = type_of(step).target;
            if (seen.count(next)) continue;
            seen.emplace(next, std::nullopt);
            if (seen.size() > o.max_states) return answer(ETag::OutsideFragment, "state limit reached");
            queue.emplace_back(next, ArrowTerm::compose(step, path));
        }
    }
    return answer(ETag::False, "all " + std::to_string(seen.size()) + " reachable objects explored");
}

ExistsAnswer exists_letterless_kappa(const Formula& x, const Formula& y) {
    const Formula nx = normal_form(x), ny = normal_form(y);
    if (nx == ny) return answer(ETag::True, "same normal form");
    if (nx.is(Unit::Bot) && ny.is(Unit::Top)) return answer(ETag::True, "bottom to top through kappa");
    return answer(ETag::False, "top has no arrow to bottom");
}

// Isomorphism search by size-non-increasing invertible steps from both ends.
ExistsAnswer exists_iso(const Formula& x, const Formula& y, TheoryId t, const ExistsOptions& o) {
    std::vector<GenKind> kinds;
    for (GenKind k : generator_kinds(t))
        if (is_invertible(k)) kinds.push_back(k);
    const std::size_t cap = 2 * (x.size() + y.size());

    using Reached = std::unordered_map<Formula, ArrowTerm, FormulaHash>;
    auto explore = [&](const Formula& start) {
        Reached reached{{start, ArrowTerm::id(start)}};
        std::vector<Formula> frontier{start};
        for (std::size_t d = 0; d < cap && !frontier.empty() && reached.size() < o.max_states; ++d) {
            std::vector<Formula> next;
            for (const auto& cur : frontier)
                for (const auto& step : beta_terms(cur, kinds)) {
                    Formula to = type_of(step).target;
                    if (to.size() > cur.size() || reached.count(to)) continue;
                    reached.emplace(to, ArrowTerm::compose(step, reached.at(cur)));
                    next.push_back(to);
                }
            frontier = std::move(next);
        }
        return reached;
    };
    const Reached from_x = explore(x), from_y = explore(y);
    std::optional<Formula> meet;
    for (const auto& [f, path] : from_x)
        if (from_y.count(f) && (!meet || f < *meet)) meet = f;
    ExistsAnswer a = answer(ETag::OutsideFragment, "no isomorphism found within depth cap " + std::to_string(cap));
    a.depth_cap = cap;
    if (meet) {
        a.tag = ETag::True;
        a.reason = "isomorphic, found within depth cap " + std::to_string(cap);
        a.witness = simplify_identities(ArrowTerm::compose(inverse(from_y.at(*meet)), from_x.at(*meet)));
    }
    return a;
}

}  // namespace

std::string_view to_string(Verdict::Tag t) {
    switch (t) {
        case Tag::Equal: return "Equal";
        case Tag::NotEqual: return "NotEqual";
        default: return "OutsideFragment";
    }
}

std::string to_string(const Verdict& v) {
    std::ostringstream out;
    out << to_string(v.tag) << ": " << v.reason;
    if (v.left_type)
        out << "\n  " << to_string(v.left_type->source) << " -> " << to_string(v.left_type->target) << "\n  "
            << to_string(v.right_type->source) << " -> " << to_string(v.right_type->target);
    if (v.left_relation) out << "\n  " << to_string(*v.left_relation) << "\n  " << to_string(*v.right_relation);
    return out.str();
}

Verdict decide_equal(const ArrowTerm& f, const ArrowTerm& g, TheoryId t, Objects mode) {
    require_in_theory(f, t);
    require_in_theory(g, t);
    const Type tf = type_of(f, mode), tg = type_of(g, mode);
    if (!(objects_equal(tf.source, tg.source, mode) && objects_equal(tf.target, tg.target, mode))) return {Tag::NotEqual, "types differ", tf, tg, {}, {}};
    const Theory& th = theory(t);
    if (th.letterless_only && !(is_letterless(tf.source) && is_letterless(tf.target)))
        return outside(std::string(th.name) + " is coherent on letterless objects only");

    switch (th.coherence) {
        case CoherenceClass::Preorder: return equal(std::string(th.name) + " is a preorder");
        case CoherenceClass::DiversifiedPreorder:
            if (is_diversified(tf.source) && is_diversified(tf.target)) return equal("diversified endpoints");
            return compare_images(f, g, false, mode);
        case CoherenceClass::FaithfulRel: return compare_images(f, g, t == TheoryId::L, mode);
        case CoherenceClass::RestrictedByPurity: {
            if (is_letterless(tf.source) && is_letterless(tf.target)) return equal("letterless endpoints");
            if (!is_pure(tf.source) || !is_pure(tf.target)) return outside("an endpoint is not pure");
            if (th.has_symmetry() && !(is_diversified(tf.source) && is_diversified(tf.target)))
                return outside("an endpoint is not diversified");
            return equal("pure endpoints");
        }
    }
    return outside("unknown coherence class");
}

std::string_view to_string(ExistsAnswer::Tag t) {
    switch (t) {
        case ETag::True: return "true";
        case ETag::False: return "false";
        default: return "OutsideFragment";
    }
}

std::string to_string(const ExistsAnswer& a) {
    std::string out = std::string(to_string(a.tag)) + ": " + a.reason;
    if (a.witness) out += "\n" + to_string(*a.witness);
    return out;
}

ExistsAnswer decide_exists(const Formula& x, const Formula& y, TheoryId t, const ExistsOptions& o) {
    const bool constant_free = !has_units(x) && !has_units(y);
    switch (t) {
        case TheoryId::A:
            if (!constant_free) break;
            return strictify(x) == strictify(y) ? exists_iso(x, y, t, o) : answer(ETag::False, "differ beyond associativity");
        case TheoryId::S:
            if (!constant_free) break;
            return FormSet(strictify(x)) == FormSet(strictify(y)) ? exists_iso(x, y, t, o)
                                                                 : answer(ETag::False, "differ beyond associativity and commutativity");
        case TheoryId::N:
            if (!(normal_form(x) == normal_form(y))) return answer(ETag::False, "normal forms differ");
            return exists_iso(x, y, t, o);
        case TheoryId::NA: {
            const Formula nx = normal_form(x), ny = normal_form(y);
            const bool same = has_units(nx) || has_units(ny) ? nx == ny : strictify(nx) == strictify(ny);
            if (!same) return answer(ETag::False, "normal forms differ beyond associativity");
            return exists_iso(x, y, t, o);
        }
        case TheoryId::K0:
        case TheoryId::KA0:
            if (is_letterless(x) && is_letterless(y)) return exists_letterless_kappa(x, y);
            return answer(ETag::OutsideFragment, std::string(theory(t).name) + " has letterless objects only");
        case TheoryId::Ck: return exists_ck(x, y, o);
        case TheoryId::ACk:
            if (constant_free) return exists_ack(x, y, o);
            break;
        case TheoryId::SCk:
            if (constant_free) return exists_sck(x, y, o);
            break;
        default: break;
    }
    return exists_iso(x, y, t, o);
}

std::string to_string(const PurityReport& r) {
    std::ostringstream out;
    for (const auto& s : r.steps) {
        out << to_string(s.source) << " -> " << to_string(s.target);
        if (s.letterless) out << "  letterless";
        else
            out << "  bot-pure " << s.source_bot_pure << s.target_bot_pure << "  top-pure " << s.source_top_pure
                << s.target_top_pure;
        if (s.violation) out << "  VIOLATION";
        out << '\n';
    }
    out << r.violations << " violations";
    return out.str();
}

PurityReport purity_scan(const ArrowTerm& f) {
    const Development d = develop(f);
    PurityReport r;
    Formula cur = d.source;
    for (const auto& factor : d.factors) {
        const Type t = type_of(factor);
        PurityStep s{t.source, t.target};
        s.letterless = is_letterless(t.source) || is_letterless(t.target);
        s.source_bot_pure = is_pure(t.source, Unit::Bot);
        s.target_bot_pure = is_pure(t.target, Unit::Bot);
        s.source_top_pure = is_pure(t.source, Unit::Top);
        s.target_top_pure = is_pure(t.target, Unit::Top);
        if (!s.letterless)
            s.violation = (s.source_bot_pure && !s.target_bot_pure) || (s.target_top_pure && !s.source_top_pure);
        r.violations += s.violation;
        r.steps.push_back(std::move(s));
        cur = t.target;
    }
    return r;
}

}  // namespace intermute
