#include "intermute/legitimacy.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "intermute/error.hpp"

namespace intermute {

std::string to_string(const LegitimacyWitness& w) {
    std::string out;
    for (const auto& [from, to] : w.merge) out += "merge " + to_string(from) + " -> " + to_string(to) + "\n";
    for (const auto& [from, to] : w.split) out += "split " + to_string(from) + " -> " + to_string(to) + "\n";
    return out;
}

namespace {

std::vector<int> encode(const LetterSeq& s, const std::map<std::string, int>& ids) {
    std::vector<int> out;
    out.reserve(s.size());
    for (const auto& p : s) out.push_back(ids.at(p));
    return out;
}

enum class Fail { None, Letters, AndUnmapped, AndNotOnto, AndConcat, OrUnmapped, OrNotOnto, OrConcat };

struct Outcome {
    Fail fail = Fail::None;
    int culprit = -1;
};

// Preimages of each target sorted by position, then checked against the concatenation laws.
Outcome check_condition(const std::vector<FlankTable::Flanks>& from, const std::vector<FlankTable::Flanks>& onto,
                        const std::vector<int>& target_of_letter, const std::vector<int>& position_of_letter,
                        std::vector<int>* assignment, Fail unmapped, Fail not_onto, Fail concat) {
    thread_local std::vector<std::vector<int>> groups;
    if (from.size() < onto.size()) return {not_onto, -1};
    groups.assign(onto.size(), {});
    if (assignment) assignment->assign(from.size(), -1);
    for (std::size_t i = 0; i < from.size(); ++i) {
        const int lead = from[i].first.front();
        const int t = lead < static_cast<int>(target_of_letter.size()) ? target_of_letter[static_cast<std::size_t>(lead)] : -1;
        if (t < 0) return {unmapped, static_cast<int>(i)};
        groups[static_cast<std::size_t>(t)].push_back(static_cast<int>(i));
        if (assignment) (*assignment)[i] = t;
    }
    for (std::size_t t = 0; t < onto.size(); ++t) {
        auto& g = groups[t];
        if (g.empty()) return {not_onto, static_cast<int>(t)};
        std::sort(g.begin(), g.end(), [&](int a, int b) {
            return position_of_letter[static_cast<std::size_t>(from[static_cast<std::size_t>(a)].first.front())] <
                   position_of_letter[static_cast<std::size_t>(from[static_cast<std::size_t>(b)].first.front())];
        });
        for (int side = 0; side < 2; ++side) {
            const auto& whole = side == 0 ? onto[t].first : onto[t].second;
            std::size_t k = 0;
            for (int i : g) {
                const auto& part = side == 0 ? from[static_cast<std::size_t>(i)].first : from[static_cast<std::size_t>(i)].second;
                for (int letter : part) {
                    if (k >= whole.size() || whole[k] != letter) return {concat, static_cast<int>(t)};
                    ++k;
                }
            }
            if (k != whole.size()) return {concat, static_cast<int>(t)};
        }
    }
    return {};
}

Outcome core(const FlankTable& x, const FlankTable& y, std::vector<int>* merge, std::vector<int>* split) {
    if (x.letters != y.letters) return {Fail::Letters, -1};
    Outcome a = check_condition(x.ands, y.ands, y.and_of_left, y.pos_in_left, merge, Fail::AndUnmapped,
                                Fail::AndNotOnto, Fail::AndConcat);
    if (a.fail != Fail::None) return a;
    return check_condition(y.ors, x.ors, x.or_of_top, x.pos_in_top, split, Fail::OrUnmapped, Fail::OrNotOnto,
                           Fail::OrConcat);
}

void require_diversified(const FormSequence& x) {
    if (!is_diversified(x)) throw NotDiversified("form sequence is not diversified: " + to_string(x));
}

std::optional<FormSequence> without(const FormSequence& x, const std::set<std::string>& letters) {
    if (x.is_leaf()) {
        if (letters.count(x.letter())) return std::nullopt;
        return x;
    }
    std::vector<FormSequence> kept;
    for (const auto& ch : x.children())
        if (auto e = without(ch, letters)) kept.push_back(std::move(*e));
    if (kept.empty()) return std::nullopt;
    return FormSequence::node(x.conn(), std::move(kept));
}

FormSequence slice(const FormSequence& x, std::size_t from, std::size_t to) {
    const auto& kids = x.children();
    return FormSequence::node(x.conn(), std::vector<FormSequence>(kids.begin() + static_cast<std::ptrdiff_t>(from),
                                                                  kids.begin() + static_cast<std::ptrdiff_t>(to)));
}

// Splits x at the top-level gap whose left part has exactly the given letters.
std::optional<std::pair<FormSequence, FormSequence>> split_by_letters(const FormSequence& x, Conn c,
                                                                      const std::set<std::string>& left) {
    if (x.is_leaf() || x.conn() != c) return std::nullopt;
    const std::size_t k = x.children().size();
    std::set<std::string> acc;
    for (std::size_t g = 0; g + 1 < k; ++g) {
        auto ls = letter_set(x.children()[g]);
        acc.insert(ls.begin(), ls.end());
        if (acc == left) return std::make_pair(slice(x, 0, g + 1), slice(x, g + 1, k));
        if (acc.size() >= left.size()) break;
    }
    return std::nullopt;
}

Formula rep(const FormSequence& x) { return to_formula(x); }

ArrowTerm synth(const FormSequence& x, const FormSequence& y) {
    if (x == y) return ArrowTerm::id(rep(x));
    if (!y.is_leaf() && y.conn() == Conn::Or) {
        const FormSequence y1 = y.children().front();
        const FormSequence y2 = slice(y, 1, y.children().size());
        auto parts = split_by_letters(x, Conn::Or, letter_set(y1));
        if (!parts) throw Error("synthesis: no matching disjunction split of " + to_string(x));
        return ArrowTerm::disj_par(synth(parts->first, y1), synth(parts->second, y2));
    }
    if (!x.is_leaf() && x.conn() == Conn::And) {
        const FormSequence x1 = x.children().front();
        const FormSequence x2 = slice(x, 1, x.children().size());
        auto parts = split_by_letters(y, Conn::And, letter_set(x1));
        if (!parts) throw Error("synthesis: no matching conjunction split of " + to_string(y));
        return ArrowTerm::conj_par(synth(x1, parts->first), synth(x2, parts->second));
    }
    if (x.is_leaf() || y.is_leaf()) throw Error("synthesis reached an unequal leaf pair");

    const FormSequence x1 = x.children().front();
    const FormSequence x2 = slice(x, 1, x.children().size());
    const auto l1 = letter_set(x1), l2 = letter_set(x2);
    const FormSequence z1 = *without(y, l2);
    const FormSequence z2 = *without(y, l1);
    if (!(z1 == x1 && z2 == x2)) {
        ArrowTerm f = ArrowTerm::disj_par(synth(x1, z1), synth(x2, z2));
        ArrowTerm g = synth(FormSequence::node(Conn::Or, {z1, z2}), y);
        return ArrowTerm::compose(g, f);
    }
    const std::size_t k = y.children().size();
    for (std::size_t gap = 0; gap + 1 < k; ++gap) {
        const FormSequence yl = slice(y, 0, gap + 1), yr = slice(y, gap + 1, k);
        auto a = without(yl, l2), b = without(yr, l2), c = without(yl, l1), d = without(yr, l1);
        if (!a || !b || !c || !d) continue;
        ArrowTerm head = ArrowTerm::prim(GenKind::Ck, {rep(*a), rep(*b), rep(*c), rep(*d)});
        ArrowTerm left = synth(FormSequence::node(Conn::Or, {*a, *c}), yl);
        ArrowTerm right = synth(FormSequence::node(Conn::Or, {*b, *d}), yr);
        return ArrowTerm::compose(ArrowTerm::conj_par(left, right), head);
    }
    throw Error("synthesis: no conjunction gap of " + to_string(y) + " admits an intermutation");
}

// Rebuilds x with the child at path replaced; the innermost replacement is supplied by make.
struct Rewritten {
    FormSequence result;
    ArrowTerm factor;
};

Rewritten in_context(const FormSequence& x, const std::vector<std::size_t>& path, std::size_t depth,
                     const std::function<Rewritten(const FormSequence&)>& make) {
    if (depth == path.size()) return make(x);
    const auto& kids = x.children();
    const std::size_t j = path[depth];
    Rewritten inner = in_context(kids[j], path, depth + 1, make);
    std::vector<FormSequence> next(kids.begin(), kids.end());
    next[j] = inner.result;
    ArrowTerm t = inner.factor;
    if (j > 0) t = ArrowTerm::par(x.conn(), ArrowTerm::id(rep(slice(x, 0, j))), t);
    if (j + 1 < kids.size()) t = ArrowTerm::par(x.conn(), t, ArrowTerm::id(rep(slice(x, j + 1, kids.size()))));
    return {FormSequence::node(x.conn(), std::move(next)), t};
}

void collect_or_nodes(const FormSequence& x, std::vector<std::size_t>& path,
                      std::vector<std::vector<std::size_t>>& out) {
    if (x.is_leaf()) return;
    if (x.conn() == Conn::Or) out.push_back(path);
    for (std::size_t i = 0; i < x.children().size(); ++i) {
        path.push_back(i);
        collect_or_nodes(x.children()[i], path, out);
        path.pop_back();
    }
}

}  // namespace

FlankTable flank_table(const FormSequence& x, const std::map<std::string, int>& ids) {
    FlankTable t;
    const auto seq = encode(letter_sequence(x), ids);
    t.letters = seq;
    std::sort(t.letters.begin(), t.letters.end());
    const std::size_t n = ids.size();
    t.and_of_left.assign(n, -1);
    t.pos_in_left.assign(n, -1);
    t.or_of_top.assign(n, -1);
    t.pos_in_top.assign(n, -1);
    for (const auto& occ : occurrences(x, Conn::And)) {
        auto [l, r] = flank(x, occ);
        FlankTable::Flanks f{encode(l, ids), encode(r, ids)};
        for (std::size_t i = 0; i < f.first.size(); ++i) {
            t.and_of_left[static_cast<std::size_t>(f.first[i])] = static_cast<int>(t.ands.size());
            t.pos_in_left[static_cast<std::size_t>(f.first[i])] = static_cast<int>(i);
        }
        t.ands.push_back(std::move(f));
    }
    for (const auto& occ : occurrences(x, Conn::Or)) {
        auto [top, bottom] = flank(x, occ);
        FlankTable::Flanks f{encode(top, ids), encode(bottom, ids)};
        for (std::size_t i = 0; i < f.first.size(); ++i) {
            t.or_of_top[static_cast<std::size_t>(f.first[i])] = static_cast<int>(t.ors.size());
            t.pos_in_top[static_cast<std::size_t>(f.first[i])] = static_cast<int>(i);
        }
        t.ors.push_back(std::move(f));
    }
    return t;
}

bool is_legitimate(const FlankTable& x, const FlankTable& y) { return core(x, y, nullptr, nullptr).fail == Fail::None; }

LegitimacyCheck check_legitimate(const FormSequence& x, const FormSequence& y) {
    require_diversified(x);
    require_diversified(y);
    std::set<std::string> all = letter_set(x);
    const auto ly = letter_set(y);
    all.insert(ly.begin(), ly.end());
    std::map<std::string, int> ids;
    for (const auto& p : all) ids.emplace(p, static_cast<int>(ids.size()));
    const FlankTable tx = flank_table(x, ids), ty = flank_table(y, ids);
    std::vector<int> merge, split;
    const Outcome o = core(tx, ty, &merge, &split);
    const auto xa = occurrences(x, Conn::And), ya = occurrences(y, Conn::And);
    const auto xo = occurrences(x, Conn::Or), yo = occurrences(y, Conn::Or);
    auto at = [](const std::vector<ConnOccurrence>& v, int i) { return i >= 0 ? to_string(v[static_cast<std::size_t>(i)]) : std::string("?"); };
    LegitimacyCheck out;
    switch (o.fail) {
        case Fail::None: {
            LegitimacyWitness w;
            for (std::size_t i = 0; i < merge.size(); ++i) w.merge.emplace(xa[i], ya[static_cast<std::size_t>(merge[i])]);
            for (std::size_t i = 0; i < split.size(); ++i) w.split.emplace(yo[i], xo[static_cast<std::size_t>(split[i])]);
            out.witness = std::move(w);
            break;
        }
        case Fail::Letters: out.failure = "letter sets differ"; break;
        case Fail::AndUnmapped:
            out.failure = "Condition &: occurrence " + at(xa, o.culprit) + " of the source merges into no occurrence of the target";
            break;
        case Fail::AndNotOnto:
            out.failure = o.culprit < 0 ? "Condition &: the target has more occurrences of & than the source"
                                        : "Condition &: nothing merges into occurrence " + at(ya, o.culprit) + " of the target";
            break;
        case Fail::AndConcat:
            out.failure = "Condition &: flanks of occurrence " + at(ya, o.culprit) + " of the target are not the concatenation of the merged flanks";
            break;
        case Fail::OrUnmapped:
            out.failure = "Condition |: occurrence " + at(yo, o.culprit) + " of the target splits no occurrence of the source";
            break;
        case Fail::OrNotOnto:
            out.failure = o.culprit < 0 ? "Condition |: the source has more occurrences of | than the target"
                                        : "Condition |: occurrence " + at(xo, o.culprit) + " of the source is split into nothing";
            break;
        case Fail::OrConcat:
            out.failure = "Condition |: flanks of occurrence " + at(xo, o.culprit) + " of the source are not the concatenation of its parts";
            break;
    }
    return out;
}

std::pair<FormSequence, FormSequence> interpolate_or(const FormSequence& x1, const FormSequence& x2,
                                                     const FormSequence& y) {
    const FormSequence x = FormSequence::node(Conn::Or, {x1, x2});
    if (!check_legitimate(x, y)) throw NotLegitimate("(" + to_string(x) + ", " + to_string(y) + ") is not legitimate");
    FormSequence z1 = delete_letters(y, letter_set(x2));
    FormSequence z2 = delete_letters(y, letter_set(x1));
    if (!check_legitimate(x1, z1) || !check_legitimate(x2, z2) ||
        !check_legitimate(FormSequence::node(Conn::Or, {z1, z2}), y))
        throw Error("interpolation produced an illegitimate pair");
    return {z1, z2};
}

std::pair<FormSequence, FormSequence> interpolate_and(const FormSequence& x, const FormSequence& y1,
                                                      const FormSequence& y2) {
    const FormSequence y = FormSequence::node(Conn::And, {y1, y2});
    if (!check_legitimate(x, y)) throw NotLegitimate("(" + to_string(x) + ", " + to_string(y) + ") is not legitimate");
    FormSequence z1 = delete_letters(x, letter_set(y2));
    FormSequence z2 = delete_letters(x, letter_set(y1));
    if (!check_legitimate(z1, y1) || !check_legitimate(z2, y2) ||
        !check_legitimate(x, FormSequence::node(Conn::And, {z1, z2})))
        throw Error("interpolation produced an illegitimate pair");
    return {z1, z2};
}

ArrowTerm synthesize(const FormSequence& x, const FormSequence& y) {
    auto check = check_legitimate(x, y);
    if (!check) throw NotLegitimate("(" + to_string(x) + ", " + to_string(y) + ") is not legitimate: " + check.failure);
    return simplify_identities(synth(x, y));
}

std::vector<CkStep> ck_steps(const FormSequence& x) {
    std::vector<CkStep> out;
    std::vector<std::vector<std::size_t>> ors;
    std::vector<std::size_t> path;
    collect_or_nodes(x, path, ors);
    for (const auto& p : ors) {
        const FormSequence& v = node_at(x, p);
        const auto& kids = v.children();
        for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
            const FormSequence& u = kids[i];
            const FormSequence& w = kids[i + 1];
            if (u.is_leaf() || w.is_leaf()) continue;
            for (std::size_t a = 0; a + 1 < u.children().size(); ++a) {
                for (std::size_t c = 0; c + 1 < w.children().size(); ++c) {
                    const FormSequence A = slice(u, 0, a + 1), B = slice(u, a + 1, u.children().size());
                    const FormSequence C = slice(w, 0, c + 1), D = slice(w, c + 1, w.children().size());
                    auto make = [&](const FormSequence& node) -> Rewritten {
                        const auto& ks = node.children();
                        std::vector<FormSequence> next(ks.begin(), ks.begin() + static_cast<std::ptrdiff_t>(i));
                        next.push_back(FormSequence::node(Conn::And, {FormSequence::node(Conn::Or, {A, C}),
                                                                      FormSequence::node(Conn::Or, {B, D})}));
                        next.insert(next.end(), ks.begin() + static_cast<std::ptrdiff_t>(i + 2), ks.end());
                        ArrowTerm t = ArrowTerm::prim(GenKind::Ck, {rep(A), rep(B), rep(C), rep(D)});
                        if (i > 0) t = ArrowTerm::disj_par(ArrowTerm::id(rep(slice(node, 0, i))), t);
                        if (i + 2 < ks.size()) t = ArrowTerm::disj_par(t, ArrowTerm::id(rep(slice(node, i + 2, ks.size()))));
                        return {FormSequence::node(Conn::Or, std::move(next)), t};
                    };
                    Rewritten r = in_context(x, p, 0, make);
                    out.push_back({r.result, r.factor});
                }
            }
        }
    }
    return out;
}

bool exists_bfs(const FormSequence& x, const FormSequence& y) {
    require_diversified(x);
    require_diversified(y);
    if (letter_set(x) != letter_set(y)) return false;
    const std::string goal = to_string(y);
    std::unordered_set<std::string> seen{to_string(x)};
    std::deque<FormSequence> frontier{x};
    while (!frontier.empty()) {
        FormSequence cur = frontier.front();
        frontier.pop_front();
        if (to_string(cur) == goal) return true;
        for (auto& step : ck_steps(cur))
            if (seen.insert(to_string(step.result)).second) frontier.push_back(step.result);
    }
    return false;
}

}  // namespace intermute
