#include "intermute/form_sequence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "intermute/error.hpp"

namespace intermute {

struct FormSequence::Node {
    bool leaf;
    std::string letter;
    Conn conn;
    std::vector<FormSequence> children;
    std::size_t letter_count;
    std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

FormSequence FormSequence::leaf(std::string letter) {
    auto n = std::make_shared<Node>();
    n->leaf = true;
    n->conn = Conn::And;
    n->hash = mix(11, std::hash<std::string>{}(letter));
    n->letter = std::move(letter);
    n->letter_count = 1;
    return FormSequence(std::move(n));
}

FormSequence FormSequence::node(Conn c, std::vector<FormSequence> children) {
    if (children.empty()) throw PreconditionViolated("form sequence node without children");
    std::vector<FormSequence> flat;
    flat.reserve(children.size());
    for (auto& ch : children) {
        if (!ch.is_leaf() && ch.conn() == c)
            flat.insert(flat.end(), ch.children().begin(), ch.children().end());
        else
            flat.push_back(std::move(ch));
    }
    if (flat.size() == 1) return flat.front();
    auto n = std::make_shared<Node>();
    n->leaf = false;
    n->conn = c;
    n->letter_count = 0;
    n->hash = c == Conn::And ? 13 : 17;
    for (const auto& ch : flat) {
        n->letter_count += ch.letter_count();
        n->hash = mix(n->hash, ch.hash());
    }
    n->children = std::move(flat);
    return FormSequence(std::move(n));
}

bool FormSequence::is_leaf() const noexcept { return node_->leaf; }

const std::string& FormSequence::letter() const {
    if (!is_leaf()) throw PreconditionViolated("letter() of a form sequence node");
    return node_->letter;
}

Conn FormSequence::conn() const {
    if (is_leaf()) throw PreconditionViolated("conn() of a form sequence leaf");
    return node_->conn;
}

const std::vector<FormSequence>& FormSequence::children() const {
    if (is_leaf()) throw PreconditionViolated("children() of a form sequence leaf");
    return node_->children;
}

std::size_t FormSequence::letter_count() const noexcept { return node_->letter_count; }
std::size_t FormSequence::hash() const noexcept { return node_->hash; }

bool operator==(const FormSequence& a, const FormSequence& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.letter_count() != b.letter_count() || a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return a.letter() == b.letter();
    return a.conn() == b.conn() && a.children() == b.children();
}

std::strong_ordering operator<=>(const FormSequence& a, const FormSequence& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_leaf()) return a.letter() <=> b.letter();
    if (auto c = a.conn() <=> b.conn(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.children().begin(), a.children().end(), b.children().begin(),
                                                  b.children().end());
}

namespace {

void print(const FormSequence& x, std::string& out, bool nested) {
    if (x.is_leaf()) {
        out += x.letter();
        return;
    }
    if (nested) out += '(';
    for (std::size_t i = 0; i < x.children().size(); ++i) {
        if (i) out += symbol(x.conn());
        print(x.children()[i], out, true);
    }
    if (nested) out += ')';
}

void collect_letters(const FormSequence& x, LetterSeq& out) {
    if (x.is_leaf()) {
        out.push_back(x.letter());
        return;
    }
    for (const auto& ch : x.children()) collect_letters(ch, out);
}

}  // namespace

std::string to_string(const FormSequence& x) {
    std::string out;
    print(x, out, false);
    return out;
}

FormSequence strictify(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Letter: return FormSequence::leaf(f.name());
        case Formula::Kind::Top:
        case Formula::Kind::Bot: throw HasUnits("form sequences are constant-free: " + to_string(f));
        default: return FormSequence::node(f.conn(), {strictify(f.left()), strictify(f.right())});
    }
}

Formula to_formula(const FormSequence& x) {
    if (x.is_leaf()) return Formula::letter(x.letter());
    Formula acc = to_formula(x.children().front());
    for (std::size_t i = 1; i < x.children().size(); ++i)
        acc = Formula::binary(x.conn(), acc, to_formula(x.children()[i]));
    return acc;
}

LetterSeq letter_sequence(const FormSequence& x) {
    LetterSeq out;
    collect_letters(x, out);
    return out;
}

std::set<std::string> letter_set(const FormSequence& x) {
    auto seq = letter_sequence(x);
    return {seq.begin(), seq.end()};
}

bool is_diversified(const FormSequence& x) { return letter_set(x).size() == x.letter_count(); }

std::size_t count_conn(const FormSequence& x, Conn c) {
    if (x.is_leaf()) return 0;
    std::size_t n = x.conn() == c ? x.children().size() - 1 : 0;
    for (const auto& ch : x.children()) n += count_conn(ch, c);
    return n;
}

namespace {

struct OrderKey {
    std::string smallest;
    std::size_t size;
    std::string text;
    auto operator<=>(const OrderKey&) const = default;
};

OrderKey order_key(const FormSequence& x) {
    auto seq = letter_sequence(x);
    return {*std::min_element(seq.begin(), seq.end()), x.letter_count(), to_string(x)};
}

}  // namespace

FormSequence canonical_order(const FormSequence& x) {
    if (x.is_leaf()) return x;
    std::vector<std::pair<OrderKey, FormSequence>> keyed;
    for (const auto& ch : x.children()) {
        FormSequence c = canonical_order(ch);
        keyed.emplace_back(order_key(c), c);
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<FormSequence> kids;
    for (auto& [k, c] : keyed) kids.push_back(std::move(c));
    return FormSequence::node(x.conn(), std::move(kids));
}

FormSet::FormSet(const FormSequence& x) : seq_(canonical_order(x)) {}

std::string to_string(const FormSet& x) { return to_string(x.sequence()); }

std::string to_string(const ConnOccurrence& x) {
    std::string s(1, symbol(x.conn));
    s += '@';
    if (x.node_path.empty()) s += "root";
    for (std::size_t i = 0; i < x.node_path.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(x.node_path[i]);
    }
    s += '#' + std::to_string(x.gap);
    return s;
}

namespace {

void collect_occurrences(const FormSequence& x, Conn c, std::vector<std::size_t>& path,
                         std::vector<ConnOccurrence>& out) {
    if (x.is_leaf()) return;
    const auto& kids = x.children();
    for (std::size_t i = 0; i < kids.size(); ++i) {
        path.push_back(i);
        collect_occurrences(kids[i], c, path, out);
        path.pop_back();
        if (i + 1 < kids.size() && x.conn() == c) out.push_back({c, path, i});
    }
}

const FormSequence& resolve(const FormSequence& x, const ConnOccurrence& occ) {
    const FormSequence* cur = &x;
    for (std::size_t i : occ.node_path) {
        if (cur->is_leaf() || i >= cur->children().size())
            throw BadOccurrence("occurrence " + to_string(occ) + " does not resolve in " + to_string(x));
        cur = &cur->children()[i];
    }
    if (cur->is_leaf() || cur->conn() != occ.conn || occ.gap + 1 >= cur->children().size())
        throw BadOccurrence("occurrence " + to_string(occ) + " does not resolve in " + to_string(x));
    return *cur;
}

}  // namespace

std::vector<ConnOccurrence> occurrences(const FormSequence& x, Conn c) {
    std::vector<ConnOccurrence> out;
    std::vector<std::size_t> path;
    collect_occurrences(x, c, path, out);
    return out;
}

const FormSequence& node_at(const FormSequence& x, const std::vector<std::size_t>& path) {
    const FormSequence* cur = &x;
    for (std::size_t i : path) {
        if (cur->is_leaf() || i >= cur->children().size()) throw BadOccurrence("node path does not resolve");
        cur = &cur->children()[i];
    }
    return *cur;
}

std::pair<FormSequence, FormSequence> sides(const FormSequence& x, const ConnOccurrence& occ) {
    const FormSequence& n = resolve(x, occ);
    const auto& kids = n.children();
    std::vector<FormSequence> a(kids.begin(), kids.begin() + static_cast<std::ptrdiff_t>(occ.gap + 1));
    std::vector<FormSequence> b(kids.begin() + static_cast<std::ptrdiff_t>(occ.gap + 1), kids.end());
    return {FormSequence::node(n.conn(), std::move(a)), FormSequence::node(n.conn(), std::move(b))};
}

namespace {

// Concatenating side: the connective whose nodes concatenate the sequence.
LetterSeq side_seq(const FormSequence& x, Conn concat, bool first) {
    if (x.is_leaf()) return {x.letter()};
    const auto& kids = x.children();
    if (x.conn() == concat) {
        LetterSeq out;
        for (const auto& ch : kids) {
            auto s = side_seq(ch, concat, first);
            out.insert(out.end(), s.begin(), s.end());
        }
        return out;
    }
    return side_seq(first ? kids.front() : kids.back(), concat, first);
}

}  // namespace

LetterSeq top_seq(const FormSequence& x) { return side_seq(x, Conn::And, true); }
LetterSeq bottom_seq(const FormSequence& x) { return side_seq(x, Conn::And, false); }
LetterSeq left_seq(const FormSequence& x) { return side_seq(x, Conn::Or, true); }
LetterSeq right_seq(const FormSequence& x) { return side_seq(x, Conn::Or, false); }

TBLR tblr(const FormSequence& x) { return {top_seq(x), bottom_seq(x), left_seq(x), right_seq(x)}; }

std::pair<LetterSeq, LetterSeq> flank(const FormSequence& x, const ConnOccurrence& occ) {
    const FormSequence& n = resolve(x, occ);
    const FormSequence& before = n.children()[occ.gap];
    const FormSequence& after = n.children()[occ.gap + 1];
    if (occ.conn == Conn::And) return {left_seq(after), right_seq(before)};
    return {top_seq(after), bottom_seq(before)};
}

namespace {

std::optional<FormSequence> erase(const FormSequence& x, const std::set<std::string>& letters) {
    if (x.is_leaf()) {
        if (letters.count(x.letter())) return std::nullopt;
        return x;
    }
    std::vector<FormSequence> kept;
    for (const auto& ch : x.children())
        if (auto e = erase(ch, letters)) kept.push_back(std::move(*e));
    if (kept.empty()) return std::nullopt;
    return FormSequence::node(x.conn(), std::move(kept));
}

void require_diversified(const FormSequence& x) {
    if (!is_diversified(x)) throw NotDiversified("form sequence is not diversified: " + to_string(x));
}

}  // namespace

FormSequence delete_letters(const FormSequence& x, const std::set<std::string>& letters) {
    require_diversified(x);
    auto e = erase(x, letters);
    if (!e) throw WouldEraseAll("deleting every letter of " + to_string(x));
    return *e;
}

FormSet delete_letters(const FormSet& x, const std::set<std::string>& letters) {
    return FormSet(delete_letters(x.sequence(), letters));
}

LetterRelation transitive_closure(const LetterRelation& r) {
    LetterRelation out = r;
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<std::string, std::string>> add;
        for (const auto& [a, b] : out)
            for (auto it = out.lower_bound({b, std::string()}); it != out.end() && it->first == b; ++it)
                if (!out.count({a, it->second})) add.emplace_back(a, it->second);
        for (auto& p : add) grew |= out.insert(std::move(p)).second;
    }
    return out;
}

Adjacency above_below(const FormSequence& x) {
    require_diversified(x);
    Adjacency adj;
    for (const auto& y : occurrences(x, Conn::Or)) {
        auto [t, b] = flank(x, y);
        for (const auto& q : b)
            for (const auto& p : t) adj.above.emplace(q, p);
    }
    for (const auto& occ : occurrences(x, Conn::And)) {
        auto [l, r] = flank(x, occ);
        for (const auto& q : r)
            for (const auto& p : l) adj.left_of.emplace(q, p);
    }
    adj.above_closure = transitive_closure(adj.above);
    adj.left_of_closure = transitive_closure(adj.left_of);
    return adj;
}

namespace {

// Letters absent from every first (or second) flank of the occurrences of c, ordered by the closure.
LetterSeq border(const FormSequence& x, Conn c, bool first_flank, const LetterRelation& order) {
    std::set<std::string> excluded;
    for (const auto& occ : occurrences(x, c)) {
        auto f = flank(x, occ);
        const auto& s = first_flank ? f.first : f.second;
        excluded.insert(s.begin(), s.end());
    }
    LetterSeq members;
    for (const auto& p : letter_sequence(x))
        if (!excluded.count(p)) members.push_back(p);
    // Topological order; text order breaks ties.
    LetterSeq out;
    std::vector<bool> used(members.size(), false);
    for (std::size_t round = 0; round < members.size(); ++round) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (used[i]) continue;
            bool minimal = true;
            for (std::size_t j = 0; j < members.size() && minimal; ++j)
                if (!used[j] && j != i && order.count({members[j], members[i]})) minimal = false;
            if (minimal) {
                used[i] = true;
                out.push_back(members[i]);
                break;
            }
        }
    }
    return out;
}

}  // namespace

Borders borders(const FormSequence& x) {
    const Adjacency adj = above_below(x);
    return {border(x, Conn::And, true, adj.above_closure), border(x, Conn::And, false, adj.above_closure),
            border(x, Conn::Or, true, adj.left_of_closure), border(x, Conn::Or, false, adj.left_of_closure)};
}

std::vector<std::vector<ConnOccurrence>> transversals(const FormSequence& x) {
    const Adjacency adj = above_below(x);
    const Borders b = borders(x);
    const std::set<std::string> left(b.left.begin(), b.left.end());
    const std::set<std::string> right(b.right.begin(), b.right.end());
    const auto ors = occurrences(x, Conn::Or);
    std::vector<LetterSeq> tops;
    for (const auto& y : ors) tops.push_back(flank(x, y).first);

    std::vector<std::vector<ConnOccurrence>> out;
    std::vector<std::size_t> chain;
    std::function<void(std::size_t)> extend = [&](std::size_t i) {
        chain.push_back(i);
        if (right.count(tops[i].back())) {
            std::vector<ConnOccurrence> t;
            for (std::size_t k : chain) t.push_back(ors[k]);
            out.push_back(std::move(t));
        }
        for (std::size_t j = 0; j < ors.size(); ++j)
            if (std::find(chain.begin(), chain.end(), j) == chain.end() &&
                adj.left_of.count({tops[i].back(), tops[j].front()}))
                extend(j);
        chain.pop_back();
    };
    for (std::size_t i = 0; i < ors.size(); ++i)
        if (left.count(tops[i].front())) extend(i);
    return out;
}

}  // namespace intermute
