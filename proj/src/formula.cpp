#include "intermute/formula.hpp"

#include <functional>
#include <set>

#include "intermute/error.hpp"

namespace intermute {

struct Formula::Node {
    Kind kind;
    std::string name;
    std::size_t size;
    std::size_t letter_count;
    std::size_t hash;
    std::optional<Formula> left_view;
    std::optional<Formula> right_view;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::letter(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Letter;
    n->hash = mix(1, std::hash<std::string>{}(name));
    n->name = std::move(name);
    n->size = 1;
    n->letter_count = 1;
    return Formula(std::move(n));
}

Formula Formula::top() {
    static const Formula t = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Top;
        n->size = 1;
        n->letter_count = 0;
        n->hash = 2;
        return Formula(std::move(n));
    }();
    return t;
}

Formula Formula::bot() {
    static const Formula b = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Bot;
        n->size = 1;
        n->letter_count = 0;
        n->hash = 3;
        return Formula(std::move(n));
    }();
    return b;
}

Formula Formula::unit(Unit u) { return u == Unit::Top ? top() : bot(); }

Formula Formula::binary(Conn c, Formula left, Formula right) {
    auto n = std::make_shared<Node>();
    n->kind = c == Conn::And ? Kind::Conj : Kind::Disj;
    n->size = 1 + left.size() + right.size();
    n->letter_count = left.letter_count() + right.letter_count();
    n->hash = mix(mix(c == Conn::And ? 5 : 7, left.hash()), right.hash());
    n->left_view = std::move(left);
    n->right_view = std::move(right);
    return Formula(std::move(n));
}

Formula Formula::conj(Formula left, Formula right) { return binary(Conn::And, std::move(left), std::move(right)); }
Formula Formula::disj(Formula left, Formula right) { return binary(Conn::Or, std::move(left), std::move(right)); }

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

Conn Formula::conn() const {
    if (!is_binary()) throw PreconditionViolated("conn() of a non-binary formula");
    return node_->kind == Kind::Conj ? Conn::And : Conn::Or;
}

Unit Formula::unit_value() const {
    if (!is_unit()) throw PreconditionViolated("unit_value() of a non-unit formula");
    return node_->kind == Kind::Top ? Unit::Top : Unit::Bot;
}

const std::string& Formula::name() const {
    if (!is_letter()) throw PreconditionViolated("name() of a non-letter formula");
    return node_->name;
}

const Formula& Formula::left() const {
    if (!is_binary()) throw PreconditionViolated("left() of a non-binary formula");
    return *node_->left_view;
}

const Formula& Formula::right() const {
    if (!is_binary()) throw PreconditionViolated("right() of a non-binary formula");
    return *node_->right_view;
}

std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::letter_count() const noexcept { return node_->letter_count; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Formula::Kind::Letter: return a.name() == b.name();
        case Formula::Kind::Top:
        case Formula::Kind::Bot: return true;
        default: return a.left() == b.left() && a.right() == b.right();
    }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    switch (a.kind()) {
        case Formula::Kind::Letter: return a.name() <=> b.name();
        case Formula::Kind::Top:
        case Formula::Kind::Bot: return std::strong_ordering::equal;
        default:
            if (auto c = a.left() <=> b.left(); c != 0) return c;
            return a.right() <=> b.right();
    }
}

namespace {

void print(const Formula& f, std::string& out, bool nested) {
    switch (f.kind()) {
        case Formula::Kind::Letter: out += f.name(); return;
        case Formula::Kind::Top: out += 'T'; return;
        case Formula::Kind::Bot: out += 'F'; return;
        default: break;
    }
    if (nested) out += '(';
    print(f.left(), out, true);
    out += symbol(f.conn());
    print(f.right(), out, true);
    if (nested) out += ')';
}

template <class Visit>
void for_each_letter(const Formula& f, Visit&& visit) {
    if (f.is_letter()) {
        visit(f.name());
    } else if (f.is_binary()) {
        for_each_letter(f.left(), visit);
        for_each_letter(f.right(), visit);
    }
}

}  // namespace

std::string to_string(const Formula& f) {
    std::string out;
    print(f, out, false);
    return out;
}

std::map<std::string, std::size_t> letters(const Formula& f) {
    std::map<std::string, std::size_t> out;
    for_each_letter(f, [&](const std::string& p) { ++out[p]; });
    return out;
}

std::vector<std::string> letter_sequence(const Formula& f) {
    std::vector<std::string> out;
    for_each_letter(f, [&](const std::string& p) { out.push_back(p); });
    return out;
}

bool is_letterless(const Formula& f) { return f.letter_count() == 0; }

bool has_units(const Formula& f) { return contains_unit(f, Unit::Top) || contains_unit(f, Unit::Bot); }

bool is_diversified(const Formula& f) {
    for (const auto& [p, n] : letters(f))
        if (n > 1) return false;
    return true;
}

std::size_t count_conn(const Formula& f, Conn c) {
    if (!f.is_binary()) return 0;
    return (f.is(c) ? 1 : 0) + count_conn(f.left(), c) + count_conn(f.right(), c);
}

Formula dual(const Formula& f) {
    if (f.is_letter()) return f;
    if (f.is_unit()) return Formula::unit(dual(f.unit_value()));
    return Formula::binary(dual(f.conn()), dual(f.left()), dual(f.right()));
}

Formula normal_form(const Formula& f) {
    if (!f.is_binary()) return f;
    const Formula a = normal_form(f.left());
    const Formula b = normal_form(f.right());
    if (a.is_unit() && b.is_unit() && a.unit_value() == b.unit_value()) return a;
    const Unit absorbed = neutral_unit(f.conn());
    if (b.is(absorbed) && !a.is(absorbed)) return a;
    if (a.is(absorbed) && !b.is(absorbed)) return b;
    return Formula::binary(f.conn(), a, b);
}

bool contains_unit(const Formula& f, Unit u) {
    if (f.is_unit()) return f.unit_value() == u;
    if (f.is_binary()) return contains_unit(f.left(), u) || contains_unit(f.right(), u);
    return false;
}

bool is_pure(const Formula& f, Unit u) { return !contains_unit(normal_form(f), u); }

bool is_pure(const Formula& f) { return is_pure(f, Unit::Top) && is_pure(f, Unit::Bot); }

Diversified diversify(const Formula& f) {
    const auto counts = letters(f);
    std::set<std::string> used;
    for (const auto& [p, n] : counts) used.insert(p);

    std::map<std::string, std::string> separator;
    for (const auto& [p, n] : counts) {
        if (n < 2) continue;
        std::string sep = "_";
        auto clashes = [&] {
            for (std::size_t k = 1; k <= n; ++k)
                if (used.count(p + sep + std::to_string(k))) return true;
            return false;
        };
        while (clashes()) sep += '_';
        for (std::size_t k = 1; k <= n; ++k) used.insert(p + sep + std::to_string(k));
        separator[p] = sep;
    }

    Diversified out{f, {}};
    std::map<std::string, std::size_t> seen;
    std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
        if (g.is_letter()) {
            const std::string& p = g.name();
            auto it = separator.find(p);
            std::string fresh = it == separator.end() ? p : p + it->second + std::to_string(++seen[p]);
            out.origin[fresh] = p;
            return Formula::letter(std::move(fresh));
        }
        if (g.is_binary()) {
            Formula l = go(g.left());
            return Formula::binary(g.conn(), std::move(l), go(g.right()));
        }
        return g;
    };
    out.formula = go(f);
    return out;
}

Formula rename_letters(const Formula& f, const std::map<std::string, std::string>& renaming) {
    if (f.is_letter()) {
        auto it = renaming.find(f.name());
        return it == renaming.end() ? f : Formula::letter(it->second);
    }
    if (f.is_binary())
        return Formula::binary(f.conn(), rename_letters(f.left(), renaming), rename_letters(f.right(), renaming));
    return f;
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& assignment) {
    if (f.is_letter()) {
        auto it = assignment.find(f.name());
        return it == assignment.end() ? f : it->second;
    }
    if (f.is_binary())
        return Formula::binary(f.conn(), substitute(f.left(), assignment), substitute(f.right(), assignment));
    return f;
}

std::optional<Formula> subformula_at(const Formula& f, const OccurrencePath& path) {
    Formula cur = f;
    for (Side s : path) {
        if (!cur.is_binary()) return std::nullopt;
        cur = s == Side::Left ? cur.left() : cur.right();
    }
    return cur;
}

}  // namespace intermute
