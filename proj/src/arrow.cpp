#include "intermute/arrow.hpp"

#include <array>
#include <functional>

#include "intermute/error.hpp"
#include "intermute/form_sequence.hpp"

namespace intermute {

namespace {

struct GenInfo {
    GenKind kind;
    std::string_view name;
    std::size_t arity;
};

constexpr std::array<GenInfo, gen_kind_count> gen_table{{
    {GenKind::HbPlus, "hb+", 3},     {GenKind::HbMinus, "hb-", 3},
    {GenKind::VbPlus, "vb+", 3},     {GenKind::VbMinus, "vb-", 3},
    {GenKind::Hc, "hc", 2},          {GenKind::Vc, "vc", 2},
    {GenKind::HdPlus, "hd+", 1},     {GenKind::HdMinus, "hd-", 1},
    {GenKind::HsPlus, "hs+", 1},     {GenKind::HsMinus, "hs-", 1},
    {GenKind::VdPlus, "vd+", 1},     {GenKind::VdMinus, "vd-", 1},
    {GenKind::VsPlus, "vs+", 1},     {GenKind::VsMinus, "vs-", 1},
    {GenKind::HwBotMinus, "hwb-", 0}, {GenKind::HwBotPlus, "hwb+", 0},
    {GenKind::VwTopPlus, "vwt+", 0}, {GenKind::VwTopMinus, "vwt-", 0},
    {GenKind::Kappa, "kappa", 0},
    {GenKind::Ck, "ck", 4},
    {GenKind::Hw, "hw", 1},          {GenKind::Vw, "vw", 1},
    {GenKind::Hk1, "hk1", 2},        {GenKind::Hk2, "hk2", 2},
    {GenKind::Vk1, "vk1", 2},        {GenKind::Vk2, "vk2", 2},
}};

const GenInfo& info(GenKind k) { return gen_table[static_cast<std::size_t>(k)]; }

}  // namespace

std::string_view gen_name(GenKind k) { return info(k).name; }
std::size_t gen_arity(GenKind k) { return info(k).arity; }

std::optional<GenKind> gen_from_name(std::string_view name) {
    for (const auto& g : gen_table)
        if (g.name == name) return g.kind;
    return std::nullopt;
}

const std::vector<GenKind>& all_gen_kinds() {
    static const std::vector<GenKind> all = [] {
        std::vector<GenKind> v;
        for (const auto& g : gen_table) v.push_back(g.kind);
        return v;
    }();
    return all;
}

Generator::Generator(GenKind kind, std::vector<Formula> args) : kind_(kind), args_(std::move(args)) {
    if (args_.size() != gen_arity(kind))
        throw ArityMismatch(std::string(gen_name(kind)) + " expects " + std::to_string(gen_arity(kind)) +
                            " indices, got " + std::to_string(args_.size()));
}

Type generator_type(const Generator& g) {
    using F = Formula;
    const auto& a = g.args();
    auto assoc = [&](Conn c) {
        return Type{F::binary(c, a[0], F::binary(c, a[1], a[2])), F::binary(c, F::binary(c, a[0], a[1]), a[2])};
    };
    auto flip = [](Type t) { return Type{t.target, t.source}; };
    const F top = F::top(), bot = F::bot();
    switch (g.kind()) {
        case GenKind::HbPlus: return assoc(Conn::And);
        case GenKind::HbMinus: return flip(assoc(Conn::And));
        case GenKind::VbPlus: return assoc(Conn::Or);
        case GenKind::VbMinus: return flip(assoc(Conn::Or));
        case GenKind::Hc: return {F::conj(a[0], a[1]), F::conj(a[1], a[0])};
        case GenKind::Vc: return {F::disj(a[0], a[1]), F::disj(a[1], a[0])};
        case GenKind::HdPlus: return {F::conj(a[0], top), a[0]};
        case GenKind::HdMinus: return {a[0], F::conj(a[0], top)};
        case GenKind::HsPlus: return {F::conj(top, a[0]), a[0]};
        case GenKind::HsMinus: return {a[0], F::conj(top, a[0])};
        case GenKind::VdPlus: return {F::disj(a[0], bot), a[0]};
        case GenKind::VdMinus: return {a[0], F::disj(a[0], bot)};
        case GenKind::VsPlus: return {F::disj(bot, a[0]), a[0]};
        case GenKind::VsMinus: return {a[0], F::disj(bot, a[0])};
        case GenKind::HwBotMinus: return {bot, F::conj(bot, bot)};
        case GenKind::HwBotPlus: return {F::conj(bot, bot), bot};
        case GenKind::VwTopPlus: return {F::disj(top, top), top};
        case GenKind::VwTopMinus: return {top, F::disj(top, top)};
        case GenKind::Kappa: return {bot, top};
        case GenKind::Ck:
            return {F::disj(F::conj(a[0], a[1]), F::conj(a[2], a[3])),
                    F::conj(F::disj(a[0], a[2]), F::disj(a[1], a[3]))};
        case GenKind::Hw: return {a[0], F::conj(a[0], a[0])};
        case GenKind::Vw: return {F::disj(a[0], a[0]), a[0]};
        case GenKind::Hk1: return {F::conj(a[0], a[1]), a[0]};
        case GenKind::Hk2: return {F::conj(a[0], a[1]), a[1]};
        case GenKind::Vk1: return {a[0], F::disj(a[0], a[1])};
        case GenKind::Vk2: return {a[1], F::disj(a[0], a[1])};
    }
    throw PreconditionViolated("unknown generator");
}

struct ArrowTerm::Node {
    Kind kind;
    std::optional<Formula> object;
    std::optional<Generator> gen;
    std::optional<ArrowTerm> first;   // after, or left
    std::optional<ArrowTerm> second;  // before, or right
    std::size_t size;
};

ArrowTerm ArrowTerm::id(Formula object) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Id;
    n->object = std::move(object);
    n->size = 1;
    return ArrowTerm(std::move(n));
}

ArrowTerm ArrowTerm::prim(Generator g) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Prim;
    n->gen = std::move(g);
    n->size = 1;
    return ArrowTerm(std::move(n));
}

ArrowTerm ArrowTerm::prim(GenKind k, std::vector<Formula> args) { return prim(Generator(k, std::move(args))); }

ArrowTerm ArrowTerm::compose(ArrowTerm after, ArrowTerm before) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Comp;
    n->size = 1 + after.size() + before.size();
    n->first = std::move(after);
    n->second = std::move(before);
    return ArrowTerm(std::move(n));
}

ArrowTerm ArrowTerm::par(Conn c, ArrowTerm left, ArrowTerm right) {
    auto n = std::make_shared<Node>();
    n->kind = c == Conn::And ? Kind::ConjPar : Kind::DisjPar;
    n->size = 1 + left.size() + right.size();
    n->first = std::move(left);
    n->second = std::move(right);
    return ArrowTerm(std::move(n));
}

ArrowTerm::Kind ArrowTerm::kind() const noexcept { return node_->kind; }

const Formula& ArrowTerm::object() const {
    if (!is_id()) throw PreconditionViolated("object() of a non-identity term");
    return *node_->object;
}

const Generator& ArrowTerm::generator() const {
    if (!is_prim()) throw PreconditionViolated("generator() of a non-primitive term");
    return *node_->gen;
}

const ArrowTerm& ArrowTerm::after() const {
    if (!is_comp()) throw PreconditionViolated("after() of a non-composite term");
    return *node_->first;
}

const ArrowTerm& ArrowTerm::before() const {
    if (!is_comp()) throw PreconditionViolated("before() of a non-composite term");
    return *node_->second;
}

Conn ArrowTerm::conn() const {
    if (!is_par()) throw PreconditionViolated("conn() of a non-parallel term");
    return kind() == Kind::ConjPar ? Conn::And : Conn::Or;
}

const ArrowTerm& ArrowTerm::left() const {
    if (!is_par()) throw PreconditionViolated("left() of a non-parallel term");
    return *node_->first;
}

const ArrowTerm& ArrowTerm::right() const {
    if (!is_par()) throw PreconditionViolated("right() of a non-parallel term");
    return *node_->second;
}

std::size_t ArrowTerm::size() const noexcept { return node_->size; }

bool operator==(const ArrowTerm& a, const ArrowTerm& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.size() != b.size()) return false;
    switch (a.kind()) {
        case ArrowTerm::Kind::Id: return a.object() == b.object();
        case ArrowTerm::Kind::Prim: return a.generator() == b.generator();
        default: return *a.node_->first == *b.node_->first && *a.node_->second == *b.node_->second;
    }
}

std::string to_string(const Generator& g) {
    std::string out(gen_name(g.kind()));
    if (g.args().empty()) return out;
    out += '{';
    for (std::size_t i = 0; i < g.args().size(); ++i) {
        if (i) out += ',';
        out += to_string(g.args()[i]);
    }
    out += '}';
    return out;
}

namespace {

void print(const ArrowTerm& f, std::string& out) {
    auto nested = [&](const ArrowTerm& g, bool wrap) {
        if (wrap) out += '(';
        print(g, out);
        if (wrap) out += ')';
    };
    switch (f.kind()) {
        case ArrowTerm::Kind::Id:
            out += "id{" + to_string(f.object()) + "}";
            return;
        case ArrowTerm::Kind::Prim:
            out += to_string(f.generator());
            return;
        case ArrowTerm::Kind::Comp:
            nested(f.after(), f.after().is_comp());
            out += " . ";
            nested(f.before(), false);
            return;
        default:
            nested(f.left(), f.left().is_comp() || f.left().is_par());
            out += ' ';
            out += symbol(f.conn());
            out += ' ';
            nested(f.right(), f.right().is_comp() || f.right().is_par());
            return;
    }
}

std::string path_string(const std::vector<int>& path) {
    std::string s = "/";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) s += '/';
        s += std::to_string(path[i]);
    }
    return s;
}

Type type_rec(const ArrowTerm& f, Objects mode, std::vector<int>& path) {
    switch (f.kind()) {
        case ArrowTerm::Kind::Id: return {f.object(), f.object()};
        case ArrowTerm::Kind::Prim: return generator_type(f.generator());
        case ArrowTerm::Kind::Comp: {
            path.push_back(1);
            Type before = type_rec(f.before(), mode, path);
            path.back() = 0;
            Type after = type_rec(f.after(), mode, path);
            path.pop_back();
            if (!objects_equal(before.target, after.source, mode))
                throw IllTyped("composition at " + path_string(path) + ": target " + to_string(before.target) +
                               " does not match source " + to_string(after.source));
            return {before.source, after.target};
        }
        default: {
            path.push_back(0);
            Type l = type_rec(f.left(), mode, path);
            path.back() = 1;
            Type r = type_rec(f.right(), mode, path);
            path.pop_back();
            return {Formula::binary(f.conn(), l.source, r.source), Formula::binary(f.conn(), l.target, r.target)};
        }
    }
}

}  // namespace

std::string to_string(const ArrowTerm& f) {
    std::string out;
    print(f, out);
    return out;
}

bool objects_equal(const Formula& a, const Formula& b, Objects mode) {
    if (a == b) return true;
    switch (mode) {
        case Objects::Formulas: return false;
        case Objects::FormSequences:
            if (has_units(a) || has_units(b)) return false;
            return strictify(a) == strictify(b);
        case Objects::FormSets:
            if (has_units(a) || has_units(b)) return false;
            return FormSet(strictify(a)) == FormSet(strictify(b));
    }
    return false;
}

Type type_of(const ArrowTerm& f, Objects mode) {
    std::vector<int> path;
    return type_rec(f, mode, path);
}

namespace {

void develop_into(const ArrowTerm& f, Objects mode, std::vector<ArrowTerm>& out) {
    switch (f.kind()) {
        case ArrowTerm::Kind::Id: return;
        case ArrowTerm::Kind::Prim: out.push_back(f); return;
        case ArrowTerm::Kind::Comp:
            develop_into(f.before(), mode, out);
            develop_into(f.after(), mode, out);
            return;
        default: {
            const Type lt = type_of(f.left(), mode);
            const Type rt = type_of(f.right(), mode);
            std::vector<ArrowTerm> left, right;
            develop_into(f.left(), mode, left);
            develop_into(f.right(), mode, right);
            for (auto& g : left) out.push_back(ArrowTerm::par(f.conn(), g, ArrowTerm::id(rt.source)));
            for (auto& g : right) out.push_back(ArrowTerm::par(f.conn(), ArrowTerm::id(lt.target), g));
            return;
        }
    }
}

}  // namespace

Development develop(const ArrowTerm& f, Objects mode) {
    Development d{type_of(f, mode).source, {}};
    develop_into(f, mode, d.factors);
    return d;
}

ArrowTerm compose_all(const Formula& source, const std::vector<ArrowTerm>& factors_in_order) {
    if (factors_in_order.empty()) return ArrowTerm::id(source);
    ArrowTerm acc = factors_in_order.front();
    for (std::size_t i = 1; i < factors_in_order.size(); ++i) acc = ArrowTerm::compose(factors_in_order[i], acc);
    return acc;
}

ArrowTerm simplify_identities(const ArrowTerm& f) {
    switch (f.kind()) {
        case ArrowTerm::Kind::Id:
        case ArrowTerm::Kind::Prim: return f;
        case ArrowTerm::Kind::Comp: {
            ArrowTerm a = simplify_identities(f.after());
            ArrowTerm b = simplify_identities(f.before());
            if (a.is_id()) return b;
            if (b.is_id()) return a;
            return ArrowTerm::compose(a, b);
        }
        default: {
            ArrowTerm l = simplify_identities(f.left());
            ArrowTerm r = simplify_identities(f.right());
            if (l.is_id() && r.is_id()) return ArrowTerm::id(Formula::binary(f.conn(), l.object(), r.object()));
            return ArrowTerm::par(f.conn(), l, r);
        }
    }
}

namespace {

template <class Visit>
void for_each_generator(const ArrowTerm& f, Visit&& visit) {
    switch (f.kind()) {
        case ArrowTerm::Kind::Id: return;
        case ArrowTerm::Kind::Prim: visit(f.generator()); return;
        case ArrowTerm::Kind::Comp:
            for_each_generator(f.before(), visit);
            for_each_generator(f.after(), visit);
            return;
        default:
            for_each_generator(f.left(), visit);
            for_each_generator(f.right(), visit);
            return;
    }
}

ArrowTerm map_objects(const ArrowTerm& f, const std::function<Formula(const Formula&)>& m) {
    switch (f.kind()) {
        case ArrowTerm::Kind::Id: return ArrowTerm::id(m(f.object()));
        case ArrowTerm::Kind::Prim: {
            std::vector<Formula> args;
            for (const auto& a : f.generator().args()) args.push_back(m(a));
            return ArrowTerm::prim(f.generator().kind(), std::move(args));
        }
        case ArrowTerm::Kind::Comp: return ArrowTerm::compose(map_objects(f.after(), m), map_objects(f.before(), m));
        default: return ArrowTerm::par(f.conn(), map_objects(f.left(), m), map_objects(f.right(), m));
    }
}

}  // namespace

std::size_t count_generators(const ArrowTerm& f) {
    std::size_t n = 0;
    for_each_generator(f, [&](const Generator&) { ++n; });
    return n;
}

std::size_t count_generators(const ArrowTerm& f, GenKind k) {
    std::size_t n = 0;
    for_each_generator(f, [&](const Generator& g) { n += g.kind() == k; });
    return n;
}

std::vector<Generator> generators_of(const ArrowTerm& f) {
    std::vector<Generator> out;
    for_each_generator(f, [&](const Generator& g) { out.push_back(g); });
    return out;
}

bool is_identity_term(const ArrowTerm& f) { return count_generators(f) == 0; }

ArrowTerm rename_letters(const ArrowTerm& f, const std::map<std::string, std::string>& renaming) {
    return map_objects(f, [&](const Formula& a) { return rename_letters(a, renaming); });
}

ArrowTerm substitute(const ArrowTerm& f, const std::map<std::string, Formula>& assignment) {
    return map_objects(f, [&](const Formula& a) { return substitute(a, assignment); });
}

bool is_invertible(GenKind k) {
    switch (k) {
        case GenKind::Kappa:
        case GenKind::Ck:
        case GenKind::Hw:
        case GenKind::Vw:
        case GenKind::Hk1:
        case GenKind::Hk2:
        case GenKind::Vk1:
        case GenKind::Vk2: return false;
        default: return true;
    }
}

namespace {

Generator inverse(const Generator& g) {
    const auto& a = g.args();
    switch (g.kind()) {
        case GenKind::HbPlus: return {GenKind::HbMinus, a};
        case GenKind::HbMinus: return {GenKind::HbPlus, a};
        case GenKind::VbPlus: return {GenKind::VbMinus, a};
        case GenKind::VbMinus: return {GenKind::VbPlus, a};
        case GenKind::Hc: return {GenKind::Hc, {a[1], a[0]}};
        case GenKind::Vc: return {GenKind::Vc, {a[1], a[0]}};
        case GenKind::HdPlus: return {GenKind::HdMinus, a};
        case GenKind::HdMinus: return {GenKind::HdPlus, a};
        case GenKind::HsPlus: return {GenKind::HsMinus, a};
        case GenKind::HsMinus: return {GenKind::HsPlus, a};
        case GenKind::VdPlus: return {GenKind::VdMinus, a};
        case GenKind::VdMinus: return {GenKind::VdPlus, a};
        case GenKind::VsPlus: return {GenKind::VsMinus, a};
        case GenKind::VsMinus: return {GenKind::VsPlus, a};
        case GenKind::HwBotMinus: return {GenKind::HwBotPlus, a};
        case GenKind::HwBotPlus: return {GenKind::HwBotMinus, a};
        case GenKind::VwTopPlus: return {GenKind::VwTopMinus, a};
        case GenKind::VwTopMinus: return {GenKind::VwTopPlus, a};
        default: throw PreconditionViolated(std::string(gen_name(g.kind())) + " has no inverse");
    }
}

}  // namespace

ArrowTerm inverse(const ArrowTerm& f) {
    switch (f.kind()) {
        case ArrowTerm::Kind::Id: return f;
        case ArrowTerm::Kind::Prim: return ArrowTerm::prim(inverse(f.generator()));
        case ArrowTerm::Kind::Comp: return ArrowTerm::compose(inverse(f.before()), inverse(f.after()));
        default: return ArrowTerm::par(f.conn(), inverse(f.left()), inverse(f.right()));
    }
}

Generator dual(const Generator& g) {
    std::vector<Formula> a;
    for (const auto& x : g.args()) a.push_back(dual(x));
    auto make = [&](GenKind k) { return Generator(k, a); };
    switch (g.kind()) {
        case GenKind::HbPlus: return make(GenKind::VbMinus);
        case GenKind::HbMinus: return make(GenKind::VbPlus);
        case GenKind::VbPlus: return make(GenKind::HbMinus);
        case GenKind::VbMinus: return make(GenKind::HbPlus);
        case GenKind::Hc: return Generator(GenKind::Vc, {a[1], a[0]});
        case GenKind::Vc: return Generator(GenKind::Hc, {a[1], a[0]});
        case GenKind::HdPlus: return make(GenKind::VdMinus);
        case GenKind::HdMinus: return make(GenKind::VdPlus);
        case GenKind::HsPlus: return make(GenKind::VsMinus);
        case GenKind::HsMinus: return make(GenKind::VsPlus);
        case GenKind::VdPlus: return make(GenKind::HdMinus);
        case GenKind::VdMinus: return make(GenKind::HdPlus);
        case GenKind::VsPlus: return make(GenKind::HsMinus);
        case GenKind::VsMinus: return make(GenKind::HsPlus);
        case GenKind::HwBotMinus: return make(GenKind::VwTopPlus);
        case GenKind::HwBotPlus: return make(GenKind::VwTopMinus);
        case GenKind::VwTopPlus: return make(GenKind::HwBotMinus);
        case GenKind::VwTopMinus: return make(GenKind::HwBotPlus);
        case GenKind::Kappa: return make(GenKind::Kappa);
        case GenKind::Ck: return Generator(GenKind::Ck, {a[0], a[2], a[1], a[3]});
        case GenKind::Hw: return make(GenKind::Vw);
        case GenKind::Vw: return make(GenKind::Hw);
        case GenKind::Hk1: return make(GenKind::Vk1);
        case GenKind::Hk2: return make(GenKind::Vk2);
        case GenKind::Vk1: return make(GenKind::Hk1);
        case GenKind::Vk2: return make(GenKind::Hk2);
    }
    throw PreconditionViolated("unknown generator");
}

ArrowTerm dual(const ArrowTerm& f) {
    switch (f.kind()) {
        case ArrowTerm::Kind::Id: return ArrowTerm::id(dual(f.object()));
        case ArrowTerm::Kind::Prim: return ArrowTerm::prim(dual(f.generator()));
        case ArrowTerm::Kind::Comp: return ArrowTerm::compose(dual(f.before()), dual(f.after()));
        default: return ArrowTerm::par(dual(f.conn()), dual(f.left()), dual(f.right()));
    }
}

}  // namespace intermute
