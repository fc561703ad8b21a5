#include "intermute/shape.hpp"

#include <optional>

#include "intermute/error.hpp"

namespace intermute {

struct Shape::Node {
    Kind kind;
    Unit unit = Unit::Top;
    Conn conn = Conn::And;
    std::optional<Shape> left, right;
    std::size_t arity = 0;
};

Shape Shape::unit(Unit u) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::UnitLeaf;
    n->unit = u;
    return Shape(std::move(n));
}

Shape Shape::box() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Box;
    n->arity = 1;
    return Shape(std::move(n));
}

Shape Shape::combine(Conn c, Shape left, Shape right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Combine;
    n->conn = c;
    n->arity = left.arity() + right.arity();
    n->left = std::move(left);
    n->right = std::move(right);
    return Shape(std::move(n));
}

Shape::Kind Shape::kind() const noexcept { return node_->kind; }

Unit Shape::unit_value() const {
    if (kind() != Kind::UnitLeaf) throw PreconditionViolated("unit_value() of a non-unit shape");
    return node_->unit;
}

Conn Shape::conn() const {
    if (kind() != Kind::Combine) throw PreconditionViolated("conn() of a shape leaf");
    return node_->conn;
}

const Shape& Shape::left() const {
    if (kind() != Kind::Combine) throw PreconditionViolated("left() of a shape leaf");
    return *node_->left;
}

const Shape& Shape::right() const {
    if (kind() != Kind::Combine) throw PreconditionViolated("right() of a shape leaf");
    return *node_->right;
}

std::size_t Shape::arity() const noexcept { return node_->arity; }

bool Shape::is_over(Conn c) const {
    switch (kind()) {
        case Kind::Box: return true;
        case Kind::UnitLeaf: return unit_value() == neutral_unit(c);
        case Kind::Combine: return conn() == c && left().is_over(c) && right().is_over(c);
    }
    return false;
}

std::string to_string(const Shape& m) {
    switch (m.kind()) {
        case Shape::Kind::Box: return "[]";
        case Shape::Kind::UnitLeaf: return m.unit_value() == Unit::Top ? "T" : "F";
        case Shape::Kind::Combine:
            return "(" + to_string(m.left()) + symbol(m.conn()) + to_string(m.right()) + ")";
    }
    return "?";
}

namespace {

using Args = std::vector<Formula>;

Args slice(const Args& a, std::size_t from, std::size_t count) {
    return Args(a.begin() + static_cast<std::ptrdiff_t>(from), a.begin() + static_cast<std::ptrdiff_t>(from + count));
}

void check_arity(const Shape& m, const Args& a) {
    if (a.size() != m.arity())
        throw ArityMismatch("shape " + to_string(m) + " has arity " + std::to_string(m.arity()) + ", got " +
                            std::to_string(a.size()) + " formulas");
}

void require_over(const Shape& m, Conn c) {
    if (!m.is_over(c))
        throw PreconditionViolated("shape " + to_string(m) + " is not built from " + symbol(c) + " and its unit");
}

Formula instantiate_unchecked(const Shape& m, const Args& a, std::size_t& next) {
    switch (m.kind()) {
        case Shape::Kind::Box: return a[next++];
        case Shape::Kind::UnitLeaf: return Formula::unit(m.unit_value());
        case Shape::Kind::Combine: {
            Formula l = instantiate_unchecked(m.left(), a, next);
            Formula r = instantiate_unchecked(m.right(), a, next);
            return Formula::binary(m.conn(), l, r);
        }
    }
    throw PreconditionViolated("bad shape");
}

ArrowTerm psi(const Shape& m, const Args& a, const Args& b) {
    switch (m.kind()) {
        case Shape::Kind::UnitLeaf: return ArrowTerm::prim(GenKind::HwBotMinus);
        case Shape::Kind::Box: return ArrowTerm::id(Formula::conj(a[0], b[0]));
        case Shape::Kind::Combine: {
            const std::size_t k = m.left().arity();
            const std::size_t r = m.right().arity();
            Args a1 = slice(a, 0, k), a2 = slice(a, k, r), b1 = slice(b, 0, k), b2 = slice(b, k, r);
            ArrowTerm head = ArrowTerm::prim(
                GenKind::Ck, {instantiate(m.left(), a1), instantiate(m.left(), b1), instantiate(m.right(), a2), instantiate(m.right(), b2)});
            return ArrowTerm::compose(head, ArrowTerm::disj_par(psi(m.left(), a1, b1), psi(m.right(), a2, b2)));
        }
    }
    throw PreconditionViolated("bad shape");
}

ArrowTerm psibar(const Shape& m, const Args& a, const Args& b) {
    switch (m.kind()) {
        case Shape::Kind::UnitLeaf: return ArrowTerm::prim(GenKind::VwTopPlus);
        case Shape::Kind::Box: return ArrowTerm::id(Formula::disj(a[0], b[0]));
        case Shape::Kind::Combine: {
            const std::size_t k = m.left().arity();
            const std::size_t r = m.right().arity();
            Args a1 = slice(a, 0, k), a2 = slice(a, k, r), b1 = slice(b, 0, k), b2 = slice(b, k, r);
            ArrowTerm tail = ArrowTerm::prim(
                GenKind::Ck, {instantiate(m.left(), a1), instantiate(m.right(), a2), instantiate(m.left(), b1), instantiate(m.right(), b2)});
            return ArrowTerm::compose(ArrowTerm::conj_par(psibar(m.left(), a1, b1), psibar(m.right(), a2, b2)), tail);
        }
    }
    throw PreconditionViolated("bad shape");
}

ArrowTerm pi_top(const Shape& m) {
    switch (m.kind()) {
        case Shape::Kind::UnitLeaf: return ArrowTerm::prim(GenKind::Kappa);
        case Shape::Kind::Box: return ArrowTerm::id(Formula::top());
        case Shape::Kind::Combine:
            return ArrowTerm::compose(ArrowTerm::prim(GenKind::VwTopPlus),
                                      ArrowTerm::disj_par(pi_top(m.left()), pi_top(m.right())));
    }
    throw PreconditionViolated("bad shape");
}

ArrowTerm pi_bot(const Shape& m) {
    switch (m.kind()) {
        case Shape::Kind::UnitLeaf: return ArrowTerm::prim(GenKind::Kappa);
        case Shape::Kind::Box: return ArrowTerm::id(Formula::bot());
        case Shape::Kind::Combine:
            return ArrowTerm::compose(ArrowTerm::conj_par(pi_bot(m.left()), pi_bot(m.right())),
                                      ArrowTerm::prim(GenKind::HwBotMinus));
    }
    throw PreconditionViolated("bad shape");
}

}  // namespace

Formula instantiate(const Shape& m, const std::vector<Formula>& args) {
    check_arity(m, args);
    std::size_t next = 0;
    return instantiate_unchecked(m, args, next);
}

ArrowTerm derive_psi(const Shape& m, const std::vector<Formula>& a, const std::vector<Formula>& a_prime) {
    require_over(m, Conn::Or);
    check_arity(m, a);
    check_arity(m, a_prime);
    return simplify_identities(psi(m, a, a_prime));
}

ArrowTerm derive_psibar(const Shape& m, const std::vector<Formula>& a, const std::vector<Formula>& a_prime) {
    require_over(m, Conn::And);
    check_arity(m, a);
    check_arity(m, a_prime);
    return simplify_identities(psibar(m, a, a_prime));
}

ArrowTerm derive_pi_top(const Shape& m) {
    require_over(m, Conn::Or);
    return simplify_identities(pi_top(m));
}

ArrowTerm derive_pi_bot(const Shape& m) {
    require_over(m, Conn::And);
    return simplify_identities(pi_bot(m));
}

}  // namespace intermute
