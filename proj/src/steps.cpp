#include "intermute/steps.hpp"

#include <optional>

namespace intermute {

namespace {

using F = Formula;

std::optional<Generator> match(GenKind k, const F& s, const ArgumentSource* fresh) {
    auto gen = [&](std::vector<F> a) { return std::optional<Generator>(Generator(k, std::move(a))); };
    auto binary = [&](Conn c) { return s.is(c); };
    switch (k) {
        case GenKind::HbPlus: case GenKind::VbPlus: {
            const Conn c = k == GenKind::HbPlus ? Conn::And : Conn::Or;
            if (binary(c) && s.right().is(c)) return gen({s.left(), s.right().left(), s.right().right()});
            return std::nullopt;
        }
        case GenKind::HbMinus: case GenKind::VbMinus: {
            const Conn c = k == GenKind::HbMinus ? Conn::And : Conn::Or;
            if (binary(c) && s.left().is(c)) return gen({s.left().left(), s.left().right(), s.right()});
            return std::nullopt;
        }
        case GenKind::Hc: if (binary(Conn::And)) return gen({s.left(), s.right()}); return std::nullopt;
        case GenKind::Vc: if (binary(Conn::Or)) return gen({s.left(), s.right()}); return std::nullopt;
        case GenKind::HdPlus: if (binary(Conn::And) && s.right().is(Unit::Top)) return gen({s.left()}); return std::nullopt;
        case GenKind::HsPlus: if (binary(Conn::And) && s.left().is(Unit::Top)) return gen({s.right()}); return std::nullopt;
        case GenKind::VdPlus: if (binary(Conn::Or) && s.right().is(Unit::Bot)) return gen({s.left()}); return std::nullopt;
        case GenKind::VsPlus: if (binary(Conn::Or) && s.left().is(Unit::Bot)) return gen({s.right()}); return std::nullopt;
        case GenKind::HdMinus: case GenKind::HsMinus: case GenKind::VdMinus: case GenKind::VsMinus:
        case GenKind::Hw:
            return gen({s});
        case GenKind::HwBotMinus: case GenKind::Kappa: if (s.is(Unit::Bot)) return gen({}); return std::nullopt;
        case GenKind::VwTopMinus: if (s.is(Unit::Top)) return gen({}); return std::nullopt;
        case GenKind::HwBotPlus:
            if (binary(Conn::And) && s.left().is(Unit::Bot) && s.right().is(Unit::Bot)) return gen({});
            return std::nullopt;
        case GenKind::VwTopPlus:
            if (binary(Conn::Or) && s.left().is(Unit::Top) && s.right().is(Unit::Top)) return gen({});
            return std::nullopt;
        case GenKind::Ck:
            if (binary(Conn::Or) && s.left().is(Conn::And) && s.right().is(Conn::And))
                return gen({s.left().left(), s.left().right(), s.right().left(), s.right().right()});
            return std::nullopt;
        case GenKind::Vw: if (binary(Conn::Or) && s.left() == s.right()) return gen({s.left()}); return std::nullopt;
        case GenKind::Hk1: case GenKind::Hk2:
            if (binary(Conn::And)) return gen({s.left(), s.right()});
            return std::nullopt;
        case GenKind::Vk1: if (fresh) return gen({s, (*fresh)()}); return std::nullopt;
        case GenKind::Vk2: if (fresh) return gen({(*fresh)(), s}); return std::nullopt;
    }
    return std::nullopt;
}

void walk(const F& root, const F& s, OccurrencePath& path, const std::vector<GenKind>& kinds,
          const ArgumentSource* fresh, std::vector<ArrowTerm>& out) {
    for (GenKind k : kinds)
        if (auto g = match(k, s, fresh)) out.push_back(in_context(root, path, ArrowTerm::prim(*g)));
    if (!s.is_binary()) return;
    path.push_back(Side::Left);
    walk(root, s.left(), path, kinds, fresh, out);
    path.back() = Side::Right;
    walk(root, s.right(), path, kinds, fresh, out);
    path.pop_back();
}

ArrowTerm wrap(const F& x, const OccurrencePath& path, std::size_t depth, const ArrowTerm& head) {
    if (depth == path.size()) return head;
    if (path[depth] == Side::Left)
        return ArrowTerm::par(x.conn(), wrap(x.left(), path, depth + 1, head), ArrowTerm::id(x.right()));
    return ArrowTerm::par(x.conn(), ArrowTerm::id(x.left()), wrap(x.right(), path, depth + 1, head));
}

}  // namespace

ArrowTerm in_context(const Formula& x, const OccurrencePath& path, const ArrowTerm& head) {
    return wrap(x, path, 0, head);
}

std::vector<ArrowTerm> beta_terms(const Formula& x, const std::vector<GenKind>& kinds, const ArgumentSource* fresh) {
    std::vector<ArrowTerm> out;
    OccurrencePath path;
    walk(x, x, path, kinds, fresh, out);
    return out;
}

}  // namespace intermute
