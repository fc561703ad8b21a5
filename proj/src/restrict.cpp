#include "intermute/restrict.hpp"

#include <algorithm>

#include "intermute/error.hpp"
#include "intermute/theory.hpp"

namespace intermute {

std::optional<Formula> erase_letters(const Formula& f, const std::set<std::string>& letters) {
    if (f.is_letter()) {
        if (letters.count(f.name())) return std::nullopt;
        return f;
    }
    if (!f.is_binary()) return f;
    auto l = erase_letters(f.left(), letters);
    auto r = erase_letters(f.right(), letters);
    if (!l) return r;
    if (!r) return l;
    return Formula::binary(f.conn(), *l, *r);
}

namespace {

bool inside(const std::map<std::string, std::size_t>& lets, const std::set<std::string>& p) {
    return std::all_of(lets.begin(), lets.end(), [&](const auto& kv) { return p.count(kv.first) > 0; });
}

bool disjoint(const std::map<std::string, std::size_t>& lets, const std::set<std::string>& p) {
    return std::none_of(lets.begin(), lets.end(), [&](const auto& kv) { return p.count(kv.first) > 0; });
}

Formula source_unchecked(const ArrowTerm& f) {
    switch (f.kind()) {
        case ArrowTerm::Kind::Id: return f.object();
        case ArrowTerm::Kind::Prim: return generator_type(f.generator()).source;
        case ArrowTerm::Kind::Comp: return source_unchecked(f.before());
        default: return Formula::binary(f.conn(), source_unchecked(f.left()), source_unchecked(f.right()));
    }
}

Formula erased(const Formula& f, const std::set<std::string>& p) {
    auto e = erase_letters(f, p);
    if (!e) throw PreconditionViolated("restriction deletes every letter of " + to_string(f));
    return *e;
}

}  // namespace

bool respects_conjunctions(const FormSequence& x, const std::set<std::string>& p) {
    if (x.is_leaf()) return true;
    if (x.conn() == Conn::And) {
        std::size_t in = 0;
        for (const auto& ch : x.children()) {
            auto ls = letter_set(ch);
            in += std::all_of(ls.begin(), ls.end(), [&](const std::string& q) { return p.count(q) > 0; });
        }
        if (in != 0 && in != x.children().size()) return false;
    }
    return std::all_of(x.children().begin(), x.children().end(),
                       [&](const FormSequence& ch) { return respects_conjunctions(ch, p); });
}

ArrowTerm erase_letters(const ArrowTerm& f, const std::set<std::string>& p) {
    const Formula src = source_unchecked(f);
    const auto lets = letters(src);
    if (disjoint(lets, p)) return f;
    switch (f.kind()) {
        case ArrowTerm::Kind::Id: return ArrowTerm::id(erased(f.object(), p));
        case ArrowTerm::Kind::Prim: {
            const Generator& g = f.generator();
            const auto& a = g.args();
            if (g.kind() == GenKind::Ck) {
                if (inside(letters(Formula::conj(a[0], a[1])), p) || inside(letters(Formula::conj(a[2], a[3])), p))
                    return ArrowTerm::id(erased(src, p));
                std::vector<Formula> args;
                for (const auto& x : a) args.push_back(erased(x, p));
                return ArrowTerm::prim(GenKind::Ck, std::move(args));
            }
            if (!theory(TheoryId::S).allows(g.kind()))
                throw PreconditionViolated("restriction is defined for symmetric medial terms only, found " +
                                           to_string(g));
            std::vector<Formula> args;
            for (const auto& x : a) {
                auto e = erase_letters(x, p);
                if (!e) return ArrowTerm::id(erased(src, p));
                args.push_back(*e);
            }
            return ArrowTerm::prim(g.kind(), std::move(args));
        }
        case ArrowTerm::Kind::Comp: return ArrowTerm::compose(erase_letters(f.after(), p), erase_letters(f.before(), p));
        default: {
            if (inside(letters(source_unchecked(f.left())), p)) return erase_letters(f.right(), p);
            if (inside(letters(source_unchecked(f.right())), p)) return erase_letters(f.left(), p);
            return ArrowTerm::par(f.conn(), erase_letters(f.left(), p), erase_letters(f.right(), p));
        }
    }
}

ArrowTerm restrict_arrow(const ArrowTerm& f, const std::set<std::string>& p) {
    if (!validate_in_theory(f, TheoryId::SCk))
        throw PreconditionViolated("restriction is defined for symmetric medial terms only");
    const Type t = type_of(f, Objects::FormSets);
    const FormSequence x = strictify(t.source);
    if (inside(letters(t.source), p)) throw PreconditionViolated("restriction deletes every letter of the source");
    if (!respects_conjunctions(x, p))
        throw PreconditionViolated("letter set splits a conjunction of the source " + to_string(x));
    return erase_letters(f, p);
}

}  // namespace intermute
