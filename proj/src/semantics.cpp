#include "intermute/semantics.hpp"

#include <map>

#include "intermute/error.hpp"

namespace intermute {

Relation Relation::identity(std::size_t n) {
    Relation r{n, n, {}};
    for (std::size_t i = 0; i < n; ++i) r.pairs.emplace(i, i);
    return r;
}

Relation compose(const Relation& after, const Relation& before) {
    if (before.target_size != after.source_size) throw IllTyped("relation sizes do not compose");
    std::multimap<std::size_t, std::size_t> next;
    for (const auto& [i, j] : after.pairs) next.emplace(i, j);
    Relation out{before.source_size, after.target_size, {}};
    for (const auto& [i, m] : before.pairs) {
        auto [lo, hi] = next.equal_range(m);
        for (auto it = lo; it != hi; ++it) out.pairs.emplace(i, it->second);
    }
    return out;
}

Relation placed_side_by_side(const Relation& left, const Relation& right) {
    Relation out{left.source_size + right.source_size, left.target_size + right.target_size, left.pairs};
    for (const auto& [i, j] : right.pairs) out.pairs.emplace(i + left.source_size, j + left.target_size);
    return out;
}

bool is_bijection(const Relation& r) {
    if (r.source_size != r.target_size || r.pairs.size() != r.source_size) return false;
    std::vector<bool> seen_source(r.source_size), seen_target(r.target_size);
    for (const auto& [i, j] : r.pairs) {
        if (seen_source[i] || seen_target[j]) return false;
        seen_source[i] = seen_target[j] = true;
    }
    return true;
}

std::string to_string(const Relation& r) {
    std::string out = "source " + std::to_string(r.source_size) + " target " + std::to_string(r.target_size) + " pairs";
    for (const auto& [i, j] : r.pairs) out += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw IllTyped("matrix dimensions do not compose");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b.at(k, j) != 0) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(i + a.rows(), j + a.cols()) = b.at(i, j);
    return out;
}

bool is_permutation_matrix(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) > 1) return false;
    return is_bijection(support(m));
}

Relation support(const IntMatrix& m) {
    Relation r{m.cols(), m.rows(), {}};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) r.pairs.emplace(j, i);
    return r;
}

std::string to_string(const IntMatrix& m) {
    bool digits = true;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) > 9) digits = false;
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!digits && j > 0) out += ' ';
            out += m.at(i, j).str();
        }
        out += '\n';
    }
    return out;
}

namespace {

struct Layout {
    std::vector<std::size_t> source, target;
};

// Argument blocks read left to right in the source and the target.
Layout layout(GenKind k) {
    switch (k) {
        case GenKind::HbPlus: case GenKind::HbMinus: case GenKind::VbPlus: case GenKind::VbMinus:
            return {{0, 1, 2}, {0, 1, 2}};
        case GenKind::Hc: case GenKind::Vc: return {{0, 1}, {1, 0}};
        case GenKind::HdPlus: case GenKind::HdMinus: case GenKind::HsPlus: case GenKind::HsMinus:
        case GenKind::VdPlus: case GenKind::VdMinus: case GenKind::VsPlus: case GenKind::VsMinus:
            return {{0}, {0}};
        case GenKind::HwBotMinus: case GenKind::HwBotPlus: case GenKind::VwTopPlus: case GenKind::VwTopMinus:
        case GenKind::Kappa:
            return {};
        case GenKind::Ck: return {{0, 1, 2, 3}, {0, 2, 1, 3}};
        case GenKind::Hw: return {{0}, {0, 0}};
        case GenKind::Vw: return {{0, 0}, {0}};
        case GenKind::Hk1: return {{0, 1}, {0}};
        case GenKind::Hk2: return {{0, 1}, {1}};
        case GenKind::Vk1: return {{0}, {0, 1}};
        case GenKind::Vk2: return {{1}, {0, 1}};
    }
    return {};
}

std::vector<std::vector<std::size_t>> block_offsets(const std::vector<std::size_t>& blocks,
                                                    const std::vector<std::size_t>& sizes) {
    std::vector<std::vector<std::size_t>> at(sizes.size());
    std::size_t pos = 0;
    for (std::size_t b : blocks) {
        at[b].push_back(pos);
        pos += sizes[b];
    }
    return at;
}

std::vector<std::pair<std::size_t, std::size_t>> glue_links(const Formula& from, const Formula& to) {
    const auto a = letter_sequence(from), b = letter_sequence(to);
    if (a.size() != b.size()) throw IllTyped("boundary objects differ in letter count");
    std::map<std::string, std::vector<std::size_t>> where;
    for (std::size_t j = b.size(); j-- > 0;) where[b[j]].push_back(j);
    std::vector<std::pair<std::size_t, std::size_t>> links;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto& v = where[a[i]];
        if (v.empty()) throw IllTyped("boundary objects differ in letters");
        links.emplace_back(i, v.back());
        v.pop_back();
    }
    return links;
}

struct RelAlgebra {
    using Value = Relation;
    static Value identity(std::size_t n) { return Relation::identity(n); }
    static Value links(std::size_t s, std::size_t t, const std::vector<std::pair<std::size_t, std::size_t>>& l) {
        Relation r{s, t, {}};
        r.pairs.insert(l.begin(), l.end());
        return r;
    }
    static Value compose(const Value& after, const Value& before) { return intermute::compose(after, before); }
    static Value sum(const Value& a, const Value& b) { return placed_side_by_side(a, b); }
};

struct MatAlgebra {
    using Value = IntMatrix;
    static Value identity(std::size_t n) { return IntMatrix::identity(n); }
    static Value links(std::size_t s, std::size_t t, const std::vector<std::pair<std::size_t, std::size_t>>& l) {
        IntMatrix m(t, s);
        for (const auto& [i, j] : l) m.at(j, i) += 1;
        return m;
    }
    static Value compose(const Value& after, const Value& before) { return after * before; }
    static Value sum(const Value& a, const Value& b) { return block_sum(a, b); }
};

template <class Alg>
struct Evaluated {
    Type type;
    typename Alg::Value value;
};

template <class Alg>
Evaluated<Alg> eval(const ArrowTerm& f, Objects mode) {
    switch (f.kind()) {
        case ArrowTerm::Kind::Id: return {{f.object(), f.object()}, Alg::identity(f.object().letter_count())};
        case ArrowTerm::Kind::Prim: {
            const Type t = generator_type(f.generator());
            return {t, Alg::links(t.source.letter_count(), t.target.letter_count(), generator_links(f.generator()))};
        }
        case ArrowTerm::Kind::Comp: {
            auto before = eval<Alg>(f.before(), mode);
            auto after = eval<Alg>(f.after(), mode);
            if (!objects_equal(before.type.target, after.type.source, mode))
                throw IllTyped("composition: target " + to_string(before.type.target) + " does not match source " +
                               to_string(after.type.source));
            auto value = before.value;
            if (!(before.type.target == after.type.source)) {
                const auto n = before.type.target.letter_count();
                value = Alg::compose(Alg::links(n, n, glue_links(before.type.target, after.type.source)), value);
            }
            return {{before.type.source, after.type.target}, Alg::compose(after.value, value)};
        }
        default: {
            auto l = eval<Alg>(f.left(), mode);
            auto r = eval<Alg>(f.right(), mode);
            return {{Formula::binary(f.conn(), l.type.source, r.type.source),
                     Formula::binary(f.conn(), l.type.target, r.type.target)},
                    Alg::sum(l.value, r.value)};
        }
    }
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> generator_links(const Generator& g) {
    const Layout lay = layout(g.kind());
    std::vector<std::size_t> sizes;
    for (const auto& a : g.args()) sizes.push_back(a.letter_count());
    const auto src = block_offsets(lay.source, sizes);
    const auto tgt = block_offsets(lay.target, sizes);
    std::vector<std::pair<std::size_t, std::size_t>> links;
    for (std::size_t b = 0; b < sizes.size(); ++b)
        for (std::size_t s : src[b])
            for (std::size_t t : tgt[b])
                for (std::size_t k = 0; k < sizes[b]; ++k) links.emplace_back(s + k, t + k);
    return links;
}

Relation eval_rel(const ArrowTerm& f, Objects mode) { return eval<RelAlgebra>(f, mode).value; }

IntMatrix eval_mat(const ArrowTerm& f, Objects mode) { return eval<MatAlgebra>(f, mode).value; }

std::set<std::pair<std::string, std::string>> letter_links(const ArrowTerm& f, Objects mode) {
    const Type t = type_of(f, mode);
    if (!is_diversified(t.source) || !is_diversified(t.target)) throw NotDiversified("letter links need diversified objects");
    const auto src = letter_sequence(t.source), tgt = letter_sequence(t.target);
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [i, j] : eval_rel(f, mode).pairs) out.emplace(src[i], tgt[j]);
    return out;
}

}  // namespace intermute
