#include "intermute/random.hpp"

#include <algorithm>
#include <optional>

#include "intermute/error.hpp"

namespace intermute {

namespace {

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

Formula build(Rng& rng, std::vector<Formula> leaves) {
    while (leaves.size() > 1) {
        const std::size_t i = std::uniform_int_distribution<std::size_t>(0, leaves.size() - 2)(rng);
        const Conn c = std::bernoulli_distribution(0.5)(rng) ? Conn::And : Conn::Or;
        leaves[i] = Formula::binary(c, leaves[i], leaves[i + 1]);
        leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
    return leaves.front();
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(shape.min_letters, shape.max_letters)(rng);
    std::vector<std::string> pool = shape.letters;
    if (shape.distinct_letters) {
        if (pool.size() < n) throw PreconditionViolated("not enough letters for a diversified formula");
        std::shuffle(pool.begin(), pool.end(), rng);
    }
    std::vector<Formula> leaves;
    for (std::size_t i = 0; i < n; ++i) {
        if (shape.unit_probability > 0 && std::bernoulli_distribution(shape.unit_probability)(rng)) {
            leaves.push_back(Formula::unit(std::bernoulli_distribution(0.5)(rng) ? Unit::Top : Unit::Bot));
            continue;
        }
        leaves.push_back(Formula::letter(shape.distinct_letters ? pool[i] : pick(rng, pool)));
    }
    return build(rng, std::move(leaves));
}

Formula random_medial_source(Rng& rng, const FormulaShape& shape, std::size_t blocks) {
    FormulaShape part = shape;
    part.min_letters = 1;
    part.max_letters = std::max<std::size_t>(1, shape.max_letters / (2 * blocks));
    std::vector<std::string> pool = shape.letters;
    if (shape.distinct_letters) std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t used = 0;
    auto piece = [&] {
        if (!shape.distinct_letters) return random_formula(rng, part);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, part.max_letters)(rng);
        if (used + n > pool.size()) throw PreconditionViolated("not enough letters for a diversified formula");
        part.letters.assign(pool.begin() + static_cast<std::ptrdiff_t>(used), pool.begin() + static_cast<std::ptrdiff_t>(used + n));
        part.min_letters = part.max_letters = n;
        used += n;
        Formula f = random_formula(rng, part);
        part.max_letters = std::max<std::size_t>(1, shape.max_letters / (2 * blocks));
        part.min_letters = 1;
        return f;
    };
    std::optional<Formula> out;
    for (std::size_t b = 0; b < blocks; ++b) {
        const Formula lhs = piece();
        const Formula block = Formula::conj(lhs, piece());
        out = out ? Formula::disj(*out, block) : block;
    }
    return *out;
}

Formula random_diversified_formula(Rng& rng, std::size_t letter_count) {
    FormulaShape shape;
    shape.letters.clear();
    for (std::size_t i = 1; i <= letter_count; ++i) shape.letters.push_back("p" + std::to_string(i));
    shape.min_letters = shape.max_letters = letter_count;
    shape.distinct_letters = true;
    return random_formula(rng, shape);
}

ArrowTerm random_term(Rng& rng, const Formula& source, const std::vector<GenKind>& kinds, std::size_t budget,
                      const ArgumentSource* fresh) {
    if (budget <= 1) {
        const auto steps = beta_terms(source, kinds, fresh);
        if (steps.empty() || (budget == 0 && std::bernoulli_distribution(0.5)(rng))) return ArrowTerm::id(source);
        std::vector<ArrowTerm> rare;
        for (const auto& s : steps)
            if (!is_invertible(generators_of(s).front().kind())) rare.push_back(s);
        if (!rare.empty() && std::bernoulli_distribution(0.5)(rng)) return pick(rng, rare);
        return pick(rng, steps);
    }
    const int choice = std::uniform_int_distribution<int>(0, 2)(rng);
    if (choice == 0 && source.is_binary()) {
        const std::size_t half = budget / 2;
        ArrowTerm l = random_term(rng, source.left(), kinds, half, fresh);
        return ArrowTerm::par(source.conn(), std::move(l), random_term(rng, source.right(), kinds, budget - half, fresh));
    }
    if (choice == 2) return random_term(rng, source, kinds, 1, fresh);
    const std::size_t first = std::uniform_int_distribution<std::size_t>(1, budget - 1)(rng);
    ArrowTerm f = random_term(rng, source, kinds, first, fresh);
    ArrowTerm g = random_term(rng, type_of(f).target, kinds, budget - first, fresh);
    return ArrowTerm::compose(g, f);
}

}  // namespace intermute
