#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "intermute/arrow.hpp"
#include "intermute/form_sequence.hpp"
#include "intermute/steps.hpp"
#include "intermute/theory.hpp"

namespace intermute {

using Rng = std::mt19937_64;

struct FormulaShape {
    std::vector<std::string> letters{"p", "q", "r", "s"};
    std::size_t min_letters = 1;
    std::size_t max_letters = 3;
    double unit_probability = 0.0;
    // Letters drawn without repetition; needs enough letters.
    bool distinct_letters = false;
};

Formula random_formula(Rng& rng, const FormulaShape& shape);

// A disjunction of `blocks` conjunctions of random formulas, rich in intermutation redexes.
Formula random_medial_source(Rng& rng, const FormulaShape& shape, std::size_t blocks);

// Letters p1, p2, ... each once.
Formula random_diversified_formula(Rng& rng, std::size_t letter_count);

// A well-typed term with the given source built from random compositions, parallel
// pairs and one-generator steps drawn from `kinds`; non-invertible steps are favoured.
ArrowTerm random_term(Rng& rng, const Formula& source, const std::vector<GenKind>& kinds, std::size_t budget,
                      const ArgumentSource* fresh = nullptr);

}  // namespace intermute
