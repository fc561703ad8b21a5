#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "intermute/arrow.hpp"
#include "intermute/form_sequence.hpp"
#include "intermute/random.hpp"

namespace intermute {

// Strict symmetric medial terms here are typed modulo associativity and commutativity.

struct SplitClass {
    enum class Tag : unsigned char { Splitting, Nonsplitting };
    std::vector<Generator> occurrences;  // ck occurrences in traversal order
    std::vector<Tag> tags;
    bool all_splitting() const;
    bool all_nonsplitting() const;
};

bool is_splitting(const Generator& ck, const FormSet& x1, const FormSet& x2);

// x1 and x2 name the two sides by their letters. Throws IllTyped when the source of f is not a
// disjunction of parts each drawing letters from one side.
SplitClass classify(const ArrowTerm& f, const FormSet& x1, const FormSet& x2);

// The two disjuncts of a source written as a binary disjunction.
std::pair<FormSet, FormSet> source_disjuncts(const ArrowTerm& f);

struct Factorization {
    ArrowTerm nonsplitting;  // applied first
    ArrowTerm splitting;
};

// f = splitting . nonsplitting, certified by equal relations. Throws IllTyped and NotDiversified.
Factorization factor_split(const ArrowTerm& f, const FormSet& x1, const FormSet& x2);

// The canonical splitting term x1 | x2 -> y. Throws NotLegitimate when there is none.
ArrowTerm splitting_normal_form(const FormSet& x1, const FormSet& x2, const FormSet& y);
// Throws NotAllSplitting.
ArrowTerm splitting_normal_form(const ArrowTerm& f, const FormSet& x1, const FormSet& x2);

// (f1, f2) with f = f1 & f2 for a source x1 & x2.
std::pair<ArrowTerm, ArrowTerm> split_conjunction(const ArrowTerm& f, const FormSet& x1, const FormSet& x2);

// A composite of random intermutations on form sets, starting at x.
ArrowTerm random_strict_symmetric_term(Rng& rng, const FormSequence& x, std::size_t steps);

}  // namespace intermute
