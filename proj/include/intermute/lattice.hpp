#pragma once

#include <optional>

#include <vector>

#include "intermute/arrow.hpp"
#include "intermute/form_sequence.hpp"

namespace intermute {

// A term of b- and c-arrows between constant-free diversified formulas that are equal
// modulo associativity and commutativity. Throws PreconditionViolated otherwise.
ArrowTerm ac_reshape(const Formula& x, const Formula& y);

// One intermutation on a form set: any two conjunctive children of a disjunction, each split
// into two nonempty parts.
struct SymmetricCkStep {
    FormSequence result;  // canonical order
    ArrowTerm factor;     // typed modulo associativity and commutativity
};
std::vector<SymmetricCkStep> symmetric_ck_steps(const FormSequence& x);

// A symmetric medial term x -> y between constant-free diversified formulas, if any.
std::optional<ArrowTerm> search_symmetric_medial(const Formula& x, const Formula& y);

// Replaces b-, c- and ck-generators by their lattice definitions.
ArrowTerm expand_definitions(const ArrowTerm& f);

// A symmetric medial term with the same type and matrix as f, when the matrix of f is a
// permutation matrix. Throws IllTyped.
std::optional<ArrowTerm> lattice_reduce(const ArrowTerm& f);

}  // namespace intermute
