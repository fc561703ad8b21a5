#pragma once

#include <optional>
#include <set>
#include <string>

#include "intermute/arrow.hpp"
#include "intermute/form_sequence.hpp"

namespace intermute {

// Deletes letters from a formula; empty when every letter goes.
std::optional<Formula> erase_letters(const Formula& f, const std::set<std::string>& letters);

// True when, for every and-node of x, either all or none of its children have letters inside p.
bool respects_conjunctions(const FormSequence& x, const std::set<std::string>& p);

// f^{-P} for a strict symmetric medial term. Throws PreconditionViolated.
ArrowTerm restrict_arrow(const ArrowTerm& f, const std::set<std::string>& p);

// The erasure clauses without the precondition check.
ArrowTerm erase_letters(const ArrowTerm& f, const std::set<std::string>& p);

}  // namespace intermute
