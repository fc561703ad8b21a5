#pragma once

#include <functional>
#include <vector>

#include "intermute/arrow.hpp"

namespace intermute {

// Supplies argument formulas that a generator's source does not determine.
using ArgumentSource = std::function<Formula()>;

// Every one-generator, composition-free term with source x whose generator kind is listed.
// Generators whose source leaves an argument free are produced only when `fresh` is given.
std::vector<ArrowTerm> beta_terms(const Formula& x, const std::vector<GenKind>& kinds,
                                  const ArgumentSource* fresh = nullptr);

// Places a term at a position of x, with identities on the untouched parts.
ArrowTerm in_context(const Formula& x, const OccurrencePath& path, const ArrowTerm& head);

}  // namespace intermute
