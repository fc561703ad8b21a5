#pragma once

#include <bitset>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intermute/arrow.hpp"

namespace intermute {

enum class TheoryId : unsigned char { A, N, K0, NA, KA0, Ck, ACk, ACkU, S, SCk, SCkU, L };

enum class CoherenceClass : unsigned char { Preorder, DiversifiedPreorder, FaithfulRel, RestrictedByPurity };

struct Theory {
    TheoryId id;
    std::string_view name;
    std::bitset<gen_kind_count> generators;
    CoherenceClass coherence;
    bool letterless_only;

    bool allows(GenKind k) const { return generators.test(static_cast<std::size_t>(k)); }
    bool has_symmetry() const { return allows(GenKind::Hc); }
    bool has_units() const { return allows(GenKind::HdPlus); }
    bool has_kappa() const { return allows(GenKind::Kappa); }
};

const Theory& theory(TheoryId id);
std::optional<TheoryId> theory_from_name(std::string_view name);
const std::vector<TheoryId>& all_theories();
std::string_view to_string(CoherenceClass c);

std::vector<GenKind> generator_kinds(TheoryId t);

bool validate_in_theory(const ArrowTerm& f, TheoryId t);
// Generators of f outside t, in traversal order.
std::vector<Generator> foreign_generators(const ArrowTerm& f, TheoryId t);

}  // namespace intermute
