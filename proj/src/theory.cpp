#include "intermute/theory.hpp"

#include <array>
#include <initializer_list>

namespace intermute {

namespace {

using Set = std::bitset<gen_kind_count>;

Set of(std::initializer_list<GenKind> ks) {
    Set s;
    for (GenKind k : ks) s.set(static_cast<std::size_t>(k));
    return s;
}

const Set assoc = of({GenKind::HbPlus, GenKind::HbMinus, GenKind::VbPlus, GenKind::VbMinus});
const Set units = of({GenKind::HdPlus, GenKind::HdMinus, GenKind::HsPlus, GenKind::HsMinus, GenKind::VdPlus,
                      GenKind::VdMinus, GenKind::VsPlus, GenKind::VsMinus, GenKind::HwBotMinus, GenKind::HwBotPlus,
                      GenKind::VwTopPlus, GenKind::VwTopMinus});
const Set kappa = of({GenKind::Kappa});
const Set medial = of({GenKind::Ck});
const Set symmetry = of({GenKind::Hc, GenKind::Vc});
const Set lattice = of({GenKind::Hw, GenKind::Vw, GenKind::Hk1, GenKind::Hk2, GenKind::Vk1, GenKind::Vk2});

const std::array<Theory, 12>& table() {
    using C = CoherenceClass;
    static const std::array<Theory, 12> t{{
        {TheoryId::A, "A", assoc, C::Preorder, false},
        {TheoryId::N, "N", units, C::Preorder, false},
        {TheoryId::K0, "K0", units | kappa, C::Preorder, true},
        {TheoryId::NA, "NA", assoc | units, C::Preorder, false},
        {TheoryId::KA0, "KA0", assoc | units | kappa, C::Preorder, true},
        {TheoryId::Ck, "Ck", medial, C::Preorder, false},
        {TheoryId::ACk, "ACk", assoc | medial, C::Preorder, false},
        {TheoryId::ACkU, "ACkU", assoc | medial | units | kappa, C::RestrictedByPurity, false},
        {TheoryId::S, "S", assoc | symmetry, C::DiversifiedPreorder, false},
        {TheoryId::SCk, "SCk", assoc | symmetry | medial, C::FaithfulRel, false},
        {TheoryId::SCkU, "SCkU", assoc | symmetry | medial | units | kappa, C::RestrictedByPurity, false},
        {TheoryId::L, "L", assoc | symmetry | medial | lattice, C::FaithfulRel, false},
    }};
    return t;
}

}  // namespace

std::vector<GenKind> generator_kinds(TheoryId t) {
    std::vector<GenKind> out;
    for (GenKind k : all_gen_kinds())
        if (theory(t).allows(k)) out.push_back(k);
    return out;
}

const Theory& theory(TheoryId id) { return table()[static_cast<std::size_t>(id)]; }

std::optional<TheoryId> theory_from_name(std::string_view name) {
    for (const auto& t : table())
        if (t.name == name) return t.id;
    return std::nullopt;
}

const std::vector<TheoryId>& all_theories() {
    static const std::vector<TheoryId> all = [] {
        std::vector<TheoryId> v;
        for (const auto& t : table()) v.push_back(t.id);
        return v;
    }();
    return all;
}

std::string_view to_string(CoherenceClass c) {
    switch (c) {
        case CoherenceClass::Preorder: return "Preorder";
        case CoherenceClass::DiversifiedPreorder: return "DiversifiedPreorder";
        case CoherenceClass::FaithfulRel: return "FaithfulRel";
        case CoherenceClass::RestrictedByPurity: return "RestrictedByPurity";
    }
    return "?";
}

std::vector<Generator> foreign_generators(const ArrowTerm& f, TheoryId t) {
    std::vector<Generator> out;
    for (const auto& g : generators_of(f))
        if (!theory(t).allows(g.kind())) out.push_back(g);
    return out;
}

bool validate_in_theory(const ArrowTerm& f, TheoryId t) { return foreign_generators(f, t).empty(); }

}  // namespace intermute
