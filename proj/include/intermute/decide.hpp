#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "intermute/arrow.hpp"
#include "intermute/semantics.hpp"
#include "intermute/theory.hpp"

namespace intermute {

struct Verdict {
    enum class Tag : unsigned char { Equal, NotEqual, OutsideFragment };
    Tag tag;
    std::string reason;
    // NotEqual evidence: differing types, or differing images.
    std::optional<Type> left_type, right_type;
    std::optional<Relation> left_relation, right_relation;
};

std::string_view to_string(Verdict::Tag t);
std::string to_string(const Verdict& v);

// Throws GeneratorNotInTheory and IllTyped.
Verdict decide_equal(const ArrowTerm& f, const ArrowTerm& g, TheoryId t, Objects mode = Objects::Formulas);

struct ExistsAnswer {
    enum class Tag : unsigned char { True, False, OutsideFragment };
    Tag tag;
    std::string reason;
    std::optional<ArrowTerm> witness;
    Objects witness_objects = Objects::Formulas;
    std::optional<std::size_t> depth_cap;
};

std::string_view to_string(ExistsAnswer::Tag t);
std::string to_string(const ExistsAnswer& a);

struct ExistsOptions {
    // Renamings of repeated letters tried before giving up.
    std::size_t max_renamings = 40320;
    // Per-side state limit of the isomorphism search.
    std::size_t max_states = 200000;
};

ExistsAnswer decide_exists(const Formula& x, const Formula& y, TheoryId t, const ExistsOptions& options = {});

struct PurityStep {
    Formula source, target;
    bool letterless = false;
    bool source_bot_pure = false, target_bot_pure = false;
    bool source_top_pure = false, target_top_pure = false;
    bool violation = false;
};

struct PurityReport {
    std::vector<PurityStep> steps;
    std::size_t violations = 0;
};

std::string to_string(const PurityReport& r);

// Throws IllTyped.
PurityReport purity_scan(const ArrowTerm& f);

}  // namespace intermute
