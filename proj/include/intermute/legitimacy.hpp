#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intermute/arrow.hpp"
#include "intermute/form_sequence.hpp"

namespace intermute {

struct LegitimacyWitness {
    // and-occurrences of X onto and-occurrences of Y
    std::map<ConnOccurrence, ConnOccurrence> merge;
    // or-occurrences of Y onto or-occurrences of X
    std::map<ConnOccurrence, ConnOccurrence> split;
};

std::string to_string(const LegitimacyWitness& w);

struct LegitimacyCheck {
    std::optional<LegitimacyWitness> witness;
    std::string failure;
    explicit operator bool() const { return witness.has_value(); }
};

// Throws NotDiversified.
LegitimacyCheck check_legitimate(const FormSequence& x, const FormSequence& y);

// Flank data with letters numbered, for checking many pairs over one letter set.
struct FlankTable {
    struct Flanks {
        std::vector<int> first, second;
    };
    std::vector<int> letters;  // sorted ids
    std::vector<Flanks> ands;  // (L_x, R_x)
    std::vector<Flanks> ors;   // (T_y, B_y)
    std::vector<int> and_of_left, pos_in_left;
    std::vector<int> or_of_top, pos_in_top;
};

FlankTable flank_table(const FormSequence& x, const std::map<std::string, int>& ids);
bool is_legitimate(const FlankTable& x, const FlankTable& y);

// Throws NotLegitimate.
std::pair<FormSequence, FormSequence> interpolate_or(const FormSequence& x1, const FormSequence& x2,
                                                     const FormSequence& y);
std::pair<FormSequence, FormSequence> interpolate_and(const FormSequence& x, const FormSequence& y1,
                                                      const FormSequence& y2);

// A strict biassociative medial term X -> Y, typed modulo associativity. Throws NotLegitimate.
ArrowTerm synthesize(const FormSequence& x, const FormSequence& y);

// One intermutation at a redex of adjacent conjunctive children of a disjunction.
struct CkStep {
    FormSequence result;
    ArrowTerm factor;  // typed modulo associativity
};
std::vector<CkStep> ck_steps(const FormSequence& x);

// Throws NotDiversified.
bool exists_bfs(const FormSequence& x, const FormSequence& y);

}  // namespace intermute
