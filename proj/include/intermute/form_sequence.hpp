#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "intermute/formula.hpp"

namespace intermute {

// A constant-free formula modulo associativity: a letter, or an n-ary node (n >= 2)
// whose children are letters or nodes of the other connective.
class FormSequence {
public:
    static FormSequence leaf(std::string letter);
    // Flattens same-connective children and collapses a single child.
    static FormSequence node(Conn c, std::vector<FormSequence> children);

    bool is_leaf() const noexcept;
    const std::string& letter() const;
    Conn conn() const;
    const std::vector<FormSequence>& children() const;

    std::size_t letter_count() const noexcept;
    std::size_t hash() const noexcept;

    friend bool operator==(const FormSequence& a, const FormSequence& b);
    friend std::strong_ordering operator<=>(const FormSequence& a, const FormSequence& b);

    struct Node;

private:
    explicit FormSequence(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

std::string to_string(const FormSequence& x);

// Throws HasUnits.
FormSequence strictify(const Formula& f);
// Left-associated representative.
Formula to_formula(const FormSequence& x);

using LetterSeq = std::vector<std::string>;

LetterSeq letter_sequence(const FormSequence& x);
std::set<std::string> letter_set(const FormSequence& x);
bool is_diversified(const FormSequence& x);
std::size_t count_conn(const FormSequence& x, Conn c);

// A form sequence modulo commutativity, kept with children in a canonical order.
class FormSet {
public:
    explicit FormSet(const FormSequence& x);
    const FormSequence& sequence() const noexcept { return seq_; }
    friend bool operator==(const FormSet&, const FormSet&) = default;
    friend auto operator<=>(const FormSet& a, const FormSet& b) { return a.seq_ <=> b.seq_; }

private:
    FormSequence seq_;
};

std::string to_string(const FormSet& x);
FormSequence canonical_order(const FormSequence& x);

// A binary occurrence of a connective: the gap between children gap and gap+1
// of the node reached by following child indices from the root.
struct ConnOccurrence {
    Conn conn;
    std::vector<std::size_t> node_path;
    std::size_t gap;
    friend bool operator==(const ConnOccurrence&, const ConnOccurrence&) = default;
    friend auto operator<=>(const ConnOccurrence&, const ConnOccurrence&) = default;
};

std::string to_string(const ConnOccurrence& x);
// Occurrences of c in text order.
std::vector<ConnOccurrence> occurrences(const FormSequence& x, Conn c);
const FormSequence& node_at(const FormSequence& x, const std::vector<std::size_t>& path);
// The two sides joined at an occurrence.
std::pair<FormSequence, FormSequence> sides(const FormSequence& x, const ConnOccurrence& occ);

struct TBLR {
    LetterSeq top, bottom, left, right;
};
TBLR tblr(const FormSequence& x);
LetterSeq top_seq(const FormSequence& x);
LetterSeq bottom_seq(const FormSequence& x);
LetterSeq left_seq(const FormSequence& x);
LetterSeq right_seq(const FormSequence& x);

// For an and-occurrence: (L_x, R_x). For an or-occurrence: (T_y, B_y). Throws BadOccurrence.
std::pair<LetterSeq, LetterSeq> flank(const FormSequence& x, const ConnOccurrence& occ);

// Throws NotDiversified and WouldEraseAll.
FormSequence delete_letters(const FormSequence& x, const std::set<std::string>& letters);
FormSet delete_letters(const FormSet& x, const std::set<std::string>& letters);

struct Borders {
    LetterSeq left, right, top, bottom;
};
Borders borders(const FormSequence& x);

using LetterRelation = std::set<std::pair<std::string, std::string>>;
struct Adjacency {
    LetterRelation above;           // (upper, lower)
    LetterRelation above_closure;
    LetterRelation left_of;         // (left, right)
    LetterRelation left_of_closure;
};
Adjacency above_below(const FormSequence& x);
LetterRelation transitive_closure(const LetterRelation& r);

std::vector<std::vector<ConnOccurrence>> transversals(const FormSequence& x);

}  // namespace intermute
