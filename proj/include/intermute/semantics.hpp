#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "intermute/arrow.hpp"

namespace intermute {

// Pairs (source occurrence, target occurrence), occurrences numbered left to right.
struct Relation {
    std::size_t source_size = 0;
    std::size_t target_size = 0;
    std::set<std::pair<std::size_t, std::size_t>> pairs;

    static Relation identity(std::size_t n);
    friend bool operator==(const Relation&, const Relation&) = default;
};

Relation compose(const Relation& after, const Relation& before);
Relation placed_side_by_side(const Relation& left, const Relation& right);
bool is_bijection(const Relation& r);
std::string to_string(const Relation& r);

using Natural = boost::multiprecision::cpp_int;

// rows = occurrences of the target, cols = occurrences of the source
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Natural& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
    Natural& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Natural> data_;
};

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b);
bool is_permutation_matrix(const IntMatrix& m);
Relation support(const IntMatrix& m);
// One line per row.
std::string to_string(const IntMatrix& m);

// Occurrence links of a generator as (source occurrence, target occurrence).
std::vector<std::pair<std::size_t, std::size_t>> generator_links(const Generator& g);

// At a composition whose boundary objects differ syntactically (only possible outside
// Objects::Formulas), the k-th occurrence of each letter is glued to its k-th occurrence.
// Throws IllTyped.
Relation eval_rel(const ArrowTerm& f, Objects mode = Objects::Formulas);
IntMatrix eval_mat(const ArrowTerm& f, Objects mode = Objects::Formulas);

// The image of a term between diversified objects with occurrences named by their letters,
// as (source letter, target letter) pairs. Throws IllTyped and NotDiversified.
std::set<std::pair<std::string, std::string>> letter_links(const ArrowTerm& f, Objects mode = Objects::Formulas);

}  // namespace intermute
