#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "intermute/arrow.hpp"
#include "intermute/formula.hpp"

namespace intermute {

// A formula context built from units and boxes; boxes are filled left to right.
class Shape {
public:
    enum class Kind : unsigned char { UnitLeaf, Box, Combine };

    static Shape unit(Unit u);
    static Shape box();
    static Shape combine(Conn c, Shape left, Shape right);

    Kind kind() const noexcept;
    Unit unit_value() const;
    Conn conn() const;
    const Shape& left() const;
    const Shape& right() const;
    std::size_t arity() const noexcept;

    // Uses only the connective c and its neutral unit.
    bool is_over(Conn c) const;

    struct Node;

private:
    explicit Shape(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

std::string to_string(const Shape& m);

// Throws ArityMismatch.
Formula instantiate(const Shape& m, const std::vector<Formula>& args);

// M(A1&A1',...) -> M(A) & M(A'), for m over or.
ArrowTerm derive_psi(const Shape& m, const std::vector<Formula>& a, const std::vector<Formula>& a_prime);
// M(A) | M(A') -> M(A1|A1',...), for m over and.
ArrowTerm derive_psibar(const Shape& m, const std::vector<Formula>& a, const std::vector<Formula>& a_prime);
// M(T,...,T) -> T, for m over or.
ArrowTerm derive_pi_top(const Shape& m);
// F -> M(F,...,F), for m over and.
ArrowTerm derive_pi_bot(const Shape& m);

}  // namespace intermute
