#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "intermute/arrow.hpp"
#include "intermute/theory.hpp"

namespace intermute {

struct Equation {
    ArrowTerm lhs;
    ArrowTerm rhs;
};

struct Schema {
    std::string name;
    std::string family;
    std::size_t arity = 0;
    std::function<Equation(const std::vector<Formula>&)> build;
};

const std::vector<Schema>& schema_catalogue();
// Throws UnknownSchema.
const Schema& find_schema(const std::string& name);
// Theories containing every generator of the schema.
std::vector<TheoryId> schema_theories(const Schema& s);

// Both sides well-typed with the same type and the same matrix image.
// Throws ArityMismatch.
bool check_equation(const Schema& s, const std::vector<Formula>& instantiation);
// Throws UnknownSchema and ArityMismatch.
bool check_equation(const std::string& name, const std::vector<Formula>& instantiation);

// (A*B)*(C*D) -> (A*C)*(B*D) from associativity and commutativity.
ArrowTerm middle_interchange(Conn c, const Formula& a, const Formula& b, const Formula& cc, const Formula& d);

}  // namespace intermute
