#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace intermute {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("position " + std::to_string(position) + ": " + message), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class IllTyped : public Error {
public:
    using Error::Error;
};

// Thrown when a documented precondition of an operation does not hold.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class HasUnits : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

class NotDiversified : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

class BadOccurrence : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

class WouldEraseAll : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

class NotLegitimate : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

class ArityMismatch : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

class UnknownSchema : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

class GeneratorNotInTheory : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

class NotAllSplitting : public PreconditionViolated {
public:
    using PreconditionViolated::PreconditionViolated;
};

}  // namespace intermute
