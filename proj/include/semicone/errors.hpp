#pragma once

#include <stdexcept>
#include <string>

namespace semicone {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Rejected input: the data itself violates a documented precondition.
class InvalidInput : public Error {
public:
    enum class Kind {
        ZeroGenerator,
        DuplicateGenerator,
        NonMinimalGenerator,
        GcdViolation,
        NotNice,
        NotInSpan,
        OrderViolation,
        NotNumerical,
        LengthMismatch,
        NonHomogeneousInput,
        PreconditionViolated,
        NotInSemigroup,
        Malformed,
    };

    InvalidInput(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// The generator cone is not simplicial (wrong dimension or too many extremal rays).
class NotSimplicial : public Error {
public:
    explicit NotSimplicial(const std::string& what) : Error(what) {}
};

// A configured resource cap was hit before the computation finished.
class ResourceBound : public Error {
public:
    ResourceBound(const std::string& what, std::uint64_t limit)
        : Error(what), limit_(limit) {}
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_ = 0;
};

// An internal invariant failed; indicates a bug, not bad input.
class Internal : public Error {
public:
    explicit Internal(const std::string& what) : Error(what) {}
};

inline const char* kind_name(InvalidInput::Kind k) {
    switch (k) {
    case InvalidInput::Kind::ZeroGenerator: return "zero_generator";
    case InvalidInput::Kind::DuplicateGenerator: return "duplicate_generator";
    case InvalidInput::Kind::NonMinimalGenerator: return "non_minimal_generator";
    case InvalidInput::Kind::GcdViolation: return "gcd_violation";
    case InvalidInput::Kind::NotNice: return "not_nice";
    case InvalidInput::Kind::NotInSpan: return "not_in_span";
    case InvalidInput::Kind::OrderViolation: return "order_violation";
    case InvalidInput::Kind::NotNumerical: return "not_numerical";
    case InvalidInput::Kind::LengthMismatch: return "length_mismatch";
    case InvalidInput::Kind::NonHomogeneousInput: return "non_homogeneous_input";
    case InvalidInput::Kind::PreconditionViolated: return "precondition_violated";
    case InvalidInput::Kind::NotInSemigroup: return "not_in_semigroup";
    case InvalidInput::Kind::Malformed: return "malformed";
    }
    return "unknown";
}

}  // namespace semicone
