#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vfindex {

/// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax error in a polynomial expression or a germ definition file.
/// `position` is a 0-based byte offset into the offending text.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          raw_(msg),
          position_(position) {}
    std::size_t position() const { return position_; }
    const std::string& raw_message() const { return raw_; }

private:
    std::string raw_;
    std::size_t position_;
};

/// Operands built over different variable contexts or orders were mixed.
class ContextMismatchError : public Error {
public:
    using Error::Error;
};

/// A quotient that must be finite-dimensional is not; `variable` names a
/// direction witnessing the failure (a variable with no pure power among
/// the leading terms) when one is known.
class NonIsolatedError : public Error {
public:
    NonIsolatedError(const std::string& msg, std::string variable = {})
        : Error(variable.empty() ? msg : msg + " (offending direction: " + variable + ")"),
          variable_(std::move(variable)) {}
    const std::string& variable() const { return variable_; }

private:
    std::string variable_;
};

/// The vector field is not tangent to the germ.
class NotTangentError : public Error {
public:
    using Error::Error;
};

/// A homology group of the contraction complex has infinite dimension.
class InfiniteDimensionError : public Error {
public:
    InfiniteDimensionError(const std::string& msg, int degree)
        : Error(msg + " (degree " + std::to_string(degree) + ")"), degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

/// An identity the engine guarantees by construction failed; always a bug.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

/// The --max-spairs budget was exhausted.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// GSV/virtual equality is not asserted for complete intersections with
/// k >= 2; thrown unless the caller opts into the homological value.
class IcisEqualityUnknownError : public Error {
public:
    using Error::Error;
};

} // namespace vfindex
