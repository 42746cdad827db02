#pragma once

#include <stdexcept>
#include <string>

namespace lie2coh {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define LIE2COH_ERROR(Name)                  \
    class Name : public Error {              \
    public:                                  \
        explicit Name(const std::string& m)  \
            : Error(#Name ": " + m) {}       \
    };

LIE2COH_ERROR(ShapeMismatch)
LIE2COH_ERROR(DegreeMismatch)
LIE2COH_ERROR(CompositionNonzero)
LIE2COH_ERROR(NotARepresentation)
LIE2COH_ERROR(NotInjective)
LIE2COH_ERROR(NotCompatible)
LIE2COH_ERROR(NotACocycle)
LIE2COH_ERROR(NotADerivation)
LIE2COH_ERROR(DegreeOutOfRange)
LIE2COH_ERROR(UnsupportedRepresentation)
LIE2COH_ERROR(NotNilpotent)
LIE2COH_ERROR(NotADifferential)
LIE2COH_ERROR(InvariantViolated)
LIE2COH_ERROR(AmbientTooLarge)

#undef LIE2COH_ERROR

// Carries which hypothesis failed and where, for the CLI.
class HypothesisViolated : public Error {
public:
    HypothesisViolated(std::string which, std::string where)
        : Error("HypothesisViolated(" + which + "): " + where), which_(std::move(which)),
          where_(std::move(where))
    {
    }
    const std::string& which() const { return which_; }
    const std::string& where() const { return where_; }

private:
    std::string which_, where_;
};

// Malformed or ill-shaped definition file; line and column are 1-based, 0 when
// unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
        : Error("ParseError" + (line ? " at line " + std::to_string(line) + ", column " + std::to_string(column) : std::string()) +
                ": " + msg),
          line_(line), column_(column)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

}  // namespace lie2coh
