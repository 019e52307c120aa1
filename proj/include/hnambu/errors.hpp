#ifndef HNAMBU_ERRORS_HPP
#define HNAMBU_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hnambu {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HNAMBU_DEFINE_ERROR(Name)            \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    }

HNAMBU_DEFINE_ERROR(ArityMismatch);
HNAMBU_DEFINE_ERROR(DimMismatch);
HNAMBU_DEFINE_ERROR(IndexOutOfRange);
HNAMBU_DEFINE_ERROR(DomainError);
HNAMBU_DEFINE_ERROR(NotASubspace);
HNAMBU_DEFINE_ERROR(NotAMorphism);
HNAMBU_DEFINE_ERROR(NotLeibniz);
HNAMBU_DEFINE_ERROR(NotMultiplicative);
HNAMBU_DEFINE_ERROR(TwistCommutationFailure);
HNAMBU_DEFINE_ERROR(NotFixedPoint);
HNAMBU_DEFINE_ERROR(NotARepresentation);
HNAMBU_DEFINE_ERROR(NotACocycle);
HNAMBU_DEFINE_ERROR(RangeError);
HNAMBU_DEFINE_ERROR(DuplicateKey);

// A postcondition that a proven statement guarantees did not hold.
HNAMBU_DEFINE_ERROR(TheoremViolation);

#undef HNAMBU_DEFINE_ERROR

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

}  // namespace hnambu

#endif  // HNAMBU_ERRORS_HPP
