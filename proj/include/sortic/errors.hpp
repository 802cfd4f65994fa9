// Error types shared across the library. Parse errors carry a source
// position; precondition violations and internal invariant breaches map to
// distinct CLI exit codes.

#ifndef SORTIC_ERRORS_HPP
#define SORTIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sortic {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what_arg),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal invariant failed; always a bug, never a user error.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sortic

#define SORTIC_REQUIRE(cond, msg)                        \
    do {                                                 \
        if (!(cond)) throw sortic::PreconditionError(msg); \
    } while (0)

#define SORTIC_CHECK(cond, msg)                       \
    do {                                              \
        if (!(cond)) throw sortic::InternalError(msg); \
    } while (0)

#endif
