#pragma once

#include <stdexcept>
#include <string>

namespace kcoal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad parameters: family sizes, out-of-range vertex ids, k < 1, etc.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An operation's documented precondition does not hold on its input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Blocks overlap, leave a vertex uncovered, or are empty.
class InvalidPartition : public Error {
public:
    using Error::Error;
};

/// The exact search would exceed its configured vertex or node budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

enum class ParseErrorKind {
    MalformedHeader,
    MalformedLine,
    VertexOutOfRange,
    LoopEdge,
    DuplicateEdge,
    EdgeCountMismatch,
    DuplicateVertex,
    BadFamily,
};

const char * to_string(ParseErrorKind kind);

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string & detail);

    ParseErrorKind kind() const { return kind_; }
    /// 1-based physical line, 0 when not tied to a line.
    int line() const { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

} // namespace kcoal
