#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace x0quartic {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (n = 0, p | N, non-divisor, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Machine-width arithmetic would have wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// An input file or literal could not be parsed.
class ParseError : public Error {
public:
    ParseError(std::string const& source, std::size_t line, std::string const& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Parsed data violates a documented invariant.
class InvariantError : public Error {
public:
    using Error::Error;
};

class UnknownLabelError : public Error {
public:
    explicit UnknownLabelError(std::string const& label)
        : Error("unknown curve label '" + label + "'") {}
};

class BadReductionError : public Error {
public:
    using Error::Error;
};

class MissingTraceError : public Error {
public:
    using Error::Error;
};

/// N/M is neither squarefree nor coprime to M, so the Gram-entry formula does not apply.
class HypothesisError : public Error {
public:
    using Error::Error;
};

class NotPositiveDefiniteError : public Error {
public:
    NotPositiveDefiniteError(std::size_t minor, std::string const& what)
        : Error(what), minor_(minor) {}
    /// 1-based size of the first leading minor that is not positive.
    std::size_t failing_minor() const noexcept { return minor_; }

private:
    std::size_t minor_;
};

/// A condition that can only fail because of a bug in this library.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace x0quartic
