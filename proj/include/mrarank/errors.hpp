#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mrarank {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto its exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Precondition violated by the arguments (subset not contained in a word,
// size out of range, unobserved subset, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A configured size cap would be exceeded (alpha table size, dense matrices).
class ResourceError : public Error {
public:
    using Error::Error;
};

// A structural audit found a mismatch.
class AuditFailure : public Error {
public:
    using Error::Error;
};

}  // namespace mrarank
