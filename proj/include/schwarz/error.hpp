#pragma once

#include <stdexcept>
#include <string>

namespace schwarz {

// Base error carrying a short machine-readable code next to the message.
// Codes surface in CLI JSON output and map to exit code 1.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed input text; position is a 0-based byte offset into the source.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error("parse", msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

// A precondition of an operation was violated (degenerate input, bad parameter).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("domain", msg) {}
};

// A numeric procedure failed to converge or could not separate values at the
// working precision; retrying with more bits is the usual remedy.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error("numeric", msg) {}
};

} // namespace schwarz
