#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace orthant {

// Three classes of failure, mapped to CLI exit codes:
//   InputError    -> exit 1 (bad user input: syntax, unknown variable, bad flags)
//   DomainError   -> exit 1 (valid input, operation cannot proceed on it)
//   InternalError -> exit 2 (states the theory rules out; reaching one is a bug
//                    or a refuted certificate and is never silently ignored)
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class InputError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& msg, int line, int col)
        : InputError("SyntaxError",
                     msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line_(line), col_(col) {}
    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }

private:
    int line_;
    int col_;
};

class DegeneratePolynomial : public DomainError {
public:
    explicit DegeneratePolynomial(const std::string& msg = "polynomial is a pure power of Z")
        : DomainError("DegeneratePolynomial", msg) {}
};

class TruncationTooSmall : public DomainError {
public:
    explicit TruncationTooSmall(const std::string& msg)
        : DomainError("TruncationTooSmall", msg) {}
};

class DegreeBoundExceeded : public DomainError {
public:
    DegreeBoundExceeded(std::int64_t degree, std::int64_t bound)
        : DomainError("DegreeBoundExceeded",
                      "squarefree part of degree " + std::to_string(degree) +
                          " exceeds the configured factorization bound " + std::to_string(bound)),
          degree_(degree), bound_(bound) {}
    std::int64_t degree() const noexcept { return degree_; }
    std::int64_t bound() const noexcept { return bound_; }

private:
    std::int64_t degree_;
    std::int64_t bound_;
};

class CharacteristicTwo : public DomainError {
public:
    explicit CharacteristicTwo(const std::string& msg = "operation requires characteristic != 2")
        : DomainError("CharacteristicTwo", msg) {}
};

class NotCoprimeSeeds : public DomainError {
public:
    explicit NotCoprimeSeeds(const std::string& msg)
        : DomainError("NotCoprimeSeeds", msg) {}
};

}  // namespace orthant
