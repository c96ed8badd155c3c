#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cutseq {

// Every library error carries a short stable code ("overflow",
// "not_a_factor", ...) so front ends can map it to exit codes and
// machine-readable diagnostics without parsing prose.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Exact 64-bit arithmetic overflowed, or a word would exceed the
// configured materialization cap.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error("overflow", what) {}
};

// Argument outside the library's domain (d < 2, index out of range,
// mismatched parameters, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain", what) {}

protected:
    DomainError(std::string code, const std::string& what)
        : Error(std::move(code), what) {}
};

class EmptyWordError : public DomainError {
public:
    explicit EmptyWordError(const std::string& what)
        : DomainError("empty_word", what) {}
};

class InvalidAlphabetError : public DomainError {
public:
    explicit InvalidAlphabetError(const std::string& what)
        : DomainError("invalid_alphabet", what) {}
};

class NotAFactorError : public DomainError {
public:
    explicit NotAFactorError(const std::string& what)
        : DomainError("not_a_factor", what) {}
};

// A signed concatenation did not collapse to a pure positive, empty or
// inverse word.  Reaching this from library code means a caller bug or a
// non-factor input slipping past validation.
class IrreducibleProductError : public Error {
public:
    explicit IrreducibleProductError(const std::string& what)
        : Error("irreducible_product", what) {}
};

}  // namespace cutseq
