#pragma once

#include <stdexcept>
#include <string>

namespace orbicy {

// Every failure raised by the library derives from Error so callers (the CLI in
// particular) can map families of failures onto exit codes.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed factor specs, unknown presets, wrong argument shapes.
class UsageError : public Error {
   public:
    using Error::Error;
};

class UnknownPreset : public UsageError {
   public:
    explicit UnknownPreset(const std::string& name) : UsageError("unknown preset: " + name) {}
};

class TooFewFactors : public UsageError {
   public:
    explicit TooFewFactors(std::size_t n)
        : UsageError("at least two factors are required, got " + std::to_string(n)) {}
};

class MissingFrobeniusData : public UsageError {
   public:
    using UsageError::UsageError;
};

// Data that parses but violates a documented invariant.
class ValidationError : public Error {
   public:
    using Error::Error;
};

class InvalidRecord : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class OutOfRange : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class PreconditionViolated : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class SingularLinearization : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class InvalidSelfIntersection : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class NonUnitConstantTerm : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class RenderError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class MissingSymbol : public Error {
   public:
    explicit MissingSymbol(const std::string& name)
        : Error("no value for symbol '" + name + "'"), symbol_(name) {}
    const std::string& symbol() const noexcept { return symbol_; }

   private:
    std::string symbol_;
};

class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero") {}
};

class RegistryConflict : public Error {
   public:
    using Error::Error;
};

}  // namespace orbicy
