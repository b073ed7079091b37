#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace endok {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  explicit NotPrime(unsigned long p)
      : Error("field characteristic " + std::to_string(p) + " is not prime") {}
};

class UnsupportedField : public Error {
 public:
  explicit UnsupportedField(const std::string& what)
      : Error(what + " requires the rational field") {}
};

class AssociativityViolation : public Error {
 public:
  AssociativityViolation(std::size_t i, std::size_t j, std::size_t k)
      : Error("associativity fails for basis triple (" + std::to_string(i) + "," +
              std::to_string(j) + "," + std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  std::size_t i, j, k;
};

class UnitViolation : public Error {
 public:
  explicit UnitViolation(std::size_t i)
      : Error("unit axiom fails at basis element " + std::to_string(i)), index(i) {}
  std::size_t index;
};

class NotIdempotent : public Error {
 public:
  NotIdempotent() : Error("element is not idempotent") {}
};

class NotFiniteDimensional : public Error {
 public:
  explicit NotFiniteDimensional(std::size_t bound)
      : Error("paths survive beyond nilpotency bound " + std::to_string(bound)), bound(bound) {}
  std::size_t bound;
};

class ClosureViolation : public Error {
 public:
  ClosureViolation(std::string condition, std::size_t row, std::size_t col)
      : Error("closure condition " + condition + " fails at block (" + std::to_string(row + 1) +
              "," + std::to_string(col + 1) + ")"),
        condition(std::move(condition)), row(row), col(col) {}
  std::string condition;
  std::size_t row, col;
};

class RandomizedSearchExhausted : public Error {
 public:
  RandomizedSearchExhausted(const std::string& what, std::size_t bound)
      : Error(what + ": randomized search exhausted after " + std::to_string(bound) + " samples"),
        bound(bound) {}
  std::size_t bound;
};

class ParentMismatch : public Error {
 public:
  ParentMismatch() : Error("modules are defined over different algebras") {}
};

class ZeroModule : public Error {
 public:
  ZeroModule() : Error("operation requires a nonzero module") {}
};

class NotASubmodule : public Error {
 public:
  NotASubmodule() : Error("subspace is not a submodule") {}
};

class NotAHomomorphism : public Error {
 public:
  NotAHomomorphism() : Error("matrix does not intertwine the module actions") {}
};

class PreconditionFailed : public Error {
 public:
  PreconditionFailed(std::string which, std::size_t degree)
      : Error("precondition " + which + " fails in degree " + std::to_string(degree)),
        which(std::move(which)), degree(degree) {}
  std::string which;
  std::size_t degree;
};

class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(std::size_t bound)
      : Error("construction did not terminate within " + std::to_string(bound) + " steps"),
        bound(bound) {}
  std::size_t bound;
};

class HypothesisNotEstablished : public Error {
 public:
  explicit HypothesisNotEstablished(const std::string& which)
      : Error("hypothesis not established: " + which) {}
};

class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(std::size_t explored)
      : Error("search budget exhausted after " + std::to_string(explored) + " nodes"),
        explored(explored) {}
  std::size_t explored;
};

/// Raised when a certified hypothesis set is followed by a failing conclusion.
/// Indicates a bug in this library, never new mathematics.
class SoundnessViolation : public Error {
 public:
  explicit SoundnessViolation(const std::string& what) : Error("soundness tripwire: " + what) {}
};

/// A command invoked without the inputs it needs.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. `line` is 0 when no position is known.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  std::size_t line;
};

class UnresolvedReference : public SchemaError {
 public:
  UnresolvedReference(const std::string& name, std::size_t line = 0)
      : SchemaError("unresolved reference '" + name + "'", line), name(name) {}
  std::string name;
};

class NonRationalLiteral : public SchemaError {
 public:
  NonRationalLiteral(const std::string& text, std::size_t line = 0)
      : SchemaError("not an exact rational literal: " + text, line), text(text) {}
  std::string text;
};

}  // namespace endok
