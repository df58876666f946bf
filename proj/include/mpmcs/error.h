/// @file error.h
/// Exception hierarchy shared by all modules.
#ifndef MPMCS_ERROR_H_
#define MPMCS_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace mpmcs {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Fault-tree input that violates the schema or the model invariants.
class ValidationError : public Error {
 public:
  enum class Kind {
    kMalformedJson,
    kSchema,
    kUnknownNodeKind,
    kDanglingReference,
    kCycle,
    kDuplicateId,
    kProbabilityOutOfRange,
    kMissingTop,
    kUnreachableNode,
    kEmptyGate,
    kDuplicateChild,
  };

  ValidationError(Kind kind, std::string node_id, const std::string& msg)
      : Error(msg), kind_(kind), node_id_(std::move(node_id)) {}

  Kind kind() const { return kind_; }
  /// Identifier of the offending node; empty when not node-specific.
  const std::string& node_id() const { return node_id_; }

 private:
  Kind kind_;
  std::string node_id_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The hard clauses admit no model.
class UnsatisfiableError : public Error {
 public:
  using Error::Error;
};

/// The time budget ran out before any model was found.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// Best-first search frontier grew beyond its configured cap.
class MemoryLimitError : public Error {
 public:
  using Error::Error;
};

/// A portfolio worker was stopped before finding any model.
class CancelledError : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration refused: too many basic events.
class TooManyEventsError : public Error {
 public:
  using Error::Error;
};

/// Results that contradict themselves; indicates a solver bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mpmcs

#endif  // MPMCS_ERROR_H_
