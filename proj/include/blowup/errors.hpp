#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

// Malformed input: bad syntax, out-of-range vertex, comparable clutter edges in strict mode.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation does not hold for the given data.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A configured size cap (oracle vertex bound, Hilbert-basis dimension, enumeration budget).
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

class NotPointedError : public PreconditionError {
 public:
  explicit NotPointedError(const std::string& what) : PreconditionError(what) {}
};

class InfeasibleError : public PreconditionError {
 public:
  explicit InfeasibleError(const std::string& what) : PreconditionError(what) {}
};

}  // namespace blowup
