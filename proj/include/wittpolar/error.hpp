#pragma once

#include <stdexcept>
#include <string>

namespace wittpolar {

// Every failure raised by the library carries a stable kind string; the CLI
// forwards it verbatim in its JSON diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Malformed input: wrong shapes, unknown names, violated preconditions.
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message) : Error("InvalidInput", message) {}
};

// A check that must hold for correct code failed. The CLI maps this to exit 2.
class InternalInvariant : public Error {
 public:
  explicit InternalInvariant(const std::string& message)
      : Error("InternalInvariant", message) {}
};

class IntegralityViolation : public Error {
 public:
  explicit IntegralityViolation(const std::string& message)
      : Error("IntegralityViolation", message) {}
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::size_t var)
      : Error("UnboundVariable", "variable " + std::to_string(var) + " has no binding"),
        var_(var) {}
  std::size_t variable() const noexcept { return var_; }

 private:
  std::size_t var_;
};

class DworkCongruenceFailed : public Error {
 public:
  explicit DworkCongruenceFailed(unsigned level)
      : Error("DworkCongruenceFailed",
              "ghost sequence violates x_m = phi(x_{m-1}) mod p^m at level " +
                  std::to_string(level)),
        level_(level) {}
  unsigned level() const noexcept { return level_; }

 private:
  unsigned level_;
};

class LengthNotAdmissible : public Error {
 public:
  LengthNotAdmissible(std::size_t n, unsigned p)
      : Error("LengthNotAdmissible", std::to_string(n) + " factors cannot be multiplied with a " +
                                         std::to_string(p) + "-ary product") {}
};

class NotReduced : public Error {
 public:
  explicit NotReduced(const std::string& message) : Error("NotReduced", message) {}
};

class ExtensionCapExceeded : public Error {
 public:
  explicit ExtensionCapExceeded(const std::string& message)
      : Error("ExtensionCapExceeded", message) {}
};

class StabilizationNotDetected : public Error {
 public:
  StabilizationNotDetected(int index, unsigned cap)
      : Error("StabilizationNotDetected",
              "windowed Witt sum at index " + std::to_string(index) +
                  " did not stabilize within " + std::to_string(cap) + " steps") {}
};

class NonNilpotentElement : public Error {
 public:
  explicit NonNilpotentElement(const std::string& message)
      : Error("NonNilpotentElement", message) {}
};

class LawNotPolar : public Error {
 public:
  explicit LawNotPolar(const std::string& message) : Error("LawNotPolar", message) {}
};

class LawNotIntegral : public Error {
 public:
  explicit LawNotIntegral(const std::string& message) : Error("LawNotIntegral", message) {}
};

class NotAMorphism : public Error {
 public:
  explicit NotAMorphism(const std::string& message) : Error("NotAMorphism", message) {}
};

}  // namespace wittpolar
