#pragma once

#include <stdexcept>
#include <string>

namespace gforge {

enum class ErrorKind {
  InvalidArgument,  // malformed input or violated precondition on arguments
  Domain,           // mathematical precondition (non-unit, pole, log-terminal, ...)
  Precision,        // truncation window does not cover the requested coefficient
  Unsupported,      // outside the catalog / model family this engine handles
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gforge
