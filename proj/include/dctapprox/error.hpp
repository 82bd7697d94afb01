#pragma once

#include <stdexcept>
#include <string>

namespace dctapprox {

enum class ErrorKind {
  kInvalidParameter,
  kInvalidSize,
  kShape,
  kInfeasible,
  kInvalidModel,
  kSingular,
  kPolicy,
  kDivision,
  kParse,
  kIo,
};

/// Base error for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dctapprox
