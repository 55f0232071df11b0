#pragma once

#include <stdexcept>
#include <string>

namespace hhv {

enum class ErrorCode {
  Domain = 1,
  Param = 2,
  NoConvergence = 3,
  EmptySweep = 4,
  Config = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Argument outside the function's domain.
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

// Invalid parameter combination for a formula.
struct ParamError : Error {
  explicit ParamError(const std::string& what) : Error(ErrorCode::Param, what) {}
};

// Quadrature refinement budget exhausted.
struct NoConvergence : Error {
  explicit NoConvergence(const std::string& what) : Error(ErrorCode::NoConvergence, what) {}
};

struct EmptySweep : Error {
  explicit EmptySweep(const std::string& what) : Error(ErrorCode::EmptySweep, what) {}
};

// Malformed function spec, sweep config or flag value.
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(ErrorCode::Config, what) {}
};

}  // namespace hhv
