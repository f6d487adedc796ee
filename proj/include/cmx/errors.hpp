// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cmx {

enum class ErrorCode {
  invalid_argument = 1,
  domain = 2,           // coordinates on or outside a coordinate singularity
  not_quantized = 3,    // S3 closed form requested at a non-spectral frequency
  convergence = 4,      // hypergeometric series did not converge / hit a pole
  integration = 5,      // ODE integration failed (step underflow etc.)
  constraint = 6,       // auxiliary component of a field vector is not zero
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cmx
