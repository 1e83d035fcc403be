#pragma once

#include <stdexcept>
#include <string>

namespace mz {

enum class ErrorCode {
  ZeroLeading,
  UnsupportedWeight,
  BadIndex,
  NotInSpace,
  TailUnbounded,
  NotReal,
  DomainError,
  CertificateFailure,
  InconclusiveSign,
  TheoremViolation,
  Usage,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mz
