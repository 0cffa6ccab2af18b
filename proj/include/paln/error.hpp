// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PALN_ERROR_HPP
#define PALN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace paln {

enum class ErrorCode {
  InvalidArgument,
  DimMismatch,
  EmptyInput,
  NonFinite,
  NotACheckpoint,
  UnsupportedVersion,
  TruncatedFile,
  CorruptCheckpoint,
  IoError,
  Diverged,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace paln

#endif  // PALN_ERROR_HPP
