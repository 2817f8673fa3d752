// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sys2ft {

/// Process exit codes shared by every subcommand.
enum class ExitCode : int {
  kOk = 0,
  kIo = 1,
  kData = 2,
  kConfig = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ExitCode::kIo, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ExitCode::kData, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ExitCode::kConfig, what) {}
};

/// Generic data/contract error (bad input shape, failed precondition).
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ExitCode::kData, what) {}
};

class UnknownNewsId : public DataError {
 public:
  explicit UnknownNewsId(const std::string& id) : DataError("unknown news id: " + id) {}
};

class PreconditionError : public DataError {
 public:
  using DataError::DataError;
};

// Backend failures. Transport and rate-limit failures are retryable, the rest are not.
class BackendError : public Error {
 public:
  explicit BackendError(const std::string& what) : Error(ExitCode::kIo, what) {}
};

class TransportError : public BackendError {
 public:
  using BackendError::BackendError;
};

class ProtocolError : public BackendError {
 public:
  using BackendError::BackendError;
};

class AuthError : public BackendError {
 public:
  using BackendError::BackendError;
};

}  // namespace sys2ft
