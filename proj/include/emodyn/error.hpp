#pragma once

#include <stdexcept>
#include <string>

namespace emodyn {

/// Failure categories used across the library. Each value corresponds to a
/// documented error condition of some operation.
enum class Errc {
  MalformedFile,
  DuplicateId,
  EmptyCorpus,
  RoleAbsent,
  MissingMetadata,
  InsufficientPool,
  OutOfRange,
  MalformedRow,
  EmptyStream,
  TooFewSamples,
  LengthMismatch,
  EmptySample,
  EmptyInput,
  NoVerdicts,
  MissingGold,
  TaggerUnreachable,
  IoError,
  ConfigError,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace emodyn
