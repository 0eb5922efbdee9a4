#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galoisdr {

// Every failure the library reports maps onto one of these codes. The C API
// and the CLI translate them into status values and exit codes.
enum class ErrorCode {
  InvalidArgument,
  ParseError,
  DegreeCapExceeded,
  NotAnEmbedding,
  NoEmbedding,
  RamifiedOrBadPrime,
  RamifiedInfinitePlace,
  InconsistentDescent,
  AmbientMismatch,
  CorruptCache,
  IoError,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

class GaloisError : public std::runtime_error {
 public:
  GaloisError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw GaloisError(code, what);
}

}  // namespace galoisdr
