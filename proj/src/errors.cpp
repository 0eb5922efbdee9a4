#include "errors.hpp"

namespace galoisdr {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::NotAnEmbedding: return "NotAnEmbedding";
    case ErrorCode::NoEmbedding: return "NoEmbedding";
    case ErrorCode::RamifiedOrBadPrime: return "RamifiedOrBadPrime";
    case ErrorCode::RamifiedInfinitePlace: return "RamifiedInfinitePlace";
    case ErrorCode::InconsistentDescent: return "InconsistentDescent";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::CorruptCache: return "CorruptCache";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

}  // namespace galoisdr
