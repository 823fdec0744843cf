#include "qtpaths/error.hpp"

namespace qtpaths {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadLetter: return "BadLetter";
    case ErrorCode::WrongStepCounts: return "WrongStepCounts";
    case ErrorCode::PrefixBelowDiagonal: return "PrefixBelowDiagonal";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::ColumnDescent: return "ColumnDescent";
    case ErrorCode::BadLabels: return "BadLabels";
    case ErrorCode::NotShuffleForm: return "NotShuffleForm";
    case ErrorCode::DomainUnsupported: return "DomainUnsupported";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::BadCardinality: return "BadCardinality";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NonZeroResidual: return "NonZeroResidual";
    case ErrorCode::NotSchroder: return "NotSchroder";
    case ErrorCode::EmptyChain: return "EmptyChain";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::NotAreaZeroForm: return "NotAreaZeroForm";
    case ErrorCode::NotAreaOne: return "NotAreaOne";
    case ErrorCode::NotInV: return "NotInV";
    case ErrorCode::IndexOutOfOrbit: return "IndexOutOfOrbit";
    case ErrorCode::NotOver: return "NotOver";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, long index)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      index_(index) {}

}  // namespace qtpaths
