#pragma once

#include <stdexcept>
#include <string>

namespace qtpaths {

enum class ErrorCode {
  BadLetter,
  WrongStepCounts,
  PrefixBelowDiagonal,
  LimitExceeded,
  ColumnDescent,
  BadLabels,
  NotShuffleForm,
  DomainUnsupported,
  PreconditionFailed,
  BadShape,
  BadCardinality,
  NotSymmetric,
  NonZeroResidual,
  NotSchroder,
  EmptyChain,
  NotInImage,
  NotAreaZeroForm,
  NotAreaOne,
  NotInV,
  IndexOutOfOrbit,
  NotOver,
  OutOfRange,
  ParseError,
};

const char* to_string(ErrorCode code);

// Every library failure is reported through this type. `index` carries a
// position when one is meaningful (first bad prefix, offending row, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, long index = -1);

  ErrorCode code() const { return code_; }
  long index() const { return index_; }

 private:
  ErrorCode code_;
  long index_;
};

}  // namespace qtpaths
