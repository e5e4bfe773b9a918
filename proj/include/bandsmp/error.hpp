// Error type shared by every bandsmp module.

#ifndef BANDSMP_ERROR_HPP_
#define BANDSMP_ERROR_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace bandsmp {

  enum class ErrorCode {
    NotIdempotent,
    NotAssociative,
    OutOfRange,
    MalformedTable,
    UnknownName,
    SizeBoundExceeded,
    ArityMismatch,
    CapExceeded,
    EmptyWord,
    UnboundVariable,
    ArityTooLarge,
    UnsupportedIndex,
    BudgetExceeded,
    NotAWitness,
    UnexpectedSize,
    PreconditionViolated,
    LambdaNotSatisfied,
    NotTractable,
    IndexOutOfRange,
    SyntaxError,
    UnusedVariable,
    NotAWitnessingWord,
    TooManyVariables,
    IoError,
  };

  inline char const* to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::NotIdempotent: return "NotIdempotent";
      case ErrorCode::NotAssociative: return "NotAssociative";
      case ErrorCode::OutOfRange: return "OutOfRange";
      case ErrorCode::MalformedTable: return "MalformedTable";
      case ErrorCode::UnknownName: return "UnknownName";
      case ErrorCode::SizeBoundExceeded: return "SizeBoundExceeded";
      case ErrorCode::ArityMismatch: return "ArityMismatch";
      case ErrorCode::CapExceeded: return "CapExceeded";
      case ErrorCode::EmptyWord: return "EmptyWord";
      case ErrorCode::UnboundVariable: return "UnboundVariable";
      case ErrorCode::ArityTooLarge: return "ArityTooLarge";
      case ErrorCode::UnsupportedIndex: return "UnsupportedIndex";
      case ErrorCode::BudgetExceeded: return "BudgetExceeded";
      case ErrorCode::NotAWitness: return "NotAWitness";
      case ErrorCode::UnexpectedSize: return "UnexpectedSize";
      case ErrorCode::PreconditionViolated: return "PreconditionViolated";
      case ErrorCode::LambdaNotSatisfied: return "LambdaNotSatisfied";
      case ErrorCode::NotTractable: return "NotTractable";
      case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
      case ErrorCode::SyntaxError: return "SyntaxError";
      case ErrorCode::UnusedVariable: return "UnusedVariable";
      case ErrorCode::NotAWitnessingWord: return "NotAWitnessingWord";
      case ErrorCode::TooManyVariables: return "TooManyVariables";
      case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
  }

  //! Exception thrown by all bandsmp operations. The message is prefixed by
  //! the error name, e.g. "NotIdempotent: 2*2 = 1".
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& detail)
        : std::runtime_error(std::string(bandsmp::to_string(code)) + ": "
                             + detail),
          _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

    [[nodiscard]] char const* name() const noexcept {
      return bandsmp::to_string(_code);
    }

   private:
    ErrorCode _code;
  };

}  // namespace bandsmp

#endif  // BANDSMP_ERROR_HPP_
