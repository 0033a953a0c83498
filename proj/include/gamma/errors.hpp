#ifndef GAMMA_ERRORS_HPP
#define GAMMA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gamma {

// Stable machine-readable failure codes. The CLI prints the code verbatim,
// so renaming an enumerator is a breaking interface change.
enum class ErrorCode {
  NotCommuting,
  SpectrumOutsideDomain,
  TriangularizationFailed,
  NotAContraction,
  NotUnitary,
  ArityMismatch,
  DimensionMismatch,
  ResidualTooLarge,
  CommutativityFailed,
  NotAnIsometry,
  TruncationHorizonTooSmall,
  TruncationInsufficient,
  IterationDivergence,
  IllDefinedQuotient,
  NotCNU,
  GridInadequate,
  NotMinimal,
  IllConditionedGram,
  EvaluationSingular,
  SampleBudgetExceeded,
  NonFiniteInput,
  ConfigError,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gamma

#endif
