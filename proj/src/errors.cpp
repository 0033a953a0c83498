#include "gamma/errors.hpp"

namespace gamma {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::SpectrumOutsideDomain: return "SpectrumOutsideDomain";
    case ErrorCode::TriangularizationFailed: return "TriangularizationFailed";
    case ErrorCode::NotAContraction: return "NotAContraction";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::CommutativityFailed: return "CommutativityFailed";
    case ErrorCode::NotAnIsometry: return "NotAnIsometry";
    case ErrorCode::TruncationHorizonTooSmall: return "TruncationHorizonTooSmall";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::IterationDivergence: return "IterationDivergence";
    case ErrorCode::IllDefinedQuotient: return "IllDefinedQuotient";
    case ErrorCode::NotCNU: return "NotCNU";
    case ErrorCode::GridInadequate: return "GridInadequate";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::IllConditionedGram: return "IllConditionedGram";
    case ErrorCode::EvaluationSingular: return "EvaluationSingular";
    case ErrorCode::SampleBudgetExceeded: return "SampleBudgetExceeded";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace gamma
