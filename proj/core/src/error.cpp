#include "rbx/error.hpp"

namespace rbx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::field_mismatch: return "FieldMismatch";
    case ErrorCode::unsupported_field: return "UnsupportedField";
    case ErrorCode::invalid_field: return "InvalidField";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::algebra_mismatch: return "AlgebraMismatch";
    case ErrorCode::invalid_spec: return "InvalidSpec";
    case ErrorCode::missing_structure: return "MissingStructure";
    case ErrorCode::not_automorphism: return "NotAutomorphism";
    case ErrorCode::invalid_decomposition: return "InvalidDecomposition";
    case ErrorCode::not_quasi_idempotent: return "NotQuasiIdempotent";
    case ErrorCode::not_invertible: return "NotInvertible";
    case ErrorCode::not_derivation: return "NotDerivation";
    case ErrorCode::nonzero_weight: return "NonzeroWeight";
    case ErrorCode::zero_weight: return "ZeroWeight";
    case ErrorCode::invalid_triple: return "InvalidTriple";
    case ErrorCode::not_rb: return "NotRB";
    case ErrorCode::no_square_root: return "NoSquareRoot";
    case ErrorCode::not_applicable: return "NotApplicable";
    case ErrorCode::invalid_witness: return "InvalidWitness";
    case ErrorCode::zero_first_row: return "ZeroFirstRow";
    case ErrorCode::constraint_violated: return "ConstraintViolated";
    case ErrorCode::not_associative: return "NotAssociative";
    case ErrorCode::degenerate_form: return "DegenerateForm";
    case ErrorCode::search_space_too_large: return "SearchSpaceTooLarge";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace rbx
