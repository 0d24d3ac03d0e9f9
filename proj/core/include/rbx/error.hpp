#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rbx {

enum class ErrorCode {
  division_by_zero,
  field_mismatch,
  unsupported_field,
  invalid_field,
  dimension_mismatch,
  algebra_mismatch,
  invalid_spec,
  missing_structure,
  not_automorphism,
  invalid_decomposition,
  not_quasi_idempotent,
  not_invertible,
  not_derivation,
  nonzero_weight,
  zero_weight,
  invalid_triple,
  not_rb,
  no_square_root,
  not_applicable,
  invalid_witness,
  zero_first_row,
  constraint_violated,
  not_associative,
  degenerate_form,
  search_space_too_large,
  parse_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace rbx
