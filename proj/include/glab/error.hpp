#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glab {

enum class ErrorCode {
  order_cap_exceeded,
  invalid_parameters,
  group_mismatch,
  not_abelian,
  trivial_group,
  not_normal,
  not_a_subgroup,
  unsupported_family_rank,
  not_a_root,
  zero_parameter,
  invalid_root,
  not_unitriangular,
  not_diagonal,
  not_regular,
  field_too_small,
  noncentral_required,
  search_exhausted,
  not_symmetric,
  precondition_violation,
  out_of_table,
  degenerate_abelian,
  not_simple_nonabelian,
  overlap_violation,
  length_mismatch,
  even_length,
  not_thick,
  omega_too_small_and_no_fallback,
  identity_sigma,
  table_incomplete,
  invalid_cocycle,
  premise_violation,
  syntax_error,
  io_error,
};

std::string_view to_string(ErrorCode code);

// All module failures surface as this exception; `code()` is the
// machine-readable tag, `what()` carries the human context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace glab
