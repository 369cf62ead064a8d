#include "glab/error.hpp"

namespace glab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::order_cap_exceeded: return "order_cap_exceeded";
    case ErrorCode::invalid_parameters: return "invalid_parameters";
    case ErrorCode::group_mismatch: return "group_mismatch";
    case ErrorCode::not_abelian: return "not_abelian";
    case ErrorCode::trivial_group: return "trivial_group";
    case ErrorCode::not_normal: return "not_normal";
    case ErrorCode::not_a_subgroup: return "not_a_subgroup";
    case ErrorCode::unsupported_family_rank: return "unsupported_family_rank";
    case ErrorCode::not_a_root: return "not_a_root";
    case ErrorCode::zero_parameter: return "zero_parameter_for_w_or_t";
    case ErrorCode::invalid_root: return "invalid_root";
    case ErrorCode::not_unitriangular: return "not_unitriangular";
    case ErrorCode::not_diagonal: return "not_diagonal";
    case ErrorCode::not_regular: return "not_regular";
    case ErrorCode::field_too_small: return "field_too_small";
    case ErrorCode::noncentral_required: return "noncentral_required";
    case ErrorCode::search_exhausted: return "search_exhausted";
    case ErrorCode::not_symmetric: return "not_symmetric";
    case ErrorCode::precondition_violation: return "precondition_violation";
    case ErrorCode::out_of_table: return "out_of_table";
    case ErrorCode::degenerate_abelian: return "degenerate_abelian";
    case ErrorCode::not_simple_nonabelian: return "not_simple_nonabelian";
    case ErrorCode::overlap_violation: return "overlap_violation";
    case ErrorCode::length_mismatch: return "length_mismatch";
    case ErrorCode::even_length: return "even_length";
    case ErrorCode::not_thick: return "not_thick";
    case ErrorCode::omega_too_small_and_no_fallback: return "omega_too_small_and_no_fallback";
    case ErrorCode::identity_sigma: return "identity_sigma";
    case ErrorCode::table_incomplete: return "table_incomplete";
    case ErrorCode::invalid_cocycle: return "invalid_cocycle";
    case ErrorCode::premise_violation: return "premise_violation";
    case ErrorCode::syntax_error: return "syntax_error";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace glab
