#include "nilbij/error.hpp"

namespace nilbij {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::invalid_field: return "InvalidField";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::non_square: return "NonSquare";
    case Errc::not_in_subspace: return "NotInSubspace";
    case Errc::not_complement: return "NotComplement";
    case Errc::not_invariant: return "NotInvariant";
    case Errc::not_automorphism: return "NotAutomorphism";
    case Errc::not_nilpotent: return "NotNilpotent";
    case Errc::not_basis: return "NotBasis";
    case Errc::invalid_tree: return "InvalidTree";
    case Errc::invalid_vertex: return "InvalidVertex";
    case Errc::invalid_function: return "InvalidFunction";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace nilbij
