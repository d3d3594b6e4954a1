#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilbij {

enum class Errc {
  division_by_zero,
  field_mismatch,
  invalid_field,
  dimension_mismatch,
  non_square,
  not_in_subspace,
  not_complement,
  not_invariant,
  not_automorphism,
  not_nilpotent,
  not_basis,
  invalid_tree,
  invalid_vertex,
  invalid_function,
  budget_exceeded,
  parse_error,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library. `code()` identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nilbij
