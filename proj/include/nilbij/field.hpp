#pragma once

// Finite fields GF(p^k) in the polynomial basis.
//
// An element is stored as its integer code: the base-p digits d_0..d_{k-1}
// (little-endian) are the coefficients of d_0 + d_1 x + ... + d_{k-1} x^{k-1}
// modulo the defining polynomial. Code 0 is zero and code 1 is one.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "nilbij/error.hpp"

namespace nilbij {

using Code = std::uint32_t;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  // Monic defining polynomial c_0..c_k. Empty for prime fields.
  std::vector<std::uint32_t> poly;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Conway polynomial for q in {4, 8, 9, 16, 25, 27}, as c_0..c_k.
std::optional<std::vector<std::uint32_t>> builtin_polynomial(std::uint32_t p, std::uint32_t k);

bool is_prime(std::uint64_t n) noexcept;

/// True iff `poly` (c_0..c_k, monic) has no monic factor of degree 1..k/2 over GF(p).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Validates `spec` and builds the field. A missing poly for k > 1 is
  /// taken from the built-in table; anything else invalid throws InvalidField.
  static FieldPtr make(FieldSpec spec);
  static FieldPtr prime(std::uint32_t p) { return make(FieldSpec{p, 1, {}}); }

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t characteristic() const noexcept { return spec_.p; }
  std::uint32_t degree() const noexcept { return spec_.k; }
  std::uint32_t order() const noexcept { return q_; }

  bool contains(Code a) const noexcept { return a < q_; }

  Code add(Code a, Code b) const noexcept {
    return add_.empty() ? add_slow(a, b) : add_[a * q_ + b];
  }
  Code neg(Code a) const noexcept { return neg_.empty() ? neg_slow(a) : neg_[a]; }
  Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }
  Code mul(Code a, Code b) const noexcept {
    return mul_.empty() ? mul_slow(a, b) : mul_[a * q_ + b];
  }
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const noexcept;

  bool operator==(const Field& other) const noexcept { return spec_ == other.spec_; }

 private:
  explicit Field(FieldSpec spec);

  Code add_slow(Code a, Code b) const noexcept;
  Code neg_slow(Code a) const noexcept;
  Code mul_slow(Code a, Code b) const noexcept;
  Code inv_slow(Code a) const noexcept;

  FieldSpec spec_;
  std::uint32_t q_;
  // Lookup tables, filled when q is small enough.
  std::vector<Code> add_, neg_, mul_, inv_;
};

/// True iff both pointers denote the same field (identical FieldSpec).
inline bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

void require_same_field(const FieldPtr& a, const FieldPtr& b);

/// A field element bound to its field. Arithmetic between elements of
/// different fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Code code);

  const FieldPtr& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(code_)}; }

  FieldElement inv() const { return {field_, field_->inv(code_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

  bool operator==(const FieldElement& o) const noexcept {
    return code_ == o.code_ && same_field(field_, o.field_);
  }

 private:
  FieldPtr field_;
  Code code_;
};

inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement neg(const FieldElement& a) { return -a; }
inline FieldElement inv(const FieldElement& a) { return a.inv(); }
inline FieldElement pow(const FieldElement& a, std::uint64_t e) { return a.pow(e); }

/// All q elements in ascending code order.
std::vector<FieldElement> enumerate_elements(const FieldPtr& field);

}  // namespace nilbij
