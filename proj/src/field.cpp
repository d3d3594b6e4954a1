#include "nilbij/field.hpp"

#include <limits>
#include <string>

namespace nilbij {

namespace {

constexpr std::uint32_t kTableLimit = 256;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

using Poly = std::vector<std::uint32_t>;

std::uint64_t checked_order(std::uint32_t p, std::uint32_t k) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(Errc::invalid_field, "field order exceeds 2^31");
    }
  }
  return q;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::size_t shift = a.size() - m.size();
    const std::uint64_t factor = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = factor * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> builtin_polynomial(std::uint32_t p, std::uint32_t k) {
  if (p == 2 && k == 2) return Poly{1, 1, 1};
  if (p == 2 && k == 3) return Poly{1, 1, 0, 1};
  if (p == 2 && k == 4) return Poly{1, 1, 0, 0, 1};
  if (p == 3 && k == 2) return Poly{2, 2, 1};
  if (p == 3 && k == 3) return Poly{1, 2, 0, 1};
  if (p == 5 && k == 2) return Poly{2, 4, 1};
  return std::nullopt;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  if (poly.size() < 2) return false;
  const std::size_t k = poly.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    // Monic candidates of degree d: the low d coefficients run over p^d values.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly divisor(d + 1, 0);
    divisor[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_mod(poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldPtr Field::make(FieldSpec spec) {
  if (!is_prime(spec.p)) {
    throw Error(Errc::invalid_field, "characteristic " + std::to_string(spec.p) + " is not prime");
  }
  if (spec.k == 0) throw Error(Errc::invalid_field, "extension degree must be at least 1");
  checked_order(spec.p, spec.k);
  if (spec.k == 1) {
    if (!spec.poly.empty() && !(spec.poly.size() == 2 && spec.poly[1] == 1 && spec.poly[0] < spec.p)) {
      throw Error(Errc::invalid_field, "a prime field takes no polynomial");
    }
    spec.poly.clear();
  } else {
    if (spec.poly.empty()) {
      auto builtin = builtin_polynomial(spec.p, spec.k);
      if (!builtin) {
        throw Error(Errc::invalid_field, "no built-in polynomial for q = " + std::to_string(spec.p) +
                                             "^" + std::to_string(spec.k) + "; supply one");
      }
      spec.poly = *builtin;
    }
    if (spec.poly.size() != spec.k + 1 || spec.poly.back() != 1) {
      throw Error(Errc::invalid_field, "polynomial must be monic of degree k");
    }
    for (auto c : spec.poly) {
      if (c >= spec.p) throw Error(Errc::invalid_field, "polynomial coefficient out of range");
    }
    if (!is_irreducible(spec.p, spec.poly)) {
      throw Error(Errc::invalid_field, "polynomial is reducible");
    }
  }
  return FieldPtr(new Field(std::move(spec)));
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  q_ = static_cast<std::uint32_t>(checked_order(spec_.p, spec_.k));
  if (q_ > kTableLimit) return;
  std::vector<Code> add(std::size_t{q_} * q_), mul(std::size_t{q_} * q_), neg(q_), inv(q_, 0);
  for (Code a = 0; a < q_; ++a) {
    neg[a] = neg_slow(a);
    if (a != 0) inv[a] = inv_slow(a);
    for (Code b = 0; b < q_; ++b) {
      add[a * q_ + b] = add_slow(a, b);
      mul[a * q_ + b] = mul_slow(a, b);
    }
  }
  add_ = std::move(add);
  mul_ = std::move(mul);
  neg_ = std::move(neg);
  inv_ = std::move(inv);
}

Code Field::add_slow(Code a, Code b) const noexcept {
  const std::uint32_t p = spec_.p;
  if (spec_.k == 1) return static_cast<Code>((std::uint64_t{a} + b) % p);
  Code result = 0, place = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    result += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return result;
}

Code Field::neg_slow(Code a) const noexcept {
  const std::uint32_t p = spec_.p;
  if (spec_.k == 1) return a == 0 ? 0 : p - a;
  Code result = 0, place = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    result += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return result;
}

Code Field::mul_slow(Code a, Code b) const noexcept {
  const std::uint32_t p = spec_.p;
  if (spec_.k == 1) return static_cast<Code>(std::uint64_t{a} * b % p);
  const std::uint32_t k = spec_.k;
  Poly da(k), db(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  Poly prod(2 * k - 1, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
    }
  }
  const Poly rem = poly_mod(std::move(prod), spec_.poly, p);
  Code result = 0;
  for (std::size_t i = rem.size(); i-- > 0;) result = result * p + rem[i];
  return result;
}

Code Field::inv_slow(Code a) const noexcept {
  if (spec_.k == 1) return inv_mod(a, spec_.p);
  // The multiplicative group has order q - 1.
  return pow(a, std::uint64_t{q_} - 2);
}

Code Field::inv(Code a) const {
  if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero");
  return inv_.empty() ? inv_slow(a) : inv_[a];
}

Code Field::pow(Code a, std::uint64_t e) const noexcept {
  Code result = 1;
  Code base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw Error(Errc::field_mismatch, "operands belong to different fields");
}

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_) throw Error(Errc::invalid_field, "null field");
  if (!field_->contains(code_)) {
    throw Error(Errc::invalid_field, "code " + std::to_string(code_) + " outside GF(" +
                                         std::to_string(field_->order()) + ")");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->mul(code_, o.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->div(code_, o.code_)};
}

std::vector<FieldElement> enumerate_elements(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->order());
  for (Code c = 0; c < field->order(); ++c) out.emplace_back(field, c);
  return out;
}

}  // namespace nilbij
