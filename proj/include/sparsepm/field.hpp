#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>

#include "sparsepm/error.hpp"

namespace sparsepm {

// A field element. Always reduced: value < order of the owning field.
using Scalar = std::uint32_t;

enum class FieldKind { Prime, Binary };

// Exact arithmetic in GF(p) or GF(2^8). Immutable after construction; the
// GF(2^8) variant carries log/antilog tables built from the reduction
// polynomial.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPolynomial = 0x11D;

  static Field prime(std::uint32_t p);
  static Field gf256(std::uint32_t polynomial = kDefaultPolynomial);

  FieldKind kind() const noexcept { return kind_; }
  // p for prime fields, the reduction polynomial bitmask for GF(2^8).
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t order() const noexcept { return order_; }
  bool contains(Scalar a) const noexcept { return a < order_; }
  std::string name() const;

  Scalar add(Scalar a, Scalar b) const noexcept {
    if (kind_ == FieldKind::Binary) return a ^ b;
    Scalar s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  Scalar neg(Scalar a) const noexcept {
    if (kind_ == FieldKind::Binary || a == 0) return a;
    return modulus_ - a;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    if (kind_ == FieldKind::Binary) {
      if (a == 0 || b == 0) return 0;
      return exp_[log_[a] + log_[b]];
    }
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % modulus_);
  }
  // Throws Errc::ZeroInverse for a == 0.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  // Square-and-multiply; pow(0, 0) == 1.
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;

  // Shift-and-reduce product in GF(2^8), independent of the tables.
  Scalar mul_polynomial(Scalar a, Scalar b) const noexcept;

  bool operator==(const Field& other) const noexcept {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }

 private:
  Field() = default;

  FieldKind kind_ = FieldKind::Prime;
  std::uint32_t modulus_ = 0;
  std::uint32_t order_ = 0;
  // exp_ is doubled so log(a)+log(b) never needs a reduction.
  std::array<std::uint8_t, 512> exp_{};
  std::array<std::uint16_t, 256> log_{};
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_prime_field(std::uint32_t p);
FieldPtr make_gf256(std::uint32_t polynomial = Field::kDefaultPolynomial);

bool is_prime(std::uint64_t p);
// Irreducibility of a degree-8 polynomial over GF(2), by exhaustive trial
// division with every polynomial of degree 1..4.
bool is_irreducible_degree8(std::uint32_t polynomial);

}  // namespace sparsepm
