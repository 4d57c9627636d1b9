#include "sparsepm/field.hpp"

#include <sstream>

namespace sparsepm {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::InvalidField: return "InvalidField";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::Singular: return "Singular";
    case Errc::DuplicateEvaluationPoint: return "DuplicateEvaluationPoint";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidRegime: return "InvalidRegime";
    case Errc::PropertyViolation: return "PropertyViolation";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::AsymmetryDetected: return "AsymmetryDetected";
    case Errc::BadHelperCount: return "BadHelperCount";
    case Errc::BadCount: return "BadCount";
    case Errc::DesignMismatch: return "DesignMismatch";
    case Errc::BadShorteningIndex: return "BadShorteningIndex";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
    case Errc::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

int degree(std::uint32_t poly) {
  int deg = -1;
  for (int bit = 0; bit < 32; ++bit) {
    if (poly & (1u << bit)) deg = bit;
  }
  return deg;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

}  // namespace

bool is_irreducible_degree8(std::uint32_t polynomial) {
  if (degree(polynomial) != 8) return false;
  // A reducible degree-8 polynomial has a factor of degree <= 4.
  for (std::uint32_t divisor = 2; divisor < 32; ++divisor) {
    if (poly_mod(polynomial, divisor) == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(Errc::InvalidField, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  Field f;
  f.kind_ = FieldKind::Prime;
  f.modulus_ = p;
  f.order_ = p;
  return f;
}

Field Field::gf256(std::uint32_t polynomial) {
  if (!is_irreducible_degree8(polynomial)) {
    std::ostringstream os;
    os << "polynomial 0x" << std::hex << polynomial << " is not an irreducible degree-8 polynomial";
    throw Error(Errc::InvalidField, os.str());
  }
  Field f;
  f.kind_ = FieldKind::Binary;
  f.modulus_ = polynomial;
  f.order_ = 256;

  // Irreducible is not necessarily primitive: find a generator of the
  // multiplicative group before building the tables.
  for (Scalar gen = 2; gen < 256; ++gen) {
    Scalar x = 1;
    int period = 0;
    do {
      x = f.mul_polynomial(x, gen);
      ++period;
    } while (x != 1);
    if (period != 255) continue;

    x = 1;
    for (int i = 0; i < 255; ++i) {
      f.exp_[i] = static_cast<std::uint8_t>(x);
      f.exp_[i + 255] = static_cast<std::uint8_t>(x);
      f.log_[x] = static_cast<std::uint16_t>(i);
      x = f.mul_polynomial(x, gen);
    }
    f.exp_[510] = f.exp_[0];
    f.exp_[511] = f.exp_[1];
    return f;
  }
  throw Error(Errc::InvalidField, "no primitive element found");
}

Scalar Field::mul_polynomial(Scalar a, Scalar b) const noexcept {
  Scalar product = 0;
  while (b != 0) {
    if (b & 1) product ^= a;
    b >>= 1;
    a <<= 1;
    if (a & 0x100) a ^= modulus_;
  }
  return product;
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw Error(Errc::ZeroInverse, "inverse of zero in " + name());
  if (kind_ == FieldKind::Binary) return exp_[255 - log_[a]];
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = modulus_, new_r = a;
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t -= quotient * new_t;
    std::swap(t, new_t);
    r -= quotient * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += modulus_;
  return static_cast<Scalar>(t);
}

Scalar Field::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = 1;
  Scalar base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string Field::name() const {
  if (kind_ == FieldKind::Binary) return "GF(2^8)";
  return "GF(" + std::to_string(modulus_) + ")";
}

FieldPtr make_prime_field(std::uint32_t p) { return std::make_shared<const Field>(Field::prime(p)); }

FieldPtr make_gf256(std::uint32_t polynomial) {
  return std::make_shared<const Field>(Field::gf256(polynomial));
}

}  // namespace sparsepm
