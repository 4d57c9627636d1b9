#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sparsepm/sparse_construct.hpp"

namespace sparsepm {

// Everything needed to rebuild a generated code exactly.
struct Descriptor {
  std::size_t n = 0, k = 0, d = 0;
  std::uint32_t q = 0;  // 256 means GF(2^8)
  Construction construction = Construction::Sparse;
  std::uint64_t seed = kDefaultSeed;
  std::vector<Scalar> xs;  // evaluation points of the (parent) Vandermonde code
  std::string psi_sha256;
  std::string g_sha256;
  std::string g_sys_sha256;
};

std::string sha256_hex(std::string_view data);
std::array<std::uint8_t, 32> sha256(std::string_view data);

FieldPtr field_for_order(std::uint32_t q);
std::string to_text(const Descriptor& d);
// Throws Parse.
Descriptor parse_descriptor(std::string_view text);
// Rebuilds the code and checks the recorded hashes. Throws DesignMismatch.
SystematicCode build_from(const Descriptor& d);

inline constexpr std::array<char, 8> kShareMagic = {'S', 'P', 'M', 'S', 'H', 'A', 'R', 'E'};

// magic | descriptor sha256 | node | stripes | payload symbols | raw symbols
struct Share {
  std::array<std::uint8_t, 32> descriptor_hash{};
  std::uint64_t node = 0;
  std::uint64_t stripes = 0;
  std::uint64_t payload = 0;
  std::vector<Scalar> symbols;  // stripes * alpha
};

// GF(2^8) symbols take one byte, prime-field symbols four (little endian).
std::string serialize_share(const Share& s, std::size_t symbol_bytes);
Share parse_share(std::string_view bytes, std::size_t symbol_bytes);

// Returns the process exit code: 0 on success, 1 when a certification
// fails, 2 on usage or construction errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sparsepm
