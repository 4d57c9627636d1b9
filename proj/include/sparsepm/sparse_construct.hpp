#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sparsepm/systematic.hpp"

namespace sparsepm {

enum class Construction { Vanilla, Sparse, Rbt };

std::string_view to_string(Construction c);
// Throws Parse for unknown names.
Construction parse_construction(std::string_view name);

// Psi' = [Phi Phi_a^{-1} | Lambda Phi Phi_a^{-1}], Phi_a the first alpha rows
// of Phi. Properties are revalidated on the result. Throws Singular.
EncodingMatrix sparsify_encoding(const EncodingMatrix& enc, std::uint64_t seed = kDefaultSeed);

// P = Phi_a^T: the columns are the repair vectors of the first alpha nodes.
Matrix rbt_matrix(const EncodingMatrix& enc);
// Node i stores c_i^T P. Throws Singular.
Code rbt_transform(const Code& code, const Matrix& p);

// Drops the first count*alpha rows and columns of a systematic generator.
// Throws BadShorteningIndex.
GeneratorMatrix shorten(const GeneratorMatrix& g, std::size_t count);

// Smallest prime q >= n+1 over which the d = 2k-2 Vandermonde encoding with
// points (1, ..., n) passes property validation.
FieldPtr select_prime_field(std::size_t n, std::size_t k);

// Systematic [n, k, d] code. For d = 2k-2 the construction is applied to the
// Vandermonde code directly; for d > 2k-2 to the [n+i, k+i, 2(k+i)-2] parent,
// which is then remapped and shortened by i = d - (2k-2). Sparse and Rbt
// coincide when d > 2k-2. A null field selects one with select_prime_field.
// `xs` are the parent's evaluation points; `seed` drives sampled validation.
SystematicCode build_systematic(std::size_t n, std::size_t k, std::size_t d, Construction construction,
                                FieldPtr field = nullptr, std::optional<std::vector<Scalar>> xs = std::nullopt,
                                std::uint64_t seed = kDefaultSeed);
inline SystematicCode build_sparse_systematic(std::size_t n, std::size_t k, std::size_t d, FieldPtr field = nullptr) {
  return build_systematic(n, k, d, Construction::Sparse, std::move(field));
}

// Sa -> P^{-T} Sa P^{-1}, likewise for Sb.
MessageMatrix congruence_remap(const MessageMatrix& m, const Matrix& p);

struct Equivalence {
  EncodingMatrix psi_prime;  // [Phi P^{-T} | Lambda Phi P^{-T}]
  Matrix symbol_remap;       // B x B matrix of the congruence on packed messages
  bool verdict = false;
  std::size_t trials = 0;
};

// Checks Psi T(M) P == Psi' M on `trials` random messages.
Equivalence equivalence_check(const EncodingMatrix& enc, const Matrix& p, std::size_t trials = 100,
                              std::uint64_t seed = kDefaultSeed);

}  // namespace sparsepm
