#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sparsepm/matrix.hpp"

namespace sparsepm {

// [n, k, d](alpha, beta = 1) parameters of a product-matrix MSR code.
struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t alpha = 0;
  std::size_t beta = 1;
  std::size_t message_length = 0;  // B = k * alpha
  FieldPtr field;

  bool is_base_regime() const noexcept { return d + 2 == 2 * k; }
};

// Throws InvalidRegime unless k >= 2 and 2k-2 <= d <= n-1.
CodeParams build_params(std::size_t n, std::size_t k, std::size_t d, FieldPtr field);

struct PropertyCheck {
  bool holds = true;
  bool exhaustive = true;
  std::size_t checked = 0;
  // Offending row subset (or the two colliding rows for distinct lambdas).
  std::vector<std::size_t> witness;
};

// Properties required of an encoding matrix Psi = [Phi | Lambda Phi]:
// any alpha rows of Phi independent, any d rows of Psi independent, and the
// diagonal of Lambda pairwise distinct.
struct PropertyReport {
  PropertyCheck phi_rows;
  PropertyCheck psi_rows;
  PropertyCheck distinct_lambda;

  bool ok() const noexcept { return phi_rows.holds && psi_rows.holds && distinct_lambda.holds; }
  std::string describe() const;
};

inline constexpr std::uint64_t kExhaustiveSubsetLimit = 100000;
inline constexpr std::size_t kSampledSubsets = 1000;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

PropertyReport validate_properties(const Matrix& phi, std::span<const Scalar> lambda,
                                   std::uint64_t seed = kDefaultSeed);

struct EncodingMatrix {
  Matrix psi;                  // n x d
  Matrix phi;                  // n x alpha
  std::vector<Scalar> lambda;  // diagonal of Lambda
  PropertyReport properties;
  std::vector<Scalar> points;  // evaluation points, when built from them

  // Assembles Psi = [phi | diag(lambda) phi] and validates it.
  static EncodingMatrix from_phi(Matrix phi, std::vector<Scalar> lambda, std::uint64_t seed = kDefaultSeed);

  std::size_t nodes() const noexcept { return phi.rows(); }
  std::size_t alpha() const noexcept { return phi.cols(); }
  // True when the first alpha rows of phi are the identity.
  bool has_identity_block() const;
};

// Evaluation points tried when none are given: (1, ..., n) first, then the
// greedy set of the smallest points with pairwise distinct x^alpha.
std::vector<std::vector<Scalar>> candidate_points(const CodeParams& params);

// Vandermonde encoding with lambda_i = x_i^alpha. Requires d = 2k-2. Throws
// PropertyViolation when every candidate point set fails validation.
EncodingMatrix build_vandermonde_encoding(const CodeParams& params,
                                          std::optional<std::vector<Scalar>> xs = std::nullopt,
                                          std::uint64_t seed = kDefaultSeed);

// Pair of symmetric alpha x alpha blocks; M = [sa; sb].
struct MessageMatrix {
  Matrix sa;
  Matrix sb;

  Matrix stacked() const;
  static MessageMatrix from_stacked(const Matrix& m);
};

// Position of S(i, j) in the packed message: upper triangles, row-major, sa
// first. `half` is 0 for sa and 1 for sb.
std::size_t packed_index(std::size_t alpha, std::size_t half, std::size_t i, std::size_t j);

MessageMatrix pack_message(std::span<const Scalar> message, std::size_t alpha, FieldPtr field);
inline MessageMatrix pack_message(std::span<const Scalar> message, const CodeParams& params) {
  return pack_message(message, params.alpha, params.field);
}
// Throws AsymmetryDetected if either block is not symmetric.
std::vector<Scalar> unpack_message(const MessageMatrix& m);

// C = Psi M.
Matrix encode(const EncodingMatrix& enc, const MessageMatrix& m);
// Row i = phi_i^T sa + lambda_i phi_i^T sb, evaluated without forming Psi.
Matrix encode_split(const EncodingMatrix& enc, const MessageMatrix& m);

// (n alpha x B) generator with alpha-row blocks per node.
class GeneratorMatrix {
 public:
  GeneratorMatrix() = default;
  GeneratorMatrix(Matrix m, std::size_t alpha);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t alpha() const noexcept { return alpha_; }
  std::size_t nodes() const noexcept { return alpha_ == 0 ? 0 : m_.rows() / alpha_; }
  std::size_t message_length() const noexcept { return m_.cols(); }
  const Field& field() const noexcept { return m_.field(); }

  Matrix node_block(std::size_t node) const;
  // Rows of the listed nodes stacked in order.
  Matrix stacked(std::span<const std::size_t> nodes) const;
  std::vector<Scalar> apply(std::span<const Scalar> message) const { return matvec(m_, message); }

  bool operator==(const GeneratorMatrix& other) const noexcept {
    return alpha_ == other.alpha_ && m_ == other.m_;
  }

 private:
  Matrix m_;
  std::size_t alpha_ = 0;
};

GeneratorMatrix generator_matrix(const EncodingMatrix& enc);

// Symbol a helper storing `node_data` sends toward repairing the node with
// repair vector `repair_vector`.
Scalar repair_helper_symbol(std::span<const Scalar> node_data, std::span<const Scalar> repair_vector,
                            const Field& field);

// Rebuilds row `failed` of C from helper symbols c_h^T phi_failed.
std::vector<Scalar> repair(const EncodingMatrix& enc, std::size_t failed, std::span<const std::size_t> helpers,
                           std::span<const Scalar> symbols);

// Solves the stacked generator rows of `nodes` for the message. `data` is
// the concatenation of the nodes' stored rows.
std::vector<Scalar> decode_generic(const GeneratorMatrix& g, std::span<const std::size_t> nodes,
                                   std::span<const Scalar> data);

// Closed-form decoder for encodings whose first k rows have the form
// [I Lambda; r^T lambda r^T]. `lambda_k` holds the k lambdas of those rows.
MessageMatrix decode_identity_block(const Matrix& c_k, std::span<const Scalar> lambda_k, std::span<const Scalar> r);
MessageMatrix decode_identity_block(const EncodingMatrix& enc, const Matrix& c_k);

}  // namespace sparsepm
