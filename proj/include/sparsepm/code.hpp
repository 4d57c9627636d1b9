#pragma once

#include <span>
#include <vector>

#include "sparsepm/pm_code.hpp"

namespace sparsepm {

// A d = 2k-2 product-matrix code together with the linear transforms that
// derive other codes from it:
//
//   message m --(pad with zeros for dummy nodes)--> --(remap)--> M
//   node i stores (psi_i^T M) P, and the first `dummies` nodes are dropped.
//
// The effective generator is kept in sync with these transforms; the
// structural path (encode_structured, repair) never reads it.
class Code {
 public:
  explicit Code(EncodingMatrix encoding);

  // Effective parameters after shortening.
  const CodeParams& params() const noexcept { return params_; }
  const CodeParams& base_params() const noexcept { return base_params_; }
  const EncodingMatrix& encoding() const noexcept { return encoding_; }
  const Matrix& node_transform() const noexcept { return transform_; }
  // Base-message remap, (k' alpha) x (k' alpha) for the unshortened parent.
  const Matrix& remap() const noexcept { return remap_; }
  std::size_t dummies() const noexcept { return dummies_; }
  const GeneratorMatrix& generator() const noexcept { return generator_; }
  const Field& field() const noexcept { return *params_.field; }

  // Node data (n x alpha) through the generator.
  Matrix encode(std::span<const Scalar> message) const;
  // Node data through Psi M P, independent of the generator.
  Matrix encode_structured(std::span<const Scalar> message) const;
  // Base message (length of the unshortened parent) for an effective message.
  std::vector<Scalar> base_message(std::span<const Scalar> message) const;

  // Vector every helper takes its stored row's inner product with.
  std::vector<Scalar> repair_vector(std::size_t failed) const;
  Scalar helper_symbol(std::span<const Scalar> helper_data, std::size_t failed) const;
  // Rebuilds the stored row of `failed` from exactly d helper symbols.
  std::vector<Scalar> repair(std::size_t failed, std::span<const std::size_t> helpers,
                             std::span<const Scalar> symbols) const;
  std::vector<Scalar> decode(std::span<const std::size_t> nodes, std::span<const Scalar> data) const;

  bool is_systematic() const;

  // Node i stores c_i^T P afterwards. Throws Singular.
  Code with_node_transform(const Matrix& p) const;
  // Pre-multiplies effective messages by `r` (B x B).
  Code with_remap(const Matrix& r) const;
  // Replaces the effective generator and nothing else.
  Code with_generator(GeneratorMatrix g) const;
  // Drops the first `count` nodes; they must store the first count*alpha
  // message symbols verbatim.
  Code shortened(std::size_t count) const;

 private:
  EncodingMatrix encoding_;
  CodeParams base_params_;
  CodeParams params_;
  Matrix transform_;
  Matrix transform_inverse_;
  Matrix remap_;
  std::size_t dummies_ = 0;
  GeneratorMatrix generator_;
};

}  // namespace sparsepm
