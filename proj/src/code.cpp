#include "sparsepm/code.hpp"

#include <algorithm>

namespace sparsepm {

namespace {

CodeParams params_for(const EncodingMatrix& enc) {
  const std::size_t a = enc.alpha();
  return build_params(enc.nodes(), a + 1, 2 * a, enc.phi.field_ptr());
}

}  // namespace

Code::Code(EncodingMatrix encoding)
    : encoding_(std::move(encoding)),
      base_params_(params_for(encoding_)),
      params_(base_params_),
      transform_(Matrix::identity(base_params_.field, base_params_.alpha)),
      transform_inverse_(transform_),
      remap_(Matrix::identity(base_params_.field, base_params_.message_length)),
      generator_(generator_matrix(encoding_)) {}

std::vector<Scalar> Code::base_message(std::span<const Scalar> message) const {
  if (message.size() != params_.message_length) {
    throw Error(Errc::LengthMismatch, "message has " + std::to_string(message.size()) + " symbols, expected " +
                                          std::to_string(params_.message_length));
  }
  std::vector<Scalar> padded(base_params_.message_length, 0);
  std::copy(message.begin(), message.end(), padded.begin() + static_cast<std::ptrdiff_t>(dummies_ * params_.alpha));
  return matvec(remap_, padded);
}

Matrix Code::encode(std::span<const Scalar> message) const {
  const std::vector<Scalar> flat = generator_.apply(message);
  Matrix c(params_.field, params_.n, params_.alpha);
  std::copy(flat.begin(), flat.end(), c.row(0).begin());
  return c;
}

Matrix Code::encode_structured(std::span<const Scalar> message) const {
  const Matrix base = matmul(sparsepm::encode(encoding_, pack_message(base_message(message), base_params_)),
                             transform_);
  return row_select(base, iota_ids(dummies_, params_.n));
}

std::vector<Scalar> Code::repair_vector(std::size_t failed) const {
  if (failed >= params_.n) throw Error(Errc::IndexOutOfRange, "failed node " + std::to_string(failed));
  const auto phi = encoding_.phi.row(failed + dummies_);
  return matvec(transform_inverse_, phi);
}

Scalar Code::helper_symbol(std::span<const Scalar> helper_data, std::size_t failed) const {
  return repair_helper_symbol(helper_data, repair_vector(failed), field());
}

std::vector<Scalar> Code::repair(std::size_t failed, std::span<const std::size_t> helpers,
                                 std::span<const Scalar> symbols) const {
  if (helpers.size() != params_.d) {
    throw Error(Errc::BadHelperCount, "repair needs " + std::to_string(params_.d) + " helpers, got " +
                                          std::to_string(helpers.size()));
  }
  if (symbols.size() != helpers.size()) throw Error(Errc::LengthMismatch, "one symbol per helper");
  if (failed >= params_.n) throw Error(Errc::IndexOutOfRange, "failed node " + std::to_string(failed));
  for (std::size_t h : helpers) {
    if (h >= params_.n) throw Error(Errc::IndexOutOfRange, "helper " + std::to_string(h));
  }

  // Dropped nodes store zeros, so they act as helpers that always send 0.
  std::vector<std::size_t> base_helpers;
  std::vector<Scalar> base_symbols;
  for (std::size_t i = 0; i < dummies_; ++i) {
    base_helpers.push_back(i);
    base_symbols.push_back(0);
  }
  for (std::size_t j = 0; j < helpers.size(); ++j) {
    base_helpers.push_back(helpers[j] + dummies_);
    base_symbols.push_back(symbols[j]);
  }
  const std::vector<Scalar> row = sparsepm::repair(encoding_, failed + dummies_, base_helpers, base_symbols);
  return matvec(transform_.transpose(), row);
}

std::vector<Scalar> Code::decode(std::span<const std::size_t> nodes, std::span<const Scalar> data) const {
  return decode_generic(generator_, nodes, data);
}

bool Code::is_systematic() const {
  const Matrix& g = generator_.matrix();
  const std::size_t b = params_.message_length;
  for (std::size_t r = 0; r < b; ++r) {
    for (std::size_t c = 0; c < b; ++c) {
      if (g(r, c) != (r == c ? 1u : 0u)) return false;
    }
  }
  return true;
}

Code Code::with_node_transform(const Matrix& p) const {
  if (p.rows() != params_.alpha || p.cols() != params_.alpha) {
    throw Error(Errc::DimensionMismatch, "node transform must be alpha x alpha");
  }
  Code out = *this;
  out.transform_inverse_ = matmul(invert(p), transform_inverse_);
  out.transform_ = matmul(transform_, p);
  // Node block G_i becomes P^T G_i.
  const Matrix pt = p.transpose();
  Matrix g = generator_.matrix();
  for (std::size_t node = 0; node < params_.n; ++node) {
    const Matrix block = matmul(pt, generator_.node_block(node));
    for (std::size_t j = 0; j < params_.alpha; ++j) {
      std::copy(block.row(j).begin(), block.row(j).end(), g.row(node * params_.alpha + j).begin());
    }
  }
  out.generator_ = GeneratorMatrix(std::move(g), params_.alpha);
  return out;
}

Code Code::with_remap(const Matrix& r) const {
  const std::size_t b = params_.message_length;
  if (r.rows() != b || r.cols() != b) throw Error(Errc::DimensionMismatch, "remap must be B x B");
  Code out = *this;
  // Lift r to the parent message space: identity on the dummy coordinates.
  const std::size_t offset = dummies_ * params_.alpha;
  Matrix lifted = Matrix::identity(base_params_.field, base_params_.message_length);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) lifted(offset + i, offset + j) = r(i, j);
  }
  out.remap_ = matmul(remap_, lifted);
  out.generator_ = GeneratorMatrix(matmul(generator_.matrix(), r), params_.alpha);
  return out;
}

Code Code::with_generator(GeneratorMatrix g) const {
  if (g.alpha() != params_.alpha || g.nodes() != params_.n || g.message_length() != params_.message_length) {
    throw Error(Errc::DimensionMismatch, "generator shape differs from the code");
  }
  Code out = *this;
  out.generator_ = std::move(g);
  return out;
}

Code Code::shortened(std::size_t count) const {
  if (count == 0) return *this;
  if (count >= params_.k - 1 || count > params_.alpha) {
    throw Error(Errc::BadShorteningIndex, "cannot shorten [" + std::to_string(params_.n) + "," +
                                              std::to_string(params_.k) + "] by " + std::to_string(count));
  }
  const std::size_t cut = count * params_.alpha;
  const Matrix& g = generator_.matrix();
  for (std::size_t r = 0; r < cut; ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (g(r, c) != (r == c ? 1u : 0u)) {
        throw Error(Errc::BadShorteningIndex, "shortened nodes must be systematic");
      }
    }
  }
  Code out = *this;
  out.dummies_ = dummies_ + count;
  out.params_ = build_params(params_.n - count, params_.k - count, params_.d - count, params_.field);
  out.generator_ = GeneratorMatrix(
      submatrix(g, iota_ids(cut, g.rows() - cut), iota_ids(cut, g.cols() - cut)), params_.alpha);
  return out;
}

}  // namespace sparsepm
