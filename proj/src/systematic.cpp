#include "sparsepm/systematic.hpp"

namespace sparsepm {

Matrix systematic_remap_matrix(const GeneratorMatrix& g) {
  const std::size_t b = g.message_length();
  if (g.matrix().rows() < b) throw Error(Errc::DimensionMismatch, "generator has fewer than B rows");
  return invert(row_select(g.matrix(), iota_ids(0, b)));
}

GeneratorMatrix remap_generic(const GeneratorMatrix& g) {
  return GeneratorMatrix(matmul(g.matrix(), systematic_remap_matrix(g)), g.alpha());
}

SystematicCode remap_generic(const Code& base) {
  Matrix remap = systematic_remap_matrix(base.generator());
  Code code = base.with_remap(remap);
  return {base, std::move(code), std::move(remap)};
}

Matrix triangular_inclusion(const MessageMatrix& m) {
  const std::size_t a = m.sa.rows();
  Matrix c(m.sa.field_ptr(), a + 1, a);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) c(i, j) = i <= j ? m.sa(i, j) : m.sb(i, j);
    c(a, i) = m.sb(i, i);
  }
  return c;
}

std::vector<std::size_t> inclusion_positions(std::size_t alpha) {
  std::vector<std::size_t> pos(alpha * (alpha + 1));
  for (std::size_t i = 0; i < alpha; ++i) {
    for (std::size_t j = i; j < alpha; ++j) {
      pos[packed_index(alpha, 0, i, j)] = i * alpha + j;
      // sb(i, j) with i < j lands below the diagonal at (j, i).
      pos[packed_index(alpha, 1, i, j)] = i == j ? alpha * alpha + i : j * alpha + i;
    }
  }
  return pos;
}

Matrix inclusion_permutation(std::size_t alpha, FieldPtr field) {
  const auto pos = inclusion_positions(alpha);
  Matrix pi(std::move(field), pos.size(), pos.size());
  for (std::size_t t = 0; t < pos.size(); ++t) pi(pos[t], t) = 1;
  return pi;
}

Matrix inclusion_remap_matrix(const GeneratorMatrix& g) {
  const std::size_t alpha = g.alpha();
  return matmul(systematic_remap_matrix(g), inclusion_permutation(alpha, g.matrix().field_ptr()));
}

SystematicCode remap_via_inclusion(const Code& base) {
  const EncodingMatrix& enc = base.encoding();
  if (base.dummies() != 0 || !base.node_transform().is_identity() || !base.remap().is_identity() ||
      !enc.has_identity_block()) {
    throw Error(Errc::DesignMismatch, "inclusion remap needs an untransformed identity-block code");
  }
  const CodeParams& p = base.params();
  const std::size_t b = p.message_length;
  Matrix remap(p.field, b, b);
  std::vector<Scalar> basis(b, 0);
  for (std::size_t t = 0; t < b; ++t) {
    basis[t] = 1;
    const Matrix c_k = triangular_inclusion(pack_message(basis, p));
    const std::vector<Scalar> column = unpack_message(decode_identity_block(enc, c_k));
    for (std::size_t r = 0; r < b; ++r) remap(r, t) = column[r];
    basis[t] = 0;
  }
  Code code = base.with_remap(remap);
  return {base, std::move(code), std::move(remap)};
}

}  // namespace sparsepm
