#include "sparsepm/sparse_construct.hpp"

#include <random>

namespace sparsepm {

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::Vanilla: return "vanilla";
    case Construction::Sparse: return "sparse";
    case Construction::Rbt: return "rbt";
  }
  return "unknown";
}

Construction parse_construction(std::string_view name) {
  if (name == "vanilla") return Construction::Vanilla;
  if (name == "sparse") return Construction::Sparse;
  if (name == "rbt") return Construction::Rbt;
  throw Error(Errc::Parse, "unknown construction '" + std::string(name) + "'");
}

EncodingMatrix sparsify_encoding(const EncodingMatrix& enc, std::uint64_t seed) {
  const std::size_t a = enc.alpha();
  const Matrix top = row_select(enc.phi, iota_ids(0, a));
  EncodingMatrix out = EncodingMatrix::from_phi(matmul(enc.phi, invert(top)), enc.lambda, seed);
  out.points = enc.points;
  return out;
}

Matrix rbt_matrix(const EncodingMatrix& enc) {
  return row_select(enc.phi, iota_ids(0, enc.alpha())).transpose();
}

Code rbt_transform(const Code& code, const Matrix& p) { return code.with_node_transform(p); }

GeneratorMatrix shorten(const GeneratorMatrix& g, std::size_t count) {
  if (count == 0) return g;
  const std::size_t cut = count * g.alpha();
  const Matrix& m = g.matrix();
  if (count >= g.nodes() || cut >= m.cols()) {
    throw Error(Errc::BadShorteningIndex, "shortening by " + std::to_string(count) + " leaves no message");
  }
  for (std::size_t r = 0; r < cut; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != (r == c ? 1u : 0u)) throw Error(Errc::BadShorteningIndex, "generator is not systematic");
    }
  }
  return GeneratorMatrix(submatrix(m, iota_ids(cut, m.rows() - cut), iota_ids(cut, m.cols() - cut)), g.alpha());
}

FieldPtr select_prime_field(std::size_t n, std::size_t k) {
  std::vector<Scalar> points(n);
  for (std::size_t i = 0; i < n; ++i) points[i] = static_cast<Scalar>(i + 1);
  for (std::uint32_t q = static_cast<std::uint32_t>(n + 1);; ++q) {
    if (!is_prime(q)) continue;
    const CodeParams params = build_params(n, k, 2 * k - 2, make_prime_field(q));
    try {
      build_vandermonde_encoding(params, points);
      return params.field;
    } catch (const Error& e) {
      if (e.code() != Errc::PropertyViolation) throw;
    }
  }
}

SystematicCode build_systematic(std::size_t n, std::size_t k, std::size_t d, Construction construction,
                                FieldPtr field, std::optional<std::vector<Scalar>> xs, std::uint64_t seed) {
  // Validates the target regime before anything else.
  build_params(n, k, d, field ? field : make_prime_field(2));
  const std::size_t extra = d - (2 * k - 2);
  const std::size_t parent_n = n + extra;
  const std::size_t parent_k = k + extra;
  if (!field) field = select_prime_field(parent_n, parent_k);

  const CodeParams parent = build_params(parent_n, parent_k, 2 * parent_k - 2, field);
  EncodingMatrix enc = build_vandermonde_encoding(parent, std::move(xs), seed);

  if (extra == 0) {
    switch (construction) {
      case Construction::Vanilla: return remap_generic(Code(std::move(enc)));
      case Construction::Sparse: return remap_generic(Code(sparsify_encoding(enc, seed)));
      case Construction::Rbt: {
        const Matrix p = rbt_matrix(enc);
        return remap_generic(rbt_transform(Code(std::move(enc)), p));
      }
    }
  }

  Code base(std::move(enc));
  if (construction != Construction::Vanilla) base = rbt_transform(base, rbt_matrix(base.encoding()));
  SystematicCode parent_sys = remap_generic(base);
  parent_sys.code = parent_sys.code.shortened(extra);
  return parent_sys;
}

MessageMatrix congruence_remap(const MessageMatrix& m, const Matrix& p) {
  const Matrix p_inv = invert(p);
  const Matrix p_inv_t = p_inv.transpose();
  return {matmul(matmul(p_inv_t, m.sa), p_inv), matmul(matmul(p_inv_t, m.sb), p_inv)};
}

Equivalence equivalence_check(const EncodingMatrix& enc, const Matrix& p, std::size_t trials, std::uint64_t seed) {
  const std::size_t a = enc.alpha();
  const FieldPtr& field = enc.phi.field_ptr();
  const Matrix p_inv_t = invert(p).transpose();

  Equivalence eq;
  eq.psi_prime = EncodingMatrix::from_phi(matmul(enc.phi, p_inv_t), enc.lambda);

  const std::size_t b = a * (a + 1);
  eq.symbol_remap = Matrix(field, b, b);
  std::vector<Scalar> basis(b, 0);
  for (std::size_t t = 0; t < b; ++t) {
    basis[t] = 1;
    const auto column = unpack_message(congruence_remap(pack_message(basis, a, field), p));
    for (std::size_t r = 0; r < b; ++r) eq.symbol_remap(r, t) = column[r];
    basis[t] = 0;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Scalar> symbol(0, field->order() - 1);
  eq.verdict = true;
  std::vector<Scalar> message(b);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    for (Scalar& s : message) s = symbol(rng);
    const MessageMatrix m = pack_message(message, a, field);
    const Matrix transformed = matmul(encode(enc, congruence_remap(m, p)), p);
    ++eq.trials;
    if (!(transformed == encode(eq.psi_prime, m))) {
      eq.verdict = false;
      break;
    }
  }
  return eq;
}

}  // namespace sparsepm
