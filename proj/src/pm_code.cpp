#include "sparsepm/pm_code.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sparsepm/combinatorics.hpp"

namespace sparsepm {

namespace {

std::string join(std::span<const std::size_t> ids) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  return os.str();
}

PropertyCheck check_row_subsets(const Matrix& m, std::size_t subset_size, std::uint64_t seed) {
  PropertyCheck check;
  if (subset_size > m.rows()) {
    check.holds = false;
    return check;
  }
  check.exhaustive = for_each_subset(m.rows(), subset_size, kExhaustiveSubsetLimit, kSampledSubsets, seed,
                                     [&](const std::vector<std::size_t>& rows) {
                                       ++check.checked;
                                       if (rank(row_select(m, rows)) == std::min(subset_size, m.cols())) return true;
                                       check.holds = false;
                                       check.witness = rows;
                                       return false;
                                     });
  return check;
}

void require_distinct(std::span<const std::size_t> ids, std::size_t limit, const char* what) {
  std::set<std::size_t> seen;
  for (std::size_t id : ids) {
    if (id >= limit) throw Error(Errc::IndexOutOfRange, std::string(what) + " id " + std::to_string(id));
    if (!seen.insert(id).second) throw Error(Errc::BadCount, std::string("repeated ") + what + " id " + std::to_string(id));
  }
}

}  // namespace

CodeParams build_params(std::size_t n, std::size_t k, std::size_t d, FieldPtr field) {
  if (k < 2 || d + 2 < 2 * k || d >= n) {
    throw Error(Errc::InvalidRegime, "[n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", d=" +
                                         std::to_string(d) + "] needs k >= 2 and 2k-2 <= d <= n-1");
  }
  CodeParams p;
  p.n = n;
  p.k = k;
  p.d = d;
  p.alpha = d - k + 1;
  p.beta = 1;
  p.message_length = k * p.alpha;
  p.field = std::move(field);
  return p;
}

std::string PropertyReport::describe() const {
  std::ostringstream os;
  auto line = [&](const char* name, const PropertyCheck& c) {
    os << name << ": " << (c.holds ? "holds" : "VIOLATED") << " (" << c.checked << " subsets, "
       << (c.exhaustive ? "exhaustive" : "sampled") << ")";
    if (!c.holds) os << " witness rows {" << join(c.witness) << "}";
    os << '\n';
  };
  line("property 1 (alpha rows of phi independent)", phi_rows);
  line("property 2 (d rows of psi independent)", psi_rows);
  line("property 3 (lambda distinct)", distinct_lambda);
  return os.str();
}

PropertyReport validate_properties(const Matrix& phi, std::span<const Scalar> lambda, std::uint64_t seed) {
  if (lambda.size() != phi.rows()) throw Error(Errc::DimensionMismatch, "lambda length differs from node count");
  PropertyReport report;
  report.phi_rows = check_row_subsets(phi, phi.cols(), seed);

  Matrix psi(phi.field_ptr(), phi.rows(), 2 * phi.cols());
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      psi(i, j) = phi(i, j);
      psi(i, phi.cols() + j) = phi.field().mul(lambda[i], phi(i, j));
    }
  }
  report.psi_rows = check_row_subsets(psi, psi.cols(), seed + 1);

  for (std::size_t i = 0; i < lambda.size() && report.distinct_lambda.holds; ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      ++report.distinct_lambda.checked;
      if (lambda[i] == lambda[j]) {
        report.distinct_lambda.holds = false;
        report.distinct_lambda.witness = {i, j};
        break;
      }
    }
  }
  return report;
}

EncodingMatrix EncodingMatrix::from_phi(Matrix phi, std::vector<Scalar> lambda, std::uint64_t seed) {
  if (lambda.size() != phi.rows()) throw Error(Errc::DimensionMismatch, "lambda length differs from node count");
  EncodingMatrix enc;
  const std::size_t alpha = phi.cols();
  enc.psi = Matrix(phi.field_ptr(), phi.rows(), 2 * alpha);
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    for (std::size_t j = 0; j < alpha; ++j) {
      enc.psi(i, j) = phi(i, j);
      enc.psi(i, alpha + j) = phi.field().mul(lambda[i], phi(i, j));
    }
  }
  enc.properties = validate_properties(phi, lambda, seed);
  enc.phi = std::move(phi);
  enc.lambda = std::move(lambda);
  return enc;
}

bool EncodingMatrix::has_identity_block() const {
  const std::size_t a = alpha();
  if (nodes() < a) return false;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      if (phi(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Scalar>> candidate_points(const CodeParams& params) {
  const Field& f = *params.field;
  std::vector<std::vector<Scalar>> candidates;
  if (params.n < f.order()) {
    std::vector<Scalar> sequential(params.n);
    for (std::size_t i = 0; i < params.n; ++i) sequential[i] = static_cast<Scalar>(i + 1);
    candidates.push_back(std::move(sequential));
  }
  std::vector<Scalar> greedy;
  std::set<Scalar> used_lambda;
  for (Scalar x = 1; x < f.order() && greedy.size() < params.n; ++x) {
    if (used_lambda.insert(f.pow(x, params.alpha)).second) greedy.push_back(x);
  }
  if (greedy.size() == params.n && (candidates.empty() || candidates.front() != greedy)) {
    candidates.push_back(std::move(greedy));
  }
  return candidates;
}

EncodingMatrix build_vandermonde_encoding(const CodeParams& params, std::optional<std::vector<Scalar>> xs,
                                          std::uint64_t seed) {
  if (!params.is_base_regime()) {
    throw Error(Errc::InvalidRegime, "product-matrix encoding is built for d = 2k-2 only");
  }
  const FieldPtr& field = params.field;
  std::vector<std::vector<Scalar>> candidates;
  if (xs) {
    if (xs->size() != params.n) throw Error(Errc::LengthMismatch, "need one evaluation point per node");
    candidates.push_back(*xs);
  } else {
    candidates = candidate_points(params);
  }

  std::string failures;
  for (const auto& points : candidates) {
    Matrix phi(field, params.n, params.alpha);
    std::vector<Scalar> lambda(params.n);
    for (std::size_t i = 0; i < params.n; ++i) {
      const Scalar x = points[i] % field->order();
      Scalar power = x;
      for (std::size_t j = 0; j < params.alpha; ++j) {
        phi(i, j) = power;
        power = field->mul(power, x);
      }
      lambda[i] = field->pow(x, params.alpha);
    }
    EncodingMatrix enc = EncodingMatrix::from_phi(std::move(phi), std::move(lambda), seed);
    if (enc.properties.ok()) {
      enc.points = points;
      return enc;
    }
    failures += enc.properties.describe();
  }
  throw Error(Errc::PropertyViolation, "no valid Vandermonde encoding over " + field->name() + "\n" + failures);
}

Matrix MessageMatrix::stacked() const {
  const std::size_t a = sa.rows();
  Matrix m(sa.field_ptr(), 2 * a, a);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      m(i, j) = sa(i, j);
      m(a + i, j) = sb(i, j);
    }
  }
  return m;
}

MessageMatrix MessageMatrix::from_stacked(const Matrix& m) {
  const std::size_t a = m.cols();
  if (m.rows() != 2 * a) throw Error(Errc::DimensionMismatch, "message matrix must be 2alpha x alpha");
  const auto all = iota_ids(0, a);
  const auto top = iota_ids(0, a);
  const auto bottom = iota_ids(a, a);
  return {submatrix(m, top, all), submatrix(m, bottom, all)};
}

std::size_t packed_index(std::size_t alpha, std::size_t half, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  const std::size_t row_offset = i * alpha - i * (i - 1) / 2;
  return half * (alpha * (alpha + 1) / 2) + row_offset + (j - i);
}

MessageMatrix pack_message(std::span<const Scalar> message, std::size_t alpha, FieldPtr field) {
  if (message.size() != alpha * (alpha + 1)) {
    throw Error(Errc::LengthMismatch, "message has " + std::to_string(message.size()) + " symbols, expected " +
                                          std::to_string(alpha * (alpha + 1)));
  }
  MessageMatrix m{Matrix(field, alpha, alpha), Matrix(field, alpha, alpha)};
  for (std::size_t half = 0; half < 2; ++half) {
    Matrix& s = half == 0 ? m.sa : m.sb;
    for (std::size_t i = 0; i < alpha; ++i) {
      for (std::size_t j = i; j < alpha; ++j) {
        const Scalar v = message[packed_index(alpha, half, i, j)];
        if (!field->contains(v)) throw Error(Errc::IndexOutOfRange, "message symbol outside " + field->name());
        s(i, j) = v;
        s(j, i) = v;
      }
    }
  }
  return m;
}

std::vector<Scalar> unpack_message(const MessageMatrix& m) {
  const std::size_t alpha = m.sa.rows();
  if (m.sa.cols() != alpha || m.sb.rows() != alpha || m.sb.cols() != alpha) {
    throw Error(Errc::DimensionMismatch, "message blocks must be alpha x alpha");
  }
  std::vector<Scalar> out(alpha * (alpha + 1));
  for (std::size_t half = 0; half < 2; ++half) {
    const Matrix& s = half == 0 ? m.sa : m.sb;
    for (std::size_t i = 0; i < alpha; ++i) {
      for (std::size_t j = i; j < alpha; ++j) {
        if (s(i, j) != s(j, i)) {
          throw Error(Errc::AsymmetryDetected, std::string(half == 0 ? "sa" : "sb") + " differs at (" +
                                                   std::to_string(i) + "," + std::to_string(j) + ")");
        }
        out[packed_index(alpha, half, i, j)] = s(i, j);
      }
    }
  }
  return out;
}

Matrix encode(const EncodingMatrix& enc, const MessageMatrix& m) { return matmul(enc.psi, m.stacked()); }

Matrix encode_split(const EncodingMatrix& enc, const MessageMatrix& m) {
  const Field& f = enc.phi.field();
  const std::size_t a = enc.alpha();
  if (m.sa.rows() != a) throw Error(Errc::DimensionMismatch, "message alpha differs from encoding alpha");
  Matrix c(enc.phi.field_ptr(), enc.nodes(), a);
  for (std::size_t i = 0; i < enc.nodes(); ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      Scalar from_a = 0, from_b = 0;
      for (std::size_t l = 0; l < a; ++l) {
        from_a = f.add(from_a, f.mul(enc.phi(i, l), m.sa(l, j)));
        from_b = f.add(from_b, f.mul(enc.phi(i, l), m.sb(l, j)));
      }
      c(i, j) = f.add(from_a, f.mul(enc.lambda[i], from_b));
    }
  }
  return c;
}

GeneratorMatrix::GeneratorMatrix(Matrix m, std::size_t alpha) : m_(std::move(m)), alpha_(alpha) {
  if (alpha_ == 0 || m_.rows() % alpha_ != 0) {
    throw Error(Errc::DimensionMismatch, "generator rows must be a multiple of alpha");
  }
}

Matrix GeneratorMatrix::node_block(std::size_t node) const {
  if (node >= nodes()) throw Error(Errc::IndexOutOfRange, "node " + std::to_string(node));
  return row_select(m_, iota_ids(node * alpha_, alpha_));
}

Matrix GeneratorMatrix::stacked(std::span<const std::size_t> node_ids) const {
  std::vector<std::size_t> rows;
  rows.reserve(node_ids.size() * alpha_);
  for (std::size_t node : node_ids) {
    if (node >= nodes()) throw Error(Errc::IndexOutOfRange, "node " + std::to_string(node));
    for (std::size_t j = 0; j < alpha_; ++j) rows.push_back(node * alpha_ + j);
  }
  return row_select(m_, rows);
}

GeneratorMatrix generator_matrix(const EncodingMatrix& enc) {
  const Field& f = enc.psi.field();
  const std::size_t a = enc.alpha();
  Matrix g(enc.psi.field_ptr(), enc.nodes() * a, a * (a + 1));
  for (std::size_t node = 0; node < enc.nodes(); ++node) {
    for (std::size_t j = 0; j < a; ++j) {
      // Symbol j of the node is psi_node . column j of M.
      for (std::size_t r = 0; r < 2 * a; ++r) {
        const std::size_t col = r < a ? packed_index(a, 0, r, j) : packed_index(a, 1, r - a, j);
        Scalar& entry = g(node * a + j, col);
        entry = f.add(entry, enc.psi(node, r));
      }
    }
  }
  return GeneratorMatrix(std::move(g), a);
}

Scalar repair_helper_symbol(std::span<const Scalar> node_data, std::span<const Scalar> repair_vector,
                            const Field& field) {
  if (node_data.size() != repair_vector.size()) throw Error(Errc::DimensionMismatch, "helper data length");
  Scalar acc = 0;
  for (std::size_t i = 0; i < node_data.size(); ++i) acc = field.add(acc, field.mul(node_data[i], repair_vector[i]));
  return acc;
}

std::vector<Scalar> repair(const EncodingMatrix& enc, std::size_t failed, std::span<const std::size_t> helpers,
                           std::span<const Scalar> symbols) {
  const std::size_t a = enc.alpha();
  const std::size_t d = 2 * a;
  if (helpers.size() != d) {
    throw Error(Errc::BadHelperCount, "repair needs " + std::to_string(d) + " helpers, got " +
                                          std::to_string(helpers.size()));
  }
  if (symbols.size() != helpers.size()) throw Error(Errc::LengthMismatch, "one symbol per helper");
  if (failed >= enc.nodes()) throw Error(Errc::IndexOutOfRange, "failed node " + std::to_string(failed));
  require_distinct(helpers, enc.nodes(), "helper");
  if (std::find(helpers.begin(), helpers.end(), failed) != helpers.end()) {
    throw Error(Errc::BadHelperCount, "failed node listed as its own helper");
  }

  // Psi_d (M phi_f) = symbols.
  const std::vector<Scalar> m_phi = solve(row_select(enc.psi, helpers), symbols);
  const Field& f = enc.psi.field();
  std::vector<Scalar> row(a);
  for (std::size_t j = 0; j < a; ++j) row[j] = f.add(m_phi[j], f.mul(enc.lambda[failed], m_phi[a + j]));
  return row;
}

std::vector<Scalar> decode_generic(const GeneratorMatrix& g, std::span<const std::size_t> nodes,
                                   std::span<const Scalar> data) {
  const std::size_t k = g.message_length() / g.alpha();
  if (nodes.size() != k) {
    throw Error(Errc::BadCount, "decoding needs " + std::to_string(k) + " nodes, got " + std::to_string(nodes.size()));
  }
  require_distinct(nodes, g.nodes(), "node");
  if (data.size() != k * g.alpha()) throw Error(Errc::LengthMismatch, "decoding data length");
  return solve(g.stacked(nodes), data);
}

MessageMatrix decode_identity_block(const Matrix& c_k, std::span<const Scalar> lambda_k, std::span<const Scalar> r) {
  const std::size_t a = c_k.cols();
  if (c_k.rows() != a + 1 || lambda_k.size() != a + 1 || r.size() != a) {
    throw Error(Errc::DimensionMismatch, "identity-block decoding needs a (alpha+1) x alpha block");
  }
  const Field& f = c_k.field();
  const Scalar last_lambda = lambda_k[a];
  for (std::size_t i = 0; i <= a; ++i) {
    for (std::size_t j = i + 1; j <= a; ++j) {
      if (lambda_k[i] == lambda_k[j]) throw Error(Errc::DesignMismatch, "repeated lambda");
    }
  }
  for (Scalar ri : r) {
    if (ri == 0) throw Error(Errc::DesignMismatch, "r has a zero entry");
  }

  MessageMatrix m{Matrix(c_k.field_ptr(), a, a), Matrix(c_k.field_ptr(), a, a)};
  // Off-diagonal: C_ij = Sa_ij + lambda_i Sb_ij and C_ji = Sa_ij + lambda_j Sb_ij.
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = i + 1; j < a; ++j) {
      const Scalar sb = f.div(f.sub(c_k(i, j), c_k(j, i)), f.sub(lambda_k[i], lambda_k[j]));
      const Scalar sa = f.sub(c_k(i, j), f.mul(lambda_k[i], sb));
      m.sa(i, j) = m.sa(j, i) = sa;
      m.sb(i, j) = m.sb(j, i) = sb;
    }
  }
  // c1 = C_1 r = Sa r + Lambda Sb r and c2 = C_2^T = Sa r + lambda Sb r.
  for (std::size_t i = 0; i < a; ++i) {
    Scalar c1 = 0;
    for (std::size_t j = 0; j < a; ++j) c1 = f.add(c1, f.mul(c_k(i, j), r[j]));
    const Scalar c2 = c_k(a, i);
    const Scalar gap = f.sub(lambda_k[i], last_lambda);
    const Scalar sa_r = f.div(f.sub(f.mul(lambda_k[i], c2), f.mul(last_lambda, c1)), gap);
    const Scalar sb_r = f.div(f.sub(c1, c2), gap);

    Scalar sa_rest = 0, sb_rest = 0;
    for (std::size_t j = 0; j < a; ++j) {
      if (j == i) continue;
      sa_rest = f.add(sa_rest, f.mul(m.sa(i, j), r[j]));
      sb_rest = f.add(sb_rest, f.mul(m.sb(i, j), r[j]));
    }
    m.sa(i, i) = f.div(f.sub(sa_r, sa_rest), r[i]);
    m.sb(i, i) = f.div(f.sub(sb_r, sb_rest), r[i]);
  }
  return m;
}

MessageMatrix decode_identity_block(const EncodingMatrix& enc, const Matrix& c_k) {
  if (!enc.has_identity_block() || enc.nodes() < enc.alpha() + 1) {
    throw Error(Errc::DesignMismatch, "encoding lacks the identity block in its first alpha rows");
  }
  const std::size_t a = enc.alpha();
  std::vector<Scalar> lambda_k(enc.lambda.begin(), enc.lambda.begin() + static_cast<std::ptrdiff_t>(a + 1));
  const auto r = enc.phi.row(a);
  return decode_identity_block(c_k, lambda_k, std::vector<Scalar>(r.begin(), r.end()));
}

}  // namespace sparsepm
