#include "sparsepm/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <random>
#include <sstream>

#include "sparsepm/combinatorics.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SPARSEPM_X86 1
#endif

namespace sparsepm {

namespace {

std::string join(const std::vector<std::size_t>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ids[i]);
  }
  return s;
}

std::vector<Scalar> random_message(std::size_t b, const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> pick(0, f.order() - 1);
  std::vector<Scalar> m(b);
  for (Scalar& s : m) s = pick(rng);
  return m;
}

std::vector<Scalar> row_vector(const Matrix& m, std::size_t r) { return {m.row(r).begin(), m.row(r).end()}; }

// Columns of M holding packed coordinate t.
std::pair<std::size_t, std::size_t> columns_of(std::size_t t, std::size_t alpha) {
  std::size_t rest = t % (alpha * (alpha + 1) / 2);
  for (std::size_t i = 0; i < alpha; ++i) {
    if (rest < alpha - i) return {i, i + rest};
    rest -= alpha - i;
  }
  return {alpha, alpha};
}

}  // namespace

std::size_t SparsityReport::nonzeros() const {
  std::size_t total = 0;
  for (std::size_t nz : row_nonzeros) total += nz;
  return total;
}

std::size_t SparsityReport::parity_nonzeros() const {
  std::size_t total = 0;
  for (std::size_t r = first_parity_row; r < rows; ++r) total += row_nonzeros[r];
  return total;
}

std::size_t SparsityReport::max_row_nonzeros() const {
  return row_nonzeros.empty() ? 0 : *std::max_element(row_nonzeros.begin(), row_nonzeros.end());
}

std::size_t SparsityReport::rows_within(std::size_t node, std::size_t bound) const {
  std::size_t count = 0;
  for (std::size_t j = 0; j < alpha; ++j) count += row_nonzeros[node * alpha + j] <= bound;
  return count;
}

SparsityReport sparsity_report(const Matrix& m, std::size_t alpha, std::size_t k) {
  SparsityReport r;
  r.rows = m.rows();
  r.cols = m.cols();
  r.alpha = alpha;
  r.first_parity_row = std::min(k * alpha, m.rows());
  r.row_nonzeros.resize(r.rows);
  r.pattern.assign(r.rows, std::vector<bool>(r.cols));
  for (std::size_t i = 0; i < r.rows; ++i) {
    for (std::size_t j = 0; j < r.cols; ++j) {
      const bool nz = m(i, j) != 0;
      r.pattern[i][j] = nz;
      r.row_nonzeros[i] += nz;
    }
  }
  if (alpha) {
    r.block_max.assign(r.rows / alpha, 0);
    for (std::size_t i = 0; i < r.block_max.size() * alpha; ++i) {
      r.block_max[i / alpha] = std::max(r.block_max[i / alpha], r.row_nonzeros[i]);
    }
  }
  const double cells = static_cast<double>(r.rows * r.cols);
  r.zero_fraction = cells > 0 ? 1.0 - static_cast<double>(r.nonzeros()) / cells : 0.0;
  const double parity_cells = static_cast<double>((r.rows - r.first_parity_row) * r.cols);
  r.parity_zero_fraction = parity_cells > 0 ? 1.0 - static_cast<double>(r.parity_nonzeros()) / parity_cells : 0.0;
  return r;
}

SparsityReport sparsity_report(const GeneratorMatrix& g, std::size_t k) {
  return sparsity_report(g.matrix(), g.alpha(), k);
}

std::vector<std::pair<std::size_t, std::size_t>> column_lemma_violations(const Matrix& remap, std::size_t alpha) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t r = 0; r < remap.rows(); ++r) {
    const auto [ri, rj] = columns_of(r, alpha);
    for (std::size_t t = 0; t < remap.cols(); ++t) {
      if (remap(r, t) == 0) continue;
      const auto [ti, tj] = columns_of(t, alpha);
      if ((ti != ri && tj != ri) || (ti != rj && tj != rj)) bad.emplace_back(r, t);
    }
  }
  return bad;
}

bool Certification::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Certification::find(const std::string& name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Certification certify(const Code& code, const CertifyOptions& options) {
  const CodeParams& p = code.params();
  const Field& field = code.field();
  std::mt19937_64 rng(options.seed);
  Certification cert;

  {
    CheckResult check{"consistency"};
    for (std::size_t i = 0; i < options.consistency_messages && check.passed; ++i) {
      const auto m = random_message(p.message_length, field, rng);
      ++check.cases;
      if (!(code.encode(m) == code.encode_structured(m))) {
        check.passed = false;
        check.witness = "message " + std::to_string(i) + " encodes differently through the generator";
      }
    }
    cert.checks.push_back(check);
  }

  const auto message = random_message(p.message_length, field, rng);
  const Matrix stored = code.encode(message);

  {
    CheckResult check{"mds"};
    check.exhaustive = for_each_subset(p.n, p.k, options.max_exhaustive, options.samples, options.seed,
                                       [&](const std::vector<std::size_t>& nodes) {
                                         ++check.cases;
                                         std::vector<Scalar> data;
                                         for (std::size_t node : nodes) {
                                           data.insert(data.end(), stored.row(node).begin(), stored.row(node).end());
                                         }
                                         try {
                                           if (code.decode(nodes, data) == message) return true;
                                           check.witness = "nodes {" + join(nodes) + "} decode wrongly";
                                         } catch (const Error& e) {
                                           check.witness = "nodes {" + join(nodes) + "}: " + e.what();
                                         }
                                         check.passed = false;
                                         return false;
                                       });
    cert.checks.push_back(check);
  }

  {
    CheckResult check{"repair"};
    CheckResult bandwidth{"repair-bandwidth"};
    const std::uint64_t total = p.n * binomial(p.n - 1, p.d);
    check.exhaustive = total <= options.max_exhaustive;
    bandwidth.exhaustive = check.exhaustive;
    auto run = [&](std::size_t failed, const std::vector<std::size_t>& helpers) {
      ++check.cases;
      std::vector<Scalar> symbols;
      for (std::size_t h : helpers) symbols.push_back(code.helper_symbol(stored.row(h), failed));
      ++bandwidth.cases;
      if (symbols.size() != p.d || symbols.size() >= p.message_length) {
        bandwidth.passed = false;
        bandwidth.witness = std::to_string(symbols.size()) + " symbols for node " + std::to_string(failed);
      }
      try {
        if (code.repair(failed, helpers, symbols) == row_vector(stored, failed)) return true;
        check.witness = "node " + std::to_string(failed) + " from {" + join(helpers) + "} rebuilt wrongly";
      } catch (const Error& e) {
        check.witness = "node " + std::to_string(failed) + " from {" + join(helpers) + "}: " + e.what();
      }
      check.passed = false;
      return false;
    };
    auto helpers_for = [&](std::size_t failed, const std::vector<std::size_t>& pick) {
      std::vector<std::size_t> helpers;
      for (std::size_t q : pick) helpers.push_back(q < failed ? q : q + 1);
      return helpers;
    };
    if (check.exhaustive) {
      for (std::size_t failed = 0; failed < p.n && check.passed; ++failed) {
        std::vector<std::size_t> pick = iota_ids(0, p.d);
        do {
          if (!run(failed, helpers_for(failed, pick))) break;
        } while (next_combination(pick, p.n - 1));
      }
    } else {
      std::mt19937_64 sampler(options.seed ^ 0x9e3779b97f4a7c15ull);
      std::uniform_int_distribution<std::size_t> node(0, p.n - 1);
      for (std::size_t s = 0; s < options.samples && check.passed; ++s) {
        const std::size_t failed = node(sampler);
        run(failed, helpers_for(failed, sample_combination(p.n - 1, p.d, sampler)));
      }
    }
    cert.checks.push_back(check);
    cert.checks.push_back(bandwidth);
  }

  const bool systematic = code.is_systematic();
  {
    CheckResult check{"systematic"};
    check.cases = 1;
    check.passed = systematic;
    if (!systematic) check.witness = "top " + std::to_string(p.message_length) + " rows are not the identity";
    cert.checks.push_back(check);
  }
  if (!systematic) return cert;

  const SparsityReport report = sparsity_report(code.generator(), p.k);
  const EncodingMatrix& enc = code.encoding();
  const std::size_t a = p.alpha;
  const std::size_t dummies = code.dummies();

  if (enc.has_identity_block() && code.node_transform().is_identity() && dummies == 0) {
    CheckResult check{"sparsity-d"};
    for (std::size_t r = 0; r < report.rows; ++r) {
      ++check.cases;
      if (report.row_nonzeros[r] > p.d && check.passed) {
        check.passed = false;
        check.witness = "row " + std::to_string(r) + " has " + std::to_string(report.row_nonzeros[r]) + " nonzeros";
      }
    }
    cert.checks.push_back(check);
  }

  // Repair vectors of the first alpha parent nodes are unit vectors.
  const Matrix p_inv = invert(code.node_transform());
  bool rbt_sys = true;
  for (std::size_t j = 0; j < a && rbt_sys; ++j) {
    const auto v = matvec(p_inv, enc.phi.row(j));
    for (std::size_t t = 0; t < a; ++t) rbt_sys = rbt_sys && v[t] == (t == j ? 1u : 0u);
  }
  if (!rbt_sys) return cert;

  {
    CheckResult check{"rbt-sys"};
    for (std::size_t failed = 0; failed + dummies < a && failed < p.n; ++failed) {
      for (std::size_t h = 0; h < p.n; ++h) {
        if (h == failed) continue;
        ++check.cases;
        const Scalar sent = code.helper_symbol(stored.row(h), failed);
        if (sent != stored(h, failed + dummies) && check.passed) {
          check.passed = false;
          check.witness = "helper " + std::to_string(h) + " to node " + std::to_string(failed);
        }
      }
    }
    cert.checks.push_back(check);
  }

  CheckResult check{dummies == 0 ? "sparsity-rbt" : "sparsity-shortened"};
  for (std::size_t node = p.k; node < p.n; ++node) {
    ++check.cases;
    std::string problem;
    if (dummies == 0) {
      const std::size_t need = std::min(a, p.k);
      if (report.rows_within(node, p.d) < need) {
        problem = std::to_string(report.rows_within(node, p.d)) + " rows within " + std::to_string(p.d);
      }
    } else {
      for (std::size_t j = 0; j < a && problem.empty(); ++j) {
        const std::size_t bound = j < dummies ? p.k : p.d;
        const std::size_t nz = report.row_nonzeros[node * a + j];
        if (nz > bound) problem = "row " + std::to_string(j) + " has " + std::to_string(nz) + " nonzeros";
      }
    }
    if (!problem.empty() && check.passed) {
      check.passed = false;
      check.witness = "node " + std::to_string(node) + ": " + problem;
    }
  }
  cert.checks.push_back(check);
  return cert;
}

namespace {

struct MulTables {
  std::uint8_t full[256][256];
  alignas(32) std::uint8_t lo[256][32];
  alignas(32) std::uint8_t hi[256][32];

  explicit MulTables(const Field& f) {
    for (unsigned c = 0; c < 256; ++c) {
      for (unsigned x = 0; x < 256; ++x) full[c][x] = static_cast<std::uint8_t>(f.mul(c, x));
      for (unsigned x = 0; x < 16; ++x) {
        lo[c][x] = lo[c][x + 16] = full[c][x];
        hi[c][x] = hi[c][x + 16] = full[c][x << 4];
      }
    }
  }
};

void mul_add_scalar(const MulTables& t, std::uint8_t c, const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
  const std::uint8_t* row = t.full[c];
  for (std::size_t i = 0; i < n; ++i) out[i] ^= row[in[i]];
}

#ifdef SPARSEPM_X86
__attribute__((target("avx2"))) void mul_add_avx2(const MulTables& t, std::uint8_t c, const std::uint8_t* in,
                                                 std::uint8_t* out, std::size_t n) {
  const __m256i lo = _mm256_load_si256(reinterpret_cast<const __m256i*>(t.lo[c]));
  const __m256i hi = _mm256_load_si256(reinterpret_cast<const __m256i*>(t.hi[c]));
  const __m256i mask = _mm256_set1_epi8(0x0f);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    const __m256i l = _mm256_shuffle_epi8(lo, _mm256_and_si256(x, mask));
    const __m256i h = _mm256_shuffle_epi8(hi, _mm256_and_si256(_mm256_srli_epi64(x, 4), mask));
    __m256i* dst = reinterpret_cast<__m256i*>(out + i);
    _mm256_storeu_si256(dst, _mm256_xor_si256(_mm256_loadu_si256(dst), _mm256_xor_si256(l, h)));
  }
  mul_add_scalar(t, c, in + i, out + i, n - i);
}

bool have_avx2() {
  static const bool yes = __builtin_cpu_supports("avx2");
  return yes;
}
#endif

void mul_add(const MulTables& t, std::uint8_t c, const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
#ifdef SPARSEPM_X86
  if (have_avx2()) return mul_add_avx2(t, c, in, out, n);
#endif
  mul_add_scalar(t, c, in, out, n);
}

const MulTables& gf256_tables() {
  static const MulTables t(Field::gf256());
  return t;
}

constexpr std::size_t kBlock = 2048;

}  // namespace

ParityEncoder::ParityEncoder(const GeneratorMatrix& g, std::size_t k) : message_length_(g.message_length()) {
  const Field& f = g.field();
  if (f.kind() != FieldKind::Binary || f.modulus() != Field::kDefaultPolynomial) {
    throw Error(Errc::Unsupported, "byte encoding needs GF(2^8) with the default polynomial");
  }
  const Matrix& m = g.matrix();
  for (std::size_t r = k * g.alpha(); r < m.rows(); ++r) {
    std::vector<Term> sparse;
    std::vector<Term> dense;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Term term{static_cast<std::uint32_t>(c), static_cast<std::uint8_t>(m(r, c))};
      dense.push_back(term);
      if (term.coeff) sparse.push_back(term);
    }
    rows_.push_back(std::move(sparse));
    dense_rows_.push_back(std::move(dense));
  }
}

std::size_t ParityEncoder::nonzeros() const noexcept {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

void ParityEncoder::encode(const std::uint8_t* data, std::size_t chunk, std::uint8_t* out, bool skip_zeros) const {
  const MulTables& t = gf256_tables();
  const auto& rows = skip_zeros ? rows_ : dense_rows_;
  for (std::size_t off = 0; off < chunk; off += kBlock) {
    const std::size_t len = std::min(kBlock, chunk - off);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint8_t* dst = out + r * chunk + off;
      std::memset(dst, 0, len);
      for (const Term& term : rows[r]) mul_add(t, term.coeff, data + term.col * chunk + off, dst, len);
    }
  }
}

BenchComparison benchmark_encode(const Code& sparse, const Code& dense, const BenchOptions& options,
                                 const std::string& sparse_label, const std::string& dense_label) {
  const CodeParams& ps = sparse.params();
  const CodeParams& pd = dense.params();
  if (ps.n != pd.n || ps.k != pd.k || ps.d != pd.d || !(*ps.field == *pd.field)) {
    throw Error(Errc::Unsupported, "benchmarked codes must share parameters and field");
  }
  const ParityEncoder enc_sparse(sparse.generator(), ps.k);
  const ParityEncoder enc_dense(dense.generator(), pd.k);

  const std::size_t b = ps.message_length;
  const std::size_t chunk = options.workload_bytes / b;
  std::vector<std::uint8_t> data(chunk * b);
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < data.size(); i += 8) {
    const std::uint64_t word = rng();
    std::memcpy(data.data() + i, &word, std::min<std::size_t>(8, data.size() - i));
  }
  const std::size_t parity = enc_sparse.parity_rows();
  std::vector<std::uint8_t> out(parity * chunk);
  std::vector<std::uint8_t> reference(parity * chunk);

  BenchComparison result;
  auto fill = [&](BenchResult& r, const std::string& label, const ParityEncoder& e) {
    r.label = label;
    r.field = ps.field->name();
    r.n = ps.n;
    r.k = ps.k;
    r.d = ps.d;
    r.bytes = data.size();
    r.parity_nonzeros = e.nonzeros();
  };
  fill(result.sparse, sparse_label, enc_sparse);
  fill(result.dense, dense_label, enc_dense);
  result.predicted_speedup =
      enc_sparse.nonzeros() ? static_cast<double>(enc_dense.nonzeros()) / static_cast<double>(enc_sparse.nonzeros())
                            : 0.0;

  auto time_once = [&](const ParityEncoder& e) {
    const auto start = std::chrono::steady_clock::now();
    e.encode(data.data(), chunk, out.data());
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  // Warmup round, discarded.
  time_once(enc_sparse);
  time_once(enc_dense);
  std::vector<double> ts, td;
  for (std::size_t rep = 0; rep < std::max<std::size_t>(options.repetitions, 1); ++rep) {
    ts.push_back(time_once(enc_sparse));
    td.push_back(time_once(enc_dense));
  }
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
  };
  result.sparse.seconds = median(ts);
  result.dense.seconds = median(td);

  if (!data.empty()) {
    const double mib = static_cast<double>(data.size()) / (1024.0 * 1024.0);
    for (BenchResult* r : {&result.sparse, &result.dense}) {
      if (r->seconds > 0) r->throughput = mib / r->seconds;
      if (r->seconds > 0) r->speedup = result.dense.seconds / r->seconds;
    }
  }

  for (const ParityEncoder* e : {&enc_sparse, &enc_dense}) {
    e->encode(data.data(), chunk, out.data(), true);
    e->encode(data.data(), chunk, reference.data(), false);
    result.bit_identical = result.bit_identical && out == reference;
  }
  return result;
}

namespace {

std::string fixed(double v, int digits = 4) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

std::string optional_fixed(const std::optional<double>& v, int digits = 4) { return v ? fixed(*v, digits) : "absent"; }

}  // namespace

std::string to_text(const SparsityReport& r) {
  std::ostringstream os;
  os << "rows: " << r.rows << "\ncols: " << r.cols << "\nalpha: " << r.alpha << "\nparity_rows: "
     << r.rows - r.first_parity_row << "\nnonzeros: " << r.nonzeros() << "\nparity_nonzeros: " << r.parity_nonzeros()
     << "\nmax_row_nonzeros: " << r.max_row_nonzeros() << "\nzero_fraction: " << fixed(r.zero_fraction)
     << "\nparity_zero_fraction: " << fixed(r.parity_zero_fraction) << "\nblock_max:";
  for (std::size_t m : r.block_max) os << ' ' << m;
  os << "\npattern:\n";
  for (const auto& row : r.pattern) {
    for (bool nz : row) os << (nz ? '*' : '.');
    os << '\n';
  }
  return os.str();
}

std::string to_tsv(const SparsityReport& r) {
  std::ostringstream os;
  os << "row\tnode\tsymbol\tparity\tnonzeros\n";
  for (std::size_t i = 0; i < r.rows; ++i) {
    os << i << '\t' << (r.alpha ? i / r.alpha : 0) << '\t' << (r.alpha ? i % r.alpha : 0) << '\t'
       << (i >= r.first_parity_row ? 1 : 0) << '\t' << r.row_nonzeros[i] << '\n';
  }
  return os.str();
}

std::string to_text(const Certification& c) {
  std::ostringstream os;
  os << "verdict: " << (c.passed() ? "pass" : "fail") << '\n';
  for (const CheckResult& check : c.checks) {
    os << check.name << ": " << (check.passed ? "pass" : "fail") << " cases=" << check.cases
       << (check.exhaustive ? " exhaustive" : " sampled");
    if (!check.witness.empty()) os << " witness=" << check.witness;
    os << '\n';
  }
  return os.str();
}

std::string to_text(const BenchComparison& b) {
  std::ostringstream os;
  for (const BenchResult* r : {&b.sparse, &b.dense}) {
    const std::string p = r->label + ".";
    os << p << "field: " << r->field << '\n'
       << p << "params: " << r->n << ',' << r->k << ',' << r->d << '\n'
       << p << "bytes: " << r->bytes << '\n'
       << p << "parity_nonzeros: " << r->parity_nonzeros << '\n'
       << p << "seconds: " << fixed(r->seconds, 6) << '\n'
       << p << "throughput_mib_s: " << optional_fixed(r->throughput, 2) << '\n'
       << p << "speedup: " << optional_fixed(r->speedup) << '\n';
  }
  os << "predicted_speedup: " << fixed(b.predicted_speedup) << '\n'
     << "measured_speedup: " << optional_fixed(b.sparse.speedup) << '\n'
     << "bit_identical: " << (b.bit_identical ? "yes" : "no") << '\n';
  return os.str();
}

std::string to_tsv(const BenchComparison& b) {
  std::ostringstream os;
  os << "label\tfield\tn\tk\td\tbytes\tparity_nonzeros\tseconds\tthroughput_mib_s\tspeedup\n";
  for (const BenchResult* r : {&b.sparse, &b.dense}) {
    os << r->label << '\t' << r->field << '\t' << r->n << '\t' << r->k << '\t' << r->d << '\t' << r->bytes << '\t'
       << r->parity_nonzeros << '\t' << fixed(r->seconds, 6) << '\t' << optional_fixed(r->throughput, 2) << '\t'
       << optional_fixed(r->speedup) << '\n';
  }
  return os.str();
}

}  // namespace sparsepm
