#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsepm/code.hpp"

namespace sparsepm {

struct SparsityReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t alpha = 0;
  std::size_t first_parity_row = 0;  // k * alpha
  std::vector<std::size_t> row_nonzeros;
  std::vector<std::size_t> block_max;  // per node
  std::vector<std::vector<bool>> pattern;
  double zero_fraction = 0;
  double parity_zero_fraction = 0;

  std::size_t nonzeros() const;
  std::size_t parity_nonzeros() const;
  std::size_t max_row_nonzeros() const;
  // Rows of `node` with at most `bound` nonzeros.
  std::size_t rows_within(std::size_t node, std::size_t bound) const;
};

// Rows from k * alpha on are counted as parity.
SparsityReport sparsity_report(const GeneratorMatrix& g, std::size_t k);
SparsityReport sparsity_report(const Matrix& m, std::size_t alpha, std::size_t k);

// Nonzero entries (r, t) of an inclusion-route remap where message symbol t
// does not share both columns of remapped symbol r.
std::vector<std::pair<std::size_t, std::size_t>> column_lemma_violations(const Matrix& remap, std::size_t alpha);

struct CheckResult {
  explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  bool exhaustive = true;
  std::size_t cases = 0;
  std::string witness;
};

struct Certification {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

struct CertifyOptions {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t max_exhaustive = kExhaustiveSubsetLimit;
  std::size_t samples = kSampledSubsets;
  std::size_t consistency_messages = 20;
};

// Consistency of the generator against the structural encoder, MDS decoding,
// repair from d helpers, the systematic top block, and whichever sparsity
// theorems the code's structure makes applicable.
Certification certify(const Code& code, const CertifyOptions& options = {});

// Zero-skipping multiply of a GF(2^8) generator's parity rows.
class ParityEncoder {
 public:
  ParityEncoder(const GeneratorMatrix& g, std::size_t k);

  std::size_t message_length() const noexcept { return message_length_; }
  std::size_t parity_rows() const noexcept { return rows_.size(); }
  std::size_t nonzeros() const noexcept;

  // `data` holds B chunks of `chunk` bytes; `out` receives one chunk per
  // parity row. With skip_zeros false every coefficient is applied.
  void encode(const std::uint8_t* data, std::size_t chunk, std::uint8_t* out, bool skip_zeros = true) const;

 private:
  struct Term {
    std::uint32_t col;
    std::uint8_t coeff;
  };
  std::size_t message_length_ = 0;
  std::vector<std::vector<Term>> rows_;
  std::vector<std::vector<Term>> dense_rows_;
};

struct BenchResult {
  std::string label;
  std::string field;
  std::size_t n = 0, k = 0, d = 0;
  std::size_t bytes = 0;
  std::size_t parity_nonzeros = 0;
  double seconds = 0;                 // median
  std::optional<double> throughput;   // MiB/s, absent for an empty workload
  std::optional<double> speedup;      // baseline seconds / seconds
};

struct BenchComparison {
  BenchResult sparse;
  BenchResult dense;
  double predicted_speedup = 0;  // dense parity nonzeros / sparse parity nonzeros
  bool bit_identical = true;     // zero-skipping and full multiply agree
};

struct BenchOptions {
  std::size_t workload_bytes = 64u << 20;
  std::size_t repetitions = 5;
  std::uint64_t seed = kDefaultSeed;
};

// Both codes must share (n, k, d) and GF(2^8). Throws Unsupported otherwise.
BenchComparison benchmark_encode(const Code& sparse, const Code& dense, const BenchOptions& options = {},
                                 const std::string& sparse_label = "sparse",
                                 const std::string& dense_label = "vanilla");

// Structured text: "key: value" lines.
std::string to_text(const SparsityReport& r);
std::string to_text(const Certification& c);
std::string to_text(const BenchComparison& b);
// One tab-separated record per line with a header.
std::string to_tsv(const SparsityReport& r);
std::string to_tsv(const BenchComparison& b);

}  // namespace sparsepm
