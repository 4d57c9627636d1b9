#include "doctest.h"

#include <random>

#include "golden.hpp"
#include "sparsepm/analysis.hpp"
#include "sparsepm/sparse_construct.hpp"

using namespace sparsepm;

namespace {

const FieldPtr& f11() {
  static const FieldPtr f = make_prime_field(11);
  return f;
}

}  // namespace

TEST_CASE("sparsity of the printed generators") {
  const Matrix sparse = Matrix::from_rows(f11(), golden::systematic(golden::kGPrimeSysParity));
  const SparsityReport r = sparsity_report(sparse, 3, 4);
  CHECK(r.max_row_nonzeros() <= 6);
  CHECK(r.row_nonzeros[12] == 6);
  CHECK(r.first_parity_row == 12);
  CHECK(r.block_max.size() == 8);

  const Matrix dense = Matrix::from_rows(f11(), golden::systematic(golden::kGsysParity));
  const SparsityReport d = sparsity_report(dense, 3, 4);
  CHECK(d.row_nonzeros[12] == 10);
  std::size_t wide = 0;
  for (std::size_t r = 12; r < 24; ++r) wide += d.row_nonzeros[r] >= 10;
  CHECK(wide > 0);

  // Zero fraction from a direct count.
  std::size_t zeros = 0;
  for (const auto& row : golden::kGPrimeSysParity)
    for (Scalar v : row) zeros += v == 0;
  CHECK(r.parity_zero_fraction == doctest::Approx(static_cast<double>(zeros) / 144.0));
  CHECK(r.zero_fraction == doctest::Approx(1.0 - static_cast<double>(r.nonzeros()) / 288.0));

  const SparsityReport id = sparsity_report(Matrix::identity(f11(), 6), 3, 2);
  for (std::size_t nz : id.row_nonzeros) CHECK(nz == 1);
  CHECK(id.pattern[2][2]);
  CHECK_FALSE(id.pattern[2][3]);
}

TEST_CASE("column lemma violations") {
  const Code base(sparsify_encoding(
      build_vandermonde_encoding(build_params(8, 4, 6, f11()), std::vector<Scalar>{1, 2, 3, 4, 5, 6, 7, 8})));
  CHECK(column_lemma_violations(remap_via_inclusion(base).remap, 3).empty());
  // The generic remap mixes columns.
  CHECK_FALSE(column_lemma_violations(remap_generic(base).remap, 3).empty());
}

TEST_CASE("certify the sparse [8,4,6] code") {
  const SystematicCode sys = build_sparse_systematic(8, 4, 6, f11());
  const Certification cert = certify(sys.code);
  CHECK(cert.passed());
  REQUIRE(cert.find("mds"));
  CHECK(cert.find("mds")->cases == 70);
  CHECK(cert.find("mds")->exhaustive);
  CHECK(cert.find("repair")->cases == 56);
  CHECK(cert.find("repair-bandwidth")->passed);
  CHECK(cert.find("systematic")->passed);
  CHECK(cert.find("sparsity-d"));
  // Phi Phi_a^{-1} puts unit repair vectors on the first alpha nodes as well.
  REQUIRE(cert.find("rbt-sys"));
  CHECK(cert.find("rbt-sys")->passed);
  CHECK(cert.find("sparsity-rbt"));
  CHECK(to_text(cert).rfind("verdict: pass", 0) == 0);
  CHECK(to_text(certify(sys.code)) == to_text(cert));
}

TEST_CASE("certify the RBT [8,4,6] code") {
  const Certification cert = certify(build_systematic(8, 4, 6, Construction::Rbt, f11()).code);
  CHECK(cert.passed());
  REQUIRE(cert.find("rbt-sys"));
  CHECK(cert.find("rbt-sys")->cases == 21);
  CHECK(cert.find("sparsity-rbt"));
}

TEST_CASE("certify detects a corrupted generator") {
  const SystematicCode sys = build_sparse_systematic(8, 4, 6, f11());
  Matrix g = sys.g_sys().matrix();
  g(14, 5) = f11()->add(g(14, 5), 1);
  const Certification cert = certify(sys.code.with_generator(GeneratorMatrix(g, 3)));
  CHECK_FALSE(cert.passed());
  REQUIRE(cert.find("consistency"));
  CHECK_FALSE(cert.find("consistency")->passed);
  CHECK_FALSE(cert.find("consistency")->witness.empty());
  CHECK(to_text(cert).find("witness=") != std::string::npos);

  // Breaking the systematic block is caught too.
  Matrix h = sys.g_sys().matrix();
  h(0, 0) = 0;
  const Certification broken = certify(sys.code.with_generator(GeneratorMatrix(h, 3)));
  CHECK_FALSE(broken.find("systematic")->passed);
  CHECK_FALSE(broken.find("mds")->passed);
}

TEST_CASE("sampled certification of [17,8,15]") {
  const SystematicCode sys = build_sparse_systematic(17, 8, 15);
  CertifyOptions options;
  options.max_exhaustive = 1000;
  options.samples = 60;
  const Certification cert = certify(sys.code, options);
  CHECK(cert.passed());
  CHECK_FALSE(cert.find("mds")->exhaustive);
  CHECK(cert.find("mds")->cases == 60);
  CHECK(cert.find("repair")->exhaustive);
  CHECK(cert.find("repair")->cases == 17 * 16);
  REQUIRE(cert.find("sparsity-shortened"));
  CHECK(cert.find("sparsity-shortened")->passed);
  CHECK(to_text(certify(sys.code, options)) == to_text(cert));
}

TEST_CASE("parity encoder matches the generator symbol by symbol") {
  const FieldPtr gf = make_gf256();
  const SystematicCode sys = build_sparse_systematic(8, 4, 6, gf);
  const ParityEncoder enc(sys.g_sys(), 4);
  CHECK(enc.parity_rows() == 12);

  const std::size_t chunk = 100;
  std::vector<std::uint8_t> data(12 * chunk);
  std::mt19937_64 rng(41);
  for (auto& b : data) b = static_cast<std::uint8_t>(rng());
  std::vector<std::uint8_t> out(12 * chunk), full(12 * chunk);
  enc.encode(data.data(), chunk, out.data());
  enc.encode(data.data(), chunk, full.data(), false);
  CHECK(out == full);

  for (std::size_t pos = 0; pos < chunk; ++pos) {
    std::vector<Scalar> msg(12);
    for (std::size_t t = 0; t < 12; ++t) msg[t] = data[t * chunk + pos];
    const auto coded = sys.g_sys().apply(msg);
    for (std::size_t r = 0; r < 12; ++r) CHECK(out[r * chunk + pos] == coded[12 + r]);
  }

  CHECK_THROWS_AS(ParityEncoder(build_sparse_systematic(8, 4, 6, f11()).g_sys(), 4), Error);
}

TEST_CASE("benchmark plumbing") {
  const FieldPtr gf = make_gf256();
  const SystematicCode sparse = build_sparse_systematic(8, 4, 6, gf);
  const SystematicCode dense = build_systematic(8, 4, 6, Construction::Vanilla, gf);

  BenchOptions empty;
  empty.workload_bytes = 0;
  const BenchComparison none = benchmark_encode(sparse.code, dense.code, empty);
  CHECK(none.sparse.bytes == 0);
  CHECK_FALSE(none.sparse.throughput.has_value());
  CHECK_FALSE(none.sparse.speedup.has_value());
  CHECK(to_text(none).find("throughput_mib_s: absent") != std::string::npos);

  BenchOptions small;
  small.workload_bytes = 1 << 20;
  const BenchComparison same = benchmark_encode(sparse.code, sparse.code, small);
  CHECK(same.predicted_speedup == doctest::Approx(1.0));
  REQUIRE(same.sparse.speedup.has_value());
  CHECK(*same.sparse.speedup == doctest::Approx(1.0).epsilon(0.5));
  CHECK(same.bit_identical);

  const BenchComparison cmp = benchmark_encode(sparse.code, dense.code, small);
  CHECK(cmp.bit_identical);
  CHECK(cmp.predicted_speedup > 1.0);
  CHECK(cmp.sparse.bytes == (small.workload_bytes / 12) * 12);
  CHECK(to_tsv(cmp).find("sparse\tGF(2^8)\t8\t4\t6") != std::string::npos);

  CHECK_THROWS_AS(benchmark_encode(sparse.code, build_sparse_systematic(9, 4, 7, gf).code, small), Error);
}
