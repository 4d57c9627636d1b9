// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "golden.hpp"
#include "sparsepm/analysis.hpp"
#include "sparsepm/sparse_construct.hpp"

using namespace sparsepm;

namespace {

// Pinned tolerances.
constexpr double kSparseZeroFloor = 0.75;
constexpr double kVanillaZeroCeiling = 0.25;
constexpr double kMinSpeedup = 2.5;
constexpr double kPredictionBand = 0.30;
constexpr std::size_t kBenchBytes = 64u << 20;
constexpr std::size_t kBenchReps = 5;
constexpr int kRandomMessages = 100;

FieldPtr f11() {
  static const FieldPtr f = make_prime_field(11);
  return f;
}

std::vector<Scalar> eight_points() { return {1, 2, 3, 4, 5, 6, 7, 8}; }

std::vector<Scalar> random_message(std::size_t len, const Field& f, std::mt19937_64& rng) {
  std::vector<Scalar> m(len);
  for (Scalar& s : m) s = static_cast<Scalar>(rng() % f.order());
  return m;
}

std::vector<Scalar> flatten(const Matrix& m) {
  std::vector<Scalar> v;
  for (std::size_t r = 0; r < m.rows(); ++r) v.insert(v.end(), m.row(r).begin(), m.row(r).end());
  return v;
}

struct Outcome {
  bool pass = true;
  std::ostringstream log;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      log << " [failed: " << what << "]";
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

void golden_vectors(Outcome& o) {
  const SystematicCode vanilla = build_systematic(8, 4, 6, Construction::Vanilla, f11(), eight_points());
  const SystematicCode sparse = build_systematic(8, 4, 6, Construction::Sparse, f11(), eight_points());
  auto same = [](const Matrix& m, const golden::Rows& rows) { return m == Matrix::from_rows(m.field_ptr(), rows); };
  o.expect(same(vanilla.base.encoding().psi, golden::kPsi), "Psi");
  o.expect(same(vanilla.base.generator().matrix(), golden::kG), "G");
  o.expect(same(vanilla.g_sys().matrix(), golden::systematic(golden::kGsysParity)), "G_sys");
  o.expect(same(sparse.base.encoding().psi, golden::kPsiPrime), "Psi'");
  o.expect(same(sparse.base.generator().matrix(), golden::kGPrime), "G'");
  o.expect(same(sparse.g_sys().matrix(), golden::systematic(golden::kGPrimeSysParity)), "G'_sys");
  o.log << " six matrices compared entry by entry";
}

void sparsity_d(Outcome& o) {
  struct Case {
    std::size_t n, k, d;
    FieldPtr field;
  };
  for (const Case& c : {Case{8, 4, 6, f11()}, Case{12, 6, 10, nullptr}, Case{14, 7, 12, nullptr}}) {
    const SystematicCode sys = build_sparse_systematic(c.n, c.k, c.d, c.field);
    const SparsityReport r = sparsity_report(sys.g_sys(), c.k);
    std::size_t over = 0;
    for (std::size_t nz : r.row_nonzeros) over += nz > c.d;
    o.log << " [" << c.n << "," << c.k << "," << c.d << "]/" << sys.code.field().name() << ": max "
          << r.max_row_nonzeros() << ", rows over d " << over;
    o.expect(over == 0 && r.max_row_nonzeros() <= c.d, "row above d");
  }
}

void shortened_sparsity(Outcome& o) {
  struct Case {
    std::size_t n, k, d;
  };
  for (const Case& c : {Case{17, 8, 15}, Case{12, 5, 10}}) {
    const SystematicCode sys = build_sparse_systematic(c.n, c.k, c.d);
    const std::size_t i = c.d - (2 * c.k - 2);
    const SparsityReport r = sparsity_report(sys.g_sys(), c.k);
    const std::size_t a = r.alpha;
    std::size_t narrow = 0, wide = 0;
    const std::size_t blocks = c.n - c.k;
    for (std::size_t node = c.k; node < c.n; ++node) {
      for (std::size_t row = 0; row < a; ++row) {
        const std::size_t nz = r.row_nonzeros[node * a + row];
        if (row < i) narrow += nz <= c.k;
        else wide += nz <= c.d;
      }
    }
    o.log << " [" << c.n << "," << c.k << "," << c.d << "] i=" << i << ": rows <= k " << narrow << "/"
          << blocks * i << ", rows <= d " << wide << "/" << blocks * (c.k - 1);
    o.expect(a == i + c.k - 1, "alpha");
    o.expect(narrow == blocks * i, "first i rows within k");
    o.expect(wide == blocks * (c.k - 1), "remaining rows within d");
  }
}

void headline_sparsity(Outcome& o) {
  const SystematicCode sparse = build_systematic(17, 8, 15, Construction::Sparse);
  const SystematicCode vanilla = build_systematic(17, 8, 15, Construction::Vanilla);
  const double s = sparsity_report(sparse.g_sys(), 8).parity_zero_fraction;
  const double v = sparsity_report(vanilla.g_sys(), 8).parity_zero_fraction;
  char buf[160];
  std::snprintf(buf, sizeof buf, " %s: sparse parity zero fraction %.4f, vanilla %.4f",
                sparse.code.field().name().c_str(), s, v);
  o.log << buf;
  o.expect(s >= kSparseZeroFloor, "sparse below floor");
  o.expect(v <= kVanillaZeroCeiling, "vanilla above ceiling");
}

void mds_and_repair(Outcome& o) {
  for (Construction c : {Construction::Sparse, Construction::Vanilla}) {
    const SystematicCode sys = build_systematic(8, 4, 6, c, f11(), eight_points());
    const Certification cert = certify(sys.code);
    const CheckResult* mds = cert.find("mds");
    const CheckResult* rep = cert.find("repair");
    const CheckResult* bw = cert.find("repair-bandwidth");
    o.expect(mds && mds->passed && mds->exhaustive && mds->cases == 70, "70 decodes");
    o.expect(rep && rep->passed && rep->exhaustive && rep->cases == 56, "56 repairs");
    o.expect(bw && bw->passed && bw->cases == 56, "d scalars per repair");
    o.log << " " << to_string(c) << ": decodes " << (mds ? mds->cases : 0) << ", repairs "
          << (rep ? rep->cases : 0);
  }
  // Independently: every repair takes exactly d scalars and no other count.
  const Code code = build_sparse_systematic(8, 4, 6, f11()).code;
  const std::vector<std::size_t> helpers{1, 2, 3, 4, 5};
  bool refused = false;
  try {
    code.repair(0, helpers, std::vector<Scalar>(5, 0));
  } catch (const Error&) {
    refused = true;
  }
  o.expect(refused, "repair with d-1 scalars accepted");
}

void rbt_sys(Outcome& o) {
  const Code code = build_systematic(8, 4, 6, Construction::Rbt, f11(), eight_points()).code;
  const std::size_t alpha = code.params().alpha;
  std::mt19937_64 rng(6);
  std::size_t cases = 0, mismatches = 0;
  for (int t = 0; t < kRandomMessages; ++t) {
    const Matrix c = code.encode(random_message(code.params().message_length, code.field(), rng));
    for (std::size_t j = 0; j < alpha; ++j) {
      for (std::size_t i = 0; i < code.params().n; ++i) {
        if (i == j) continue;
        ++cases;
        mismatches += code.helper_symbol(c.row(i), j) != c(i, j);
      }
    }
  }
  o.log << " transfers checked " << cases << ", mismatches " << mismatches;
  o.expect(cases == static_cast<std::size_t>(kRandomMessages) * 21 && mismatches == 0, "transfer differs");
}

void equivalence(Outcome& o) {
  const EncodingMatrix enc = build_vandermonde_encoding(build_params(8, 4, 6, f11()), eight_points());
  const Equivalence eq = equivalence_check(enc, rbt_matrix(enc), kRandomMessages);
  o.log << " trials " << eq.trials;
  o.expect(eq.verdict && eq.trials == static_cast<std::size_t>(kRandomMessages), "encoders differ");
  o.expect(eq.psi_prime.psi == sparsify_encoding(enc).psi, "Psi' differs from sparsified Psi");
  o.expect(eq.psi_prime.psi == Matrix::from_rows(f11(), golden::kPsiPrime), "Psi' differs from printed");
}

void column_lemma(Outcome& o) {
  const Code base(sparsify_encoding(build_vandermonde_encoding(build_params(8, 4, 6, f11()), eight_points())));
  const auto violations = column_lemma_violations(remap_via_inclusion(base).remap, 3);
  o.log << " violated entries " << violations.size();
  o.expect(violations.empty(), "entries outside column blocks");
}

BenchComparison bench_result;
bool bench_ran = false;

void speedup(Outcome& o) {
  const FieldPtr gf = make_gf256();
  const SystematicCode sparse = build_systematic(17, 8, 15, Construction::Sparse, gf);
  const SystematicCode vanilla = build_systematic(17, 8, 15, Construction::Vanilla, gf);
  BenchOptions options;
  options.workload_bytes = kBenchBytes;
  options.repetitions = kBenchReps;
  bench_result = benchmark_encode(sparse.code, vanilla.code, options);
  bench_ran = true;
  const double measured = bench_result.sparse.speedup.value_or(0);
  const double predicted = bench_result.predicted_speedup;
  char buf[200];
  std::snprintf(buf, sizeof buf, " %zu MiB: measured %.3fx, predicted %.3fx (nonzeros %zu vs %zu), deviation %+.1f%%",
                bench_result.sparse.bytes >> 20, measured, predicted, bench_result.sparse.parity_nonzeros,
                bench_result.dense.parity_nonzeros, 100.0 * (measured / predicted - 1.0));
  o.log << buf;
  o.expect(bench_result.sparse.bytes >= kBenchBytes - kBenchBytes % 64, "workload");
  o.expect(measured >= kMinSpeedup, "speedup below floor");
  o.expect(std::abs(measured / predicted - 1.0) <= kPredictionBand, "outside prediction band");
}

void oracle_equivalence(Outcome& o) {
  struct Case {
    std::size_t n, k;
    FieldPtr field;
  };
  std::mt19937_64 rng(10);
  for (const Case& c : {Case{8, 4, f11()}, Case{12, 6, nullptr}}) {
    const FieldPtr field = c.field ? c.field : select_prime_field(c.n, c.k);
    const CodeParams p = build_params(c.n, c.k, 2 * c.k - 2, field);
    const EncodingMatrix enc = sparsify_encoding(build_vandermonde_encoding(p));
    const GeneratorMatrix g = generator_matrix(enc);
    const auto first_k = iota_ids(0, c.k);
    std::size_t agree = 0;
    for (int t = 0; t < kRandomMessages; ++t) {
      const auto msg = random_message(p.message_length, *field, rng);
      const Matrix c_k = row_select(encode(enc, pack_message(msg, p)), first_k);
      const auto fast = unpack_message(decode_identity_block(enc, c_k));
      agree += fast == decode_generic(g, first_k, flatten(c_k)) && fast == msg;
    }
    o.log << " [" << c.n << "," << c.k << "," << 2 * c.k - 2 << "] agree " << agree << "/" << kRandomMessages;
    o.expect(agree == static_cast<std::size_t>(kRandomMessages), "decoders disagree");
  }

  // Zero-skipping and full multiply on every workload run here.
  const FieldPtr gf = make_gf256();
  BenchOptions small;
  small.workload_bytes = 1u << 20;
  small.repetitions = 1;
  const BenchComparison b = benchmark_encode(build_systematic(12, 6, 10, Construction::Sparse, gf).code,
                                             build_systematic(12, 6, 10, Construction::Vanilla, gf).code, small);
  o.expect(b.bit_identical, "bit identity on [12,6,10]");
  o.expect(bench_ran && bench_result.bit_identical, "bit identity on the speedup workload");
  o.log << " bench outputs bit-identical: " << (b.bit_identical && bench_ran && bench_result.bit_identical ? "yes" : "no");
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    double budget_s;  // 0: no budget
    Criterion run;
  };
  const Entry entries[] = {
      {1, "golden vectors", 1, golden_vectors},
      {2, "d-sparse rows for d = 2k-2", 10, sparsity_d},
      {3, "shortened-code sparsity", 30, shortened_sparsity},
      {4, "parity zero fraction", 0, headline_sparsity},
      {5, "MDS and repair, exhaustive", 10, mds_and_repair},
      {6, "repair by transfer to the first alpha nodes", 0, rbt_sys},
      {7, "equivalence up to symbol remapping", 0, equivalence},
      {8, "column-block pattern of the inclusion remap", 0, column_lemma},
      {9, "encoding speedup", 0, speedup},
      {10, "decoder and encoder oracles", 0, oracle_equivalence},
  };
  int failed = 0;
  for (const Entry& e : entries) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(o);
    } catch (const std::exception& ex) {
      o.expect(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.budget_s > 0) o.expect(secs < e.budget_s, "over time budget");
    failed += !o.pass;
    char head[96];
    std::snprintf(head, sizeof head, "%s %2d %s (%.2fs):", o.pass ? "PASS" : "FAIL", e.id, e.name, secs);
    std::cout << head << o.log.str() << std::endl;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << 10 - failed << "/10" << std::endl;
  return failed ? 1 : 0;
}
