#include "sparsepm/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "sparsepm/analysis.hpp"

namespace sparsepm {

namespace fs = std::filesystem;

std::array<std::uint8_t, 32> sha256(std::string_view data) {
  std::array<std::uint8_t, 32> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1 || len != md.size()) {
    throw Error(Errc::Io, "sha256 failed");
  }
  return md;
}

std::string sha256_hex(std::string_view data) {
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (std::uint8_t b : sha256(data)) {
    s += hex[b >> 4];
    s += hex[b & 15];
  }
  return s;
}

FieldPtr field_for_order(std::uint32_t q) { return q == 256 ? make_gf256() : make_prime_field(q); }

std::string to_text(const Descriptor& d) {
  std::ostringstream os;
  os << "format: sparsepm-code 1\n"
     << "n: " << d.n << "\nk: " << d.k << "\nd: " << d.d << '\n'
     << "field: " << field_for_order(d.q)->name() << "\nq: " << d.q << '\n'
     << "construction: " << to_string(d.construction) << "\nseed: " << d.seed << "\nxs:";
  for (Scalar x : d.xs) os << ' ' << x;
  os << "\npsi_sha256: " << d.psi_sha256 << "\ng_sha256: " << d.g_sha256 << "\ng_sys_sha256: " << d.g_sys_sha256
     << '\n';
  return os.str();
}

Descriptor parse_descriptor(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(Errc::Parse, "descriptor line without key: " + line);
    std::string value = line.substr(colon + 1);
    value.erase(0, value.find_first_not_of(' '));
    kv[line.substr(0, colon)] = value;
  }
  auto get = [&](const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw Error(Errc::Parse, "descriptor lacks '" + key + "'");
    return it->second;
  };
  auto number = [&](const std::string& key) -> std::uint64_t {
    const std::string v = get(key);
    try {
      std::size_t used = 0;
      const auto x = std::stoull(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return x;
    } catch (const std::exception&) {
      throw Error(Errc::Parse, "descriptor field '" + key + "' is not a number");
    }
  };
  if (get("format") != "sparsepm-code 1") throw Error(Errc::Parse, "unknown descriptor format");
  Descriptor d;
  d.n = number("n");
  d.k = number("k");
  d.d = number("d");
  d.q = static_cast<std::uint32_t>(number("q"));
  d.construction = parse_construction(get("construction"));
  d.seed = number("seed");
  std::istringstream xs(get("xs"));
  std::uint64_t x = 0;
  while (xs >> x) d.xs.push_back(static_cast<Scalar>(x));
  if (!xs.eof()) throw Error(Errc::Parse, "descriptor xs are not numbers");
  d.psi_sha256 = get("psi_sha256");
  d.g_sha256 = get("g_sha256");
  d.g_sys_sha256 = get("g_sys_sha256");
  return d;
}

namespace {

Descriptor describe(const SystematicCode& sys, Construction construction, std::uint64_t seed) {
  const CodeParams& p = sys.code.params();
  Descriptor d;
  d.n = p.n;
  d.k = p.k;
  d.d = p.d;
  d.q = p.field->order();
  d.construction = construction;
  d.seed = seed;
  d.xs = sys.base.encoding().points;
  d.psi_sha256 = sha256_hex(to_text(sys.base.encoding().psi));
  d.g_sha256 = sha256_hex(to_text(sys.base.generator().matrix()));
  d.g_sys_sha256 = sha256_hex(to_text(sys.g_sys().matrix()));
  return d;
}

}  // namespace

SystematicCode build_from(const Descriptor& d) {
  SystematicCode sys = build_systematic(d.n, d.k, d.d, d.construction, field_for_order(d.q), d.xs, d.seed);
  const Descriptor rebuilt = describe(sys, d.construction, d.seed);
  if (rebuilt.psi_sha256 != d.psi_sha256 || rebuilt.g_sha256 != d.g_sha256 || rebuilt.g_sys_sha256 != d.g_sys_sha256) {
    throw Error(Errc::DesignMismatch, "rebuilt matrices do not match the descriptor hashes");
  }
  return sys;
}

namespace {

void put_u64(std::string& s, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) s += static_cast<char>((v >> (8 * i)) & 0xff);
}

std::uint64_t get_u64(std::string_view s, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<std::uint8_t>(s[at + i]);
  return v;
}

constexpr std::size_t kHeaderBytes = 8 + 32 + 3 * 8;

}  // namespace

std::string serialize_share(const Share& s, std::size_t symbol_bytes) {
  std::string out(kShareMagic.begin(), kShareMagic.end());
  out.append(reinterpret_cast<const char*>(s.descriptor_hash.data()), s.descriptor_hash.size());
  put_u64(out, s.node);
  put_u64(out, s.stripes);
  put_u64(out, s.payload);
  for (Scalar v : s.symbols) {
    for (std::size_t i = 0; i < symbol_bytes; ++i) out += static_cast<char>((v >> (8 * i)) & 0xff);
  }
  return out;
}

Share parse_share(std::string_view bytes, std::size_t symbol_bytes) {
  if (bytes.size() < kHeaderBytes || !std::equal(kShareMagic.begin(), kShareMagic.end(), bytes.begin())) {
    throw Error(Errc::Parse, "not a share file");
  }
  Share s;
  std::copy_n(bytes.begin() + 8, 32, s.descriptor_hash.begin());
  s.node = get_u64(bytes, 40);
  s.stripes = get_u64(bytes, 48);
  s.payload = get_u64(bytes, 56);
  const std::size_t body = bytes.size() - kHeaderBytes;
  if (body % symbol_bytes != 0) throw Error(Errc::Parse, "share body is not a whole number of symbols");
  s.symbols.resize(body / symbol_bytes);
  for (std::size_t i = 0; i < s.symbols.size(); ++i) {
    Scalar v = 0;
    for (std::size_t b = symbol_bytes; b-- > 0;) {
      v = (v << 8) | static_cast<std::uint8_t>(bytes[kHeaderBytes + i * symbol_bytes + b]);
    }
    s.symbols[i] = v;
  }
  return s;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(Errc::Io, "short write to " + path.string());
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

struct Loaded {
  Descriptor desc;
  std::array<std::uint8_t, 32> hash;
  SystematicCode sys;

  const Code& code() const { return sys.code; }
  std::size_t symbol_bytes() const { return desc.q == 256 ? 1 : 4; }
};

Loaded load(const std::string& path) {
  const std::string text = read_file(path);
  Descriptor desc = parse_descriptor(text);
  SystematicCode sys = build_from(desc);
  return {std::move(desc), sha256(text), std::move(sys)};
}

std::vector<Scalar> read_message(const std::string& path, const Field& f) {
  const std::string raw = read_file(path);
  std::vector<Scalar> m;
  if (f.kind() == FieldKind::Binary) {
    m.assign(raw.begin(), raw.end());
    for (Scalar& s : m) s &= 0xff;
    return m;
  }
  std::istringstream in(raw);
  std::string token;
  while (in >> token) {
    std::uint64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(Errc::Parse, "message symbol '" + token + "' is not a number");
    }
    if (v >= f.order()) throw Error(Errc::Parse, "message symbol " + token + " is outside " + f.name());
    m.push_back(static_cast<Scalar>(v));
  }
  return m;
}

std::string message_text(const std::vector<Scalar>& m, const Field& f) {
  if (f.kind() == FieldKind::Binary) return {m.begin(), m.end()};
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += std::to_string(m[i]);
    s += (i + 1) % 16 == 0 || i + 1 == m.size() ? '\n' : ' ';
  }
  return s;
}

// Sparse rows of a linear map, for applying it many times.
struct LinearMap {
  struct Term {
    std::uint32_t col;
    Scalar coeff;
  };
  std::vector<std::vector<Term>> rows;

  explicit LinearMap(const Matrix& m) : rows(m.rows()) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c)) rows[r].push_back({static_cast<std::uint32_t>(c), m(r, c)});
  }

  void apply(const Field& f, const Scalar* in, Scalar* out) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Scalar acc = 0;
      for (const Term& t : rows[r]) acc = f.add(acc, f.mul(t.coeff, in[t.col]));
      out[r] = acc;
    }
  }
};

// Column j of the result is `fn` applied to the j-th unit vector.
template <typename Fn>
Matrix materialize(const FieldPtr& field, std::size_t rows, std::size_t cols, Fn&& fn) {
  Matrix m(field, rows, cols);
  std::vector<Scalar> unit(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    unit[j] = 1;
    const std::vector<Scalar> column = fn(unit);
    for (std::size_t r = 0; r < rows; ++r) m(r, j) = column[r];
    unit[j] = 0;
  }
  return m;
}

std::vector<Share> read_shares(const std::vector<std::string>& paths, const Loaded& l) {
  std::vector<Share> shares;
  const CodeParams& p = l.code().params();
  for (const std::string& path : paths) {
    Share s = parse_share(read_file(path), l.symbol_bytes());
    if (s.descriptor_hash != l.hash) throw Error(Errc::DesignMismatch, path + " belongs to a different code");
    if (s.node >= p.n) throw Error(Errc::IndexOutOfRange, path + " names node " + std::to_string(s.node));
    if (s.symbols.size() != s.stripes * p.alpha) throw Error(Errc::Io, path + " is truncated");
    for (Scalar v : s.symbols)
      if (!l.code().field().contains(v)) throw Error(Errc::Io, path + " holds a symbol outside the field");
    if (!shares.empty() && (s.stripes != shares.front().stripes || s.payload != shares.front().payload)) {
      throw Error(Errc::Io, "inconsistent stripes between " + paths.front() + " and " + path);
    }
    for (const Share& prev : shares)
      if (prev.node == s.node) throw Error(Errc::Io, "node " + std::to_string(s.node) + " given twice");
    shares.push_back(std::move(s));
  }
  return shares;
}

int cmd_gen(std::size_t n, std::size_t k, std::size_t d, std::uint32_t q, bool gf256, const std::string& construction,
            std::uint64_t seed, const std::vector<Scalar>& xs, const std::string& out_dir, std::ostream& out) {
  FieldPtr field;
  if (gf256) field = make_gf256();
  else if (q) field = make_prime_field(q);
  std::optional<std::vector<Scalar>> points;
  if (!xs.empty()) points = xs;
  const Construction c = parse_construction(construction);
  const SystematicCode sys = build_systematic(n, k, d, c, field, points, seed);
  const Descriptor desc = describe(sys, c, seed);

  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  write_file(dir / "psi.txt", to_text(sys.base.encoding().psi));
  write_file(dir / "g.txt", to_text(sys.base.generator().matrix()));
  write_file(dir / "g_sys.txt", to_text(sys.g_sys().matrix()));
  write_file(dir / "code.desc", to_text(desc));
  out << "code: [" << n << "," << k << "," << d << "] over " << sys.code.field().name() << " (" << construction
      << ")\nwrote: " << (dir / "code.desc").string() << '\n';
  return 0;
}

int cmd_encode(const std::string& code_path, const std::string& in_path, const std::string& out_dir,
               std::ostream& out) {
  const Loaded l = load(code_path);
  const Code& code = l.code();
  const CodeParams& p = code.params();
  const Field& f = code.field();
  const std::vector<Scalar> message = read_message(in_path, f);
  const std::size_t b = p.message_length;
  const std::size_t stripes = (message.size() + b - 1) / b;

  const LinearMap g(code.generator().matrix());
  std::vector<Share> shares(p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    shares[i].descriptor_hash = l.hash;
    shares[i].node = i;
    shares[i].stripes = stripes;
    shares[i].payload = message.size();
    shares[i].symbols.resize(stripes * p.alpha);
  }
  std::vector<Scalar> stripe(b), coded(p.n * p.alpha);
  for (std::size_t s = 0; s < stripes; ++s) {
    std::fill(stripe.begin(), stripe.end(), 0);
    const std::size_t first = s * b;
    std::copy(message.begin() + static_cast<std::ptrdiff_t>(first),
              message.begin() + static_cast<std::ptrdiff_t>(std::min(message.size(), first + b)), stripe.begin());
    g.apply(f, stripe.data(), coded.data());
    for (std::size_t i = 0; i < p.n; ++i) {
      std::copy_n(coded.begin() + static_cast<std::ptrdiff_t>(i * p.alpha), p.alpha,
                  shares[i].symbols.begin() + static_cast<std::ptrdiff_t>(s * p.alpha));
    }
  }
  fs::create_directories(out_dir);
  for (const Share& s : shares) {
    write_file(fs::path(out_dir) / ("share-" + std::to_string(s.node) + ".bin"), serialize_share(s, l.symbol_bytes()));
  }
  out << "symbols: " << message.size() << "\nstripes: " << stripes << "\nshares: " << p.n << '\n';
  return 0;
}

int cmd_repair(const std::string& code_path, std::size_t failed, const std::vector<std::string>& helper_paths,
               const std::string& out_path, std::ostream& out) {
  const Loaded l = load(code_path);
  const Code& code = l.code();
  const CodeParams& p = code.params();
  if (helper_paths.size() != p.d) {
    throw Error(Errc::BadHelperCount, "repair needs exactly " + std::to_string(p.d) + " helper shares, got " +
                                          std::to_string(helper_paths.size()));
  }
  if (failed >= p.n) throw Error(Errc::IndexOutOfRange, "failed node " + std::to_string(failed));
  const std::vector<Share> shares = read_shares(helper_paths, l);
  std::vector<std::size_t> helpers;
  for (const Share& s : shares) {
    if (s.node == failed) throw Error(Errc::BadHelperCount, "the failed node cannot help itself");
    helpers.push_back(s.node);
  }

  // The rebuild is linear in the d transferred symbols.
  const Matrix rebuild = materialize(p.field, p.alpha, p.d, [&](const std::vector<Scalar>& symbols) {
    return code.repair(failed, helpers, symbols);
  });
  const LinearMap r(rebuild);
  const Field& f = code.field();

  Share result;
  result.descriptor_hash = l.hash;
  result.node = failed;
  result.stripes = shares.front().stripes;
  result.payload = shares.front().payload;
  result.symbols.resize(result.stripes * p.alpha);
  std::vector<Scalar> symbols(p.d);
  for (std::size_t s = 0; s < result.stripes; ++s) {
    for (std::size_t j = 0; j < p.d; ++j) {
      const std::span<const Scalar> stored(shares[j].symbols.data() + s * p.alpha, p.alpha);
      symbols[j] = code.helper_symbol(stored, failed);
    }
    r.apply(f, symbols.data(), result.symbols.data() + s * p.alpha);
  }
  write_file(out_path, serialize_share(result, l.symbol_bytes()));
  out << "repaired: node " << failed << "\nhelpers: " << p.d << "\nsymbols_transferred: " << result.stripes * p.d
      << "\nstripes: " << result.stripes << '\n';
  return 0;
}

int cmd_decode(const std::string& code_path, const std::vector<std::string>& share_paths, const std::string& out_path,
               std::ostream& out) {
  const Loaded l = load(code_path);
  const Code& code = l.code();
  const CodeParams& p = code.params();
  if (share_paths.size() != p.k) {
    throw Error(Errc::BadCount, "decoding needs exactly " + std::to_string(p.k) + " shares, got " +
                                    std::to_string(share_paths.size()));
  }
  const std::vector<Share> shares = read_shares(share_paths, l);
  std::vector<std::size_t> nodes;
  for (const Share& s : shares) nodes.push_back(s.node);

  const std::size_t width = p.k * p.alpha;
  const Matrix inverse = materialize(p.field, p.message_length, width, [&](const std::vector<Scalar>& data) {
    return code.decode(nodes, data);
  });
  const LinearMap dec(inverse);
  const std::uint64_t stripes = shares.front().stripes;
  std::vector<Scalar> message(stripes * p.message_length);
  std::vector<Scalar> data(width);
  for (std::size_t s = 0; s < stripes; ++s) {
    for (std::size_t j = 0; j < p.k; ++j) {
      std::copy_n(shares[j].symbols.begin() + static_cast<std::ptrdiff_t>(s * p.alpha), p.alpha,
                  data.begin() + static_cast<std::ptrdiff_t>(j * p.alpha));
    }
    dec.apply(code.field(), data.data(), message.data() + s * p.message_length);
  }
  const std::uint64_t payload = shares.front().payload;
  if (payload > message.size()) throw Error(Errc::Io, "payload length exceeds the stripes");
  message.resize(payload);
  write_file(out_path, message_text(message, code.field()));
  out << "decoded: " << payload << " symbols from nodes";
  for (std::size_t node : nodes) out << ' ' << node;
  out << '\n';
  return 0;
}

int cmd_certify(const std::string& code_path, const CertifyOptions& options, const std::string& out_path,
                std::ostream& out) {
  const Loaded l = load(code_path);
  const Certification cert = certify(l.code(), options);
  std::ostringstream os;
  os << "code: " << code_path << "\nseed: " << options.seed << '\n' << to_text(cert);
  emit(out_path, os.str(), out);
  return cert.passed() ? 0 : 1;
}

int cmd_analyze(const std::string& code_path, const std::string& out_path, const std::string& tsv_path,
                std::ostream& out) {
  const Loaded l = load(code_path);
  const SparsityReport r = sparsity_report(l.sys.g_sys(), l.code().params().k);
  std::ostringstream os;
  os << "code: " << code_path << "\nconstruction: " << to_string(l.desc.construction) << '\n' << to_text(r);
  emit(out_path, os.str(), out);
  if (!tsv_path.empty()) write_file(tsv_path, to_tsv(r));
  return 0;
}

int cmd_bench(const std::string& code_path, const BenchOptions& options, const std::string& out_path,
              const std::string& tsv_path, std::ostream& out) {
  const Loaded l = load(code_path);
  if (l.desc.q != 256) throw Error(Errc::Unsupported, "bench needs a GF(2^8) code");
  const Descriptor& d = l.desc;
  const SystematicCode baseline =
      build_systematic(d.n, d.k, d.d, Construction::Vanilla, field_for_order(d.q), d.xs, d.seed);
  const BenchComparison b = benchmark_encode(l.code(), baseline.code, options, std::string(to_string(d.construction)), "vanilla");
  std::ostringstream os;
  os << "code: " << code_path << "\nrepetitions: " << options.repetitions << '\n' << to_text(b);
  emit(out_path, os.str(), out);
  if (!tsv_path.empty()) write_file(tsv_path, to_tsv(b));
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse systematic product-matrix MSR codes", "pmcode"};
  app.require_subcommand(1);

  std::size_t n = 0, k = 0, d = 0, failed = 0;
  std::uint32_t q = 0;
  bool gf256 = false;
  std::string construction = "sparse", out_dir, code_path, in_path, out_path, tsv_path;
  std::uint64_t seed = kDefaultSeed;
  std::vector<Scalar> xs;
  std::vector<std::string> files;
  CertifyOptions certify_options;
  BenchOptions bench_options;

  auto* gen = app.add_subcommand("gen", "construct a code and write its matrices and descriptor");
  gen->add_option("--n", n, "node count")->required();
  gen->add_option("--k", k, "nodes needed to decode")->required();
  gen->add_option("--d", d, "helpers per repair")->required();
  auto* q_opt = gen->add_option("--q", q, "prime field order (default: smallest that validates)");
  gen->add_flag("--gf256", gf256, "use GF(2^8)")->excludes(q_opt);
  gen->add_option("--construction", construction, "vanilla, sparse or rbt")->capture_default_str();
  gen->add_option("--seed", seed, "seed for sampled property checks")->capture_default_str();
  gen->add_option("--xs", xs, "evaluation points of the Vandermonde code");
  gen->add_option("--out-dir", out_dir, "output directory")->required();

  auto* enc = app.add_subcommand("encode", "split a message into node shares");
  enc->add_option("--code", code_path, "code descriptor")->required();
  enc->add_option("--in", in_path, "message: bytes for GF(2^8), decimal symbols otherwise")->required();
  enc->add_option("--out-dir", out_dir, "directory for share-<node>.bin files")->required();

  auto* rep = app.add_subcommand("repair", "rebuild a lost share from d helper shares");
  rep->add_option("--code", code_path, "code descriptor")->required();
  rep->add_option("--failed", failed, "node to rebuild")->required();
  rep->add_option("--helpers", files, "helper share files")->required();
  rep->add_option("--out", out_path, "rebuilt share file")->required();

  auto* dec = app.add_subcommand("decode", "recover the message from k shares");
  dec->add_option("--code", code_path, "code descriptor")->required();
  dec->add_option("--shares", files, "share files")->required();
  dec->add_option("--out", out_path, "message file")->required();

  auto* cert = app.add_subcommand("certify", "check MDS, repair, systematic form and sparsity theorems");
  cert->add_option("--code", code_path, "code descriptor")->required();
  cert->add_option("--seed", certify_options.seed, "sampling seed")->capture_default_str();
  cert->add_option("--max-exhaustive", certify_options.max_exhaustive, "enumerate when at most this many cases")
      ->capture_default_str();
  cert->add_option("--samples", certify_options.samples, "cases drawn otherwise")->capture_default_str();
  cert->add_option("--out", out_path, "report file (default stdout)");

  auto* ana = app.add_subcommand("analyze", "sparsity report of the systematic generator");
  ana->add_option("--code", code_path, "code descriptor")->required();
  ana->add_option("--out", out_path, "report file (default stdout)");
  ana->add_option("--tsv", tsv_path, "per-row records");

  auto* bench = app.add_subcommand("bench", "encoding throughput against the vanilla code");
  bench->add_option("--code", code_path, "GF(2^8) code descriptor")->required();
  bench->add_option("--bytes", bench_options.workload_bytes, "workload size")->capture_default_str();
  bench->add_option("--reps", bench_options.repetitions, "timed repetitions")->capture_default_str();
  bench->add_option("--seed", bench_options.seed, "workload seed")->capture_default_str();
  bench->add_option("--out", out_path, "report file (default stdout)");
  bench->add_option("--tsv", tsv_path, "machine-readable rows");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(n, k, d, q, gf256, construction, seed, xs, out_dir, out);
    if (*enc) return cmd_encode(code_path, in_path, out_dir, out);
    if (*rep) return cmd_repair(code_path, failed, files, out_path, out);
    if (*dec) return cmd_decode(code_path, files, out_path, out);
    if (*cert) return cmd_certify(code_path, certify_options, out_path, out);
    if (*ana) return cmd_analyze(code_path, out_path, tsv_path, out);
    if (*bench) return cmd_bench(code_path, bench_options, out_path, tsv_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace sparsepm
