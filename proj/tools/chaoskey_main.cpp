// chaoskey — chaos-based key scheduling and stream encryption toolkit.
//
// Subcommands: index, keygen, encrypt, decrypt, analyze {bounds, avalanche},
// bench {keygen, cycle}. Errors are single-line JSON on stderr; exit codes:
// 0 success, 1 usage/domain, 2 data, 3 key.

#include <bitset>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chaoskey/analysis.hpp"
#include "chaoskey/bench.hpp"
#include "chaoskey/chaos.hpp"
#include "chaoskey/cipher.hpp"
#include "chaoskey/errors.hpp"
#include "chaoskey/keyschedule.hpp"
#include "chaoskey/kgm.hpp"
#include "chaoskey/text_indexer.hpp"
#include "chaoskey/utf8.hpp"

namespace {

using chaoskey::ErrorCode;
using nlohmann::json;

void print_error_json(const std::string& code, const std::string& message) {
  json err{{"error", code}, {"message", message}};
  std::cerr << err.dump() << "\n";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_key:
    case ErrorCode::key_too_short:
    case ErrorCode::key_too_long:
      return 3;
    case ErrorCode::malformed_index:
    case ErrorCode::bad_magic:
    case ErrorCode::version_mismatch:
    case ErrorCode::empty_input:
    case ErrorCode::io_error:
      return 2;
    case ErrorCode::domain_error:
      return 1;
  }
  return 1;
}

std::string read_input(const std::string& path) {
  if (path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return std::move(buf).str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) chaoskey::raise(ErrorCode::io_error, "cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) chaoskey::raise(ErrorCode::io_error, "read failed on " + path);
  return std::move(buf).str();
}

void write_output(const std::string& path, std::string_view data) {
  if (path.empty()) {
    std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) chaoskey::raise(ErrorCode::io_error, "cannot open " + path + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) chaoskey::raise(ErrorCode::io_error, "write failed on " + path);
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

std::string bits8(std::uint8_t b) { return std::bitset<8>(b).to_string(); }

// Flag wins over CHAOSKEY_SECRET; an explicitly empty value still reaches the
// pipeline so it reports EmptyKey. The secret is never echoed anywhere.
struct SecretOption {
  std::string value;
  CLI::Option* opt = nullptr;

  void attach(CLI::App* cmd) {
    opt = cmd->add_option("--secret", value, "secret key (or set CHAOSKEY_SECRET)");
  }

  std::string resolve() const {
    if (opt->count() > 0) return value;
    if (const char* env = std::getenv("CHAOSKEY_SECRET")) return env;
    throw CLI::RequiredError("--secret (or environment variable CHAOSKEY_SECRET)");
  }
};

chaoskey::ChaosParams params_from(bool hardened) {
  return hardened ? chaoskey::ChaosParams::hardened() : chaoskey::ChaosParams::literal();
}

json bench_json(const chaoskey::bench::BenchReport& report, bool per_cycle) {
  json samples = json::array();
  for (const auto& s : report.samples) {
    json row{{"ms", s.elapsed_ms}};
    if (per_cycle) {
      row["size_bytes"] = s.size_bytes;
      row["per_cycle_ms"] = chaoskey::bench::per_cycle_ms(s);
    } else {
      row["size_kb"] = s.size_bytes / 1024;
    }
    samples.push_back(std::move(row));
  }
  return json{{"samples", std::move(samples)},
              {"fit",
               {{"slope", report.fit.slope_ms_per_kb},
                {"intercept", report.fit.intercept_ms},
                {"r2", report.fit.r_squared}}}};
}

void emit_report(const json& report, const std::string& json_path) {
  std::string text = report.dump();
  text.push_back('\n');
  write_output(json_path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chaos-based key scheduling and stream encryption toolkit"};
  app.set_version_flag("--version", "chaoskey 1.0.0 (envelope format v1)");
  app.require_subcommand(1);

  // ---- index ----------------------------------------------------------
  auto* index = app.add_subcommand("index", "word-level repeat indexing of a text");
  std::string index_in, index_out;
  bool index_tokens = false, index_decode = false;
  index->add_option("--in", index_in, "input file (default: standard input)");
  index->add_option("--out", index_out, "output file (default: standard output)");
  auto* tokens_flag =
      index->add_flag("--tokens", index_tokens, "emit token stream as JSON lines");
  index->add_flag("--decode", index_decode, "invert a rendered indexed text")
      ->excludes(tokens_flag);
  index->callback([&] {
    const std::string text = read_input(index_in);
    if (index_decode) {
      write_output(index_out, chaoskey::indexer::decode(text));
      return;
    }
    const chaoskey::indexer::IndexedMessage msg = chaoskey::indexer::index_encode(text);
    if (index_tokens) {
      std::string lines;
      for (const auto& tok : msg.tokens) {
        lines += json{{"ref", tok.back_ref}, {"word", tok.word}}.dump();
        lines.push_back('\n');
      }
      write_output(index_out, lines);
      return;
    }
    write_output(index_out, chaoskey::indexer::render(msg));
  });

  // ---- keygen ---------------------------------------------------------
  auto* keygen = app.add_subcommand("keygen", "derive first key, chaos seeds, or keystream");
  SecretOption keygen_secret;
  keygen_secret.attach(keygen);
  std::string stage = "stream";
  std::uint64_t keygen_seed = chaoskey::kDefaultKgmSeed;
  std::uint64_t cycle = 0;
  std::optional<std::size_t> stream_len;
  bool keygen_hardened = false, trace = false, dump_matrix = false;
  keygen->add_option("--stage", stage, "pipeline stage: first, x0, or stream")
      ->check(CLI::IsMember({"first", "x0", "stream"}));
  keygen->add_option("--seed", keygen_seed, "matrix seed");
  keygen->add_option("--cycle", cycle, "cycle number for --stage x0");
  keygen->add_option("--len", stream_len, "keystream length in bytes (default: 3 per secret character)");
  keygen->add_flag("--hardened", keygen_hardened, "apply 16 logistic iterations per seed");
  keygen->add_flag("--trace", trace, "print per-cycle k1/k2/k3/final bytes in binary");
  keygen->add_flag("--dump-matrix", dump_matrix, "print the 9x9x9 matrix as JSON and exit");
  keygen->callback([&] {
    const chaoskey::Kgm m = chaoskey::build_matrix(keygen_seed);
    if (dump_matrix) {
      json layers = json::array();
      for (int l = 0; l < chaoskey::Kgm::kDim; ++l) {
        json rows = json::array();
        for (int r = 0; r < chaoskey::Kgm::kDim; ++r) {
          json cells = json::array();
          for (int c = 0; c < chaoskey::Kgm::kDim; ++c) {
            std::string cell;
            chaoskey::append_utf8(cell, m.at(l, r, c));
            cells.push_back(std::move(cell));
          }
          rows.push_back(std::move(cells));
        }
        layers.push_back(std::move(rows));
      }
      std::cout << layers.dump() << "\n";
      return;
    }
    const std::string secret = keygen_secret.resolve();
    if (stage == "first") {
      const chaoskey::FirstKey fk = chaoskey::first_key(secret, m);
      std::cout << chaoskey::encode_utf8(fk.chars) << "\n";
      return;
    }
    if (stage == "x0") {
      const chaoskey::FirstKey fk = chaoskey::first_key(secret, m);
      chaoskey::CycleState cs = chaoskey::initial_condition(fk, cycle);
      const chaoskey::ChaosParams params = params_from(keygen_hardened);
      double x = cs.x0;
      for (int i = 0; i < params.iterations; ++i) x = chaoskey::logistic_step(x, params.r);
      const std::uint8_t q = chaoskey::quantize(x);
      std::printf("x01 = %.17g\n", cs.x01);
      std::printf("x02 = %.17g\n", cs.x02);
      std::printf("x0 = %.17g\n", x);
      std::printf("byte = %u (binary %s)\n", q, bits8(q).c_str());
      return;
    }
    const chaoskey::ChaosParams params = params_from(keygen_hardened);
    const chaoskey::FirstKey fk = chaoskey::first_key(secret, m);
    const std::size_t len = stream_len.value_or(fk.chars.size());
    if (trace) {
      chaoskey::KeystreamGenerator gen(fk, params);
      for (std::size_t i = 0; i < len; ++i) {
        const chaoskey::KeyBytes kb = gen.next_traced();
        std::printf("cycle %zu: k1=%s k2=%s k3=%s final=%s\n", i, bits8(kb.k1_byte).c_str(),
                    bits8(kb.k2_byte).c_str(), bits8(kb.k3_byte).c_str(),
                    bits8(kb.final_byte).c_str());
      }
    }
    const chaoskey::Keystream ks = chaoskey::keystream(secret, len, params, m);
    std::cout << to_hex(ks.bytes) << "\n";
  });

  // ---- encrypt / decrypt ----------------------------------------------
  auto* encrypt = app.add_subcommand("encrypt", "index, key, and seal a plaintext");
  SecretOption enc_secret;
  enc_secret.attach(encrypt);
  std::string enc_in, enc_out, enc_mode = "literal";
  bool no_index = false;
  std::uint64_t enc_seed = chaoskey::kDefaultKgmSeed;
  encrypt->add_option("--in", enc_in, "plaintext file (default: standard input)");
  encrypt->add_option("--out", enc_out, "envelope file (default: standard output)");
  encrypt->add_option("--mode", enc_mode, "chaos mode")
      ->check(CLI::IsMember({"literal", "hardened"}));
  encrypt->add_flag("--no-index", no_index, "skip word-level indexing");
  encrypt->add_option("--seed", enc_seed, "matrix seed stored in the envelope");
  encrypt->callback([&] {
    chaoskey::cipher::EncryptOptions opts;
    opts.mode = enc_mode == "hardened" ? chaoskey::cipher::Mode::hardened
                                       : chaoskey::cipher::Mode::literal;
    opts.apply_index = !no_index;
    opts.kgm_seed = enc_seed;
    const std::string plaintext = read_input(enc_in);
    const std::vector<std::uint8_t> env =
        chaoskey::cipher::encrypt(plaintext, enc_secret.resolve(), opts);
    write_output(enc_out, std::string_view(reinterpret_cast<const char*>(env.data()), env.size()));
  });

  auto* decrypt = app.add_subcommand("decrypt", "open an envelope and restore the plaintext");
  SecretOption dec_secret;
  dec_secret.attach(decrypt);
  std::string dec_in, dec_out;
  decrypt->add_option("--in", dec_in, "envelope file (default: standard input)");
  decrypt->add_option("--out", dec_out, "plaintext file (default: standard output)");
  decrypt->callback([&] {
    const std::string data = read_input(dec_in);
    const std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(data.data()),
                                              data.size());
    write_output(dec_out, chaoskey::cipher::decrypt(bytes, dec_secret.resolve()));
  });

  // ---- analyze --------------------------------------------------------
  auto* analyze = app.add_subcommand("analyze", "trail bounds and keystream statistics");
  analyze->require_subcommand(1);

  auto* bounds = analyze->add_subcommand("bounds", "differential/linear trail bound");
  chaoskey::analysis::TrailParams trail;
  bool bounds_json = false;
  bounds->add_option("--active", trail.active_count, "number of active boxes")->required();
  bounds->add_option("--log2", trail.per_box_log2, "log2 of per-box max probability")->required();
  bounds->add_flag("--json", bounds_json, "JSON report");
  bounds->callback([&] {
    const double bound = chaoskey::analysis::trail_bound_log2(trail);
    const long exponent = chaoskey::analysis::reported_exponent(bound);
    if (bounds_json) {
      emit_report(json{{"active", trail.active_count},
                       {"per_box_log2", trail.per_box_log2},
                       {"bound_log2", bound},
                       {"reported_exponent", exponent}},
                  "");
      return;
    }
    std::printf("%.10g\n", bound);
    std::printf("≈ 2^%ld\n", exponent);
  });

  auto* avalanche = analyze->add_subcommand("avalanche", "keystream bit-flip sensitivity");
  SecretOption ava_secret;
  ava_secret.attach(avalanche);
  int trials = 100;
  bool ava_hardened = false;
  std::uint64_t ava_rng_seed = chaoskey::analysis::kDefaultAvalancheRngSeed;
  std::uint64_t ava_seed = chaoskey::kDefaultKgmSeed;
  avalanche->add_option("--trials", trials, "number of single-bit flips");
  avalanche->add_flag("--hardened", ava_hardened, "apply 16 logistic iterations per seed");
  avalanche->add_option("--rng-seed", ava_rng_seed, "seed for the bit-position generator");
  avalanche->add_option("--seed", ava_seed, "matrix seed");
  avalanche->callback([&] {
    const chaoskey::Kgm m = chaoskey::build_matrix(ava_seed);
    const chaoskey::analysis::AvalancheReport report = chaoskey::analysis::avalanche(
        ava_secret.resolve(), trials, params_from(ava_hardened), m, ava_rng_seed);
    emit_report(json{{"trials", report.trials},
                     {"mean_flip_fraction", report.mean_flip_fraction},
                     {"min_fraction", report.min_fraction},
                     {"max_fraction", report.max_fraction}},
                "");
  });

  // ---- bench ----------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "timing of key generation and cycles");
  bench->require_subcommand(1);

  auto* bench_keygen = bench->add_subcommand("keygen", "keystream + encryption time vs input size");
  SecretOption bench_secret;
  bench_secret.attach(bench_keygen);
  std::vector<std::size_t> sizes_kb{10, 30, 155, 350, 512};
  int reps = 5;
  bool bench_hardened = false;
  std::string bench_json_path;
  bench_keygen->add_option("--sizes", sizes_kb, "input sizes in KB")->delimiter(',');
  bench_keygen->add_option("--reps", reps, "repetitions per size (median kept)");
  bench_keygen->add_flag("--hardened", bench_hardened, "apply 16 logistic iterations per seed");
  bench_keygen->add_option("--json", bench_json_path, "write the JSON report to a file");
  bench_keygen->callback([&] {
    std::string secret = "correct-battery-staple";
    if (bench_secret.opt->count() > 0 || std::getenv("CHAOSKEY_SECRET")) {
      secret = bench_secret.resolve();
    }
    const chaoskey::bench::BenchReport report =
        chaoskey::bench::run_bench(sizes_kb, params_from(bench_hardened), secret, reps);
    emit_report(bench_json(report, false), bench_json_path);
  });

  auto* bench_cycle = bench->add_subcommand("cycle", "single-pass time per first-key size");
  std::vector<std::size_t> key_sizes{24, 41, 100, 255, 300, 600};
  int cycle_reps = 5;
  bool cycle_hardened = false;
  std::string cycle_json_path;
  bench_cycle->add_option("--key-sizes", key_sizes, "first-key sizes in bytes")->delimiter(',');
  bench_cycle->add_option("--reps", cycle_reps, "repetitions per size (median kept)");
  bench_cycle->add_flag("--hardened", cycle_hardened, "apply 16 logistic iterations per seed");
  bench_cycle->add_option("--json", cycle_json_path, "write the JSON report to a file");
  bench_cycle->callback([&] {
    const chaoskey::bench::BenchReport report =
        chaoskey::bench::cycle_time(key_sizes, params_from(cycle_hardened), cycle_reps);
    emit_report(bench_json(report, true), cycle_json_path);
  });

  // ---- dispatch -------------------------------------------------------
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error_json("UsageError", e.what());
    return 1;
  } catch (const chaoskey::Error& e) {
    print_error_json(chaoskey::to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    print_error_json("InternalError", e.what());
    return 1;
  }
  return 0;
}
