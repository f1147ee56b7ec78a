#include "chaoskey/cipher.hpp"

#include <cstring>

#include "chaoskey/errors.hpp"
#include "chaoskey/kernels.hpp"
#include "chaoskey/keyschedule.hpp"
#include "chaoskey/text_indexer.hpp"

namespace chaoskey::cipher {

namespace {

void put_u64le(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64le(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

}  // namespace

ChaosParams params_for(Mode mode) {
  switch (mode) {
    case Mode::literal:  return ChaosParams::literal();
    case Mode::hardened: return ChaosParams::hardened();
  }
  raise(ErrorCode::domain_error, "unknown cipher mode");
}

std::vector<std::uint8_t> serialize(const Envelope& env) {
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + env.payload.size());
  for (std::uint8_t b : kMagic) out.push_back(b);
  out.push_back(kVersion);
  put_u64le(out, env.kgm_seed);
  out.push_back(static_cast<std::uint8_t>(env.mode));
  out.push_back(env.indexed ? 1 : 0);
  put_u64le(out, env.payload.size());
  out.insert(out.end(), env.payload.begin(), env.payload.end());
  return out;
}

Envelope parse_envelope(std::span<const std::uint8_t> data) {
  if (data.size() < sizeof(kMagic) || std::memcmp(data.data(), kMagic, sizeof(kMagic)) != 0) {
    raise(ErrorCode::bad_magic, "not a ciphertext envelope (magic mismatch)");
  }
  if (data.size() < kHeaderSize) {
    raise(ErrorCode::bad_magic, "envelope truncated: header needs " +
                                    std::to_string(kHeaderSize) + " bytes, got " +
                                    std::to_string(data.size()));
  }
  const std::uint8_t version = data[4];
  if (version != kVersion) {
    raise(ErrorCode::version_mismatch, "envelope version " + std::to_string(version) +
                                           " not supported (expected " +
                                           std::to_string(kVersion) + ")");
  }
  Envelope env;
  env.kgm_seed = get_u64le(data.data() + 5);
  const std::uint8_t mode_byte = data[13];
  if (mode_byte > 1) {
    raise(ErrorCode::version_mismatch,
          "envelope mode byte " + std::to_string(mode_byte) + " not defined in version 1");
  }
  env.mode = static_cast<Mode>(mode_byte);
  const std::uint8_t index_flag = data[14];
  if (index_flag > 1) {
    raise(ErrorCode::version_mismatch,
          "envelope index flag " + std::to_string(index_flag) + " not defined in version 1");
  }
  env.indexed = index_flag == 1;
  const std::uint64_t payload_len = get_u64le(data.data() + 15);
  if (payload_len != data.size() - kHeaderSize) {
    raise(ErrorCode::bad_magic, "envelope truncated: payload declares " +
                                    std::to_string(payload_len) + " bytes, " +
                                    std::to_string(data.size() - kHeaderSize) + " present");
  }
  env.payload.assign(data.begin() + kHeaderSize, data.end());
  return env;
}

std::vector<std::uint8_t> encrypt(std::string_view plaintext, std::string_view secret,
                                  const EncryptOptions& opts) {
  const Kgm m = build_matrix(opts.kgm_seed);
  std::string indexed;
  std::string_view cleartext = plaintext;
  if (opts.apply_index) {
    indexed = indexer::render(indexer::index_encode(plaintext));
    cleartext = indexed;
  }
  Envelope env;
  env.kgm_seed = opts.kgm_seed;
  env.mode = opts.mode;
  env.indexed = opts.apply_index;
  env.payload.assign(cleartext.begin(), cleartext.end());
  const Keystream ks = keystream(secret, env.payload.size(), params_for(opts.mode), m);
  kernels::xor_bytes(env.payload, ks.bytes);
  return serialize(env);
}

std::string decrypt(std::span<const std::uint8_t> envelope_bytes, std::string_view secret) {
  Envelope env = parse_envelope(envelope_bytes);
  const Kgm m = build_matrix(env.kgm_seed);
  const Keystream ks = keystream(secret, env.payload.size(), params_for(env.mode), m);
  kernels::xor_bytes(env.payload, ks.bytes);
  std::string text(env.payload.begin(), env.payload.end());
  if (env.indexed) return indexer::decode(text);
  return text;
}

}  // namespace chaoskey::cipher
