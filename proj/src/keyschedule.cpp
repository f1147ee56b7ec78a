#include "chaoskey/keyschedule.hpp"

#include <algorithm>
#include <cstring>

#include "chaoskey/kernels.hpp"
#include "chaoskey/utf8.hpp"

namespace chaoskey {

std::uint32_t fingerprint32(std::string_view bytes) {
  std::uint32_t h = 2166136261u;
  for (char c : bytes) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 16777619u;
  }
  return h;
}

KeystreamGenerator::KeystreamGenerator(const FirstKey& k1, const ChaosParams& params)
    : key_(k1.bytes()), params_(params) {
  const std::size_t n = key_.size();
  xs_.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    xs_[c] = initial_condition(key_, c).x0;  // throws KeyTooShort for n < 9
  }
  kernels::logistic_iterate(xs_, params_.r, params_.iterations);
  quantized_.resize(n);
  block_.resize(n);
  make_block();
}

void KeystreamGenerator::make_block() {
  kernels::quantize256(xs_, quantized_);
  kernels::schedule_block(key_, quantized_, block_);
  pos_ = 0;
}

void KeystreamGenerator::advance_block() {
  kernels::logistic_iterate(xs_, params_.r, 1);
  make_block();
}

void KeystreamGenerator::fill(std::span<std::uint8_t> out) {
  std::size_t written = 0;
  while (written < out.size()) {
    if (pos_ == block_.size()) advance_block();
    const std::size_t take = std::min(out.size() - written, block_.size() - pos_);
    std::memcpy(out.data() + written, block_.data() + pos_, take);
    pos_ += take;
    written += take;
  }
}

KeyBytes KeystreamGenerator::next_traced() {
  if (pos_ == block_.size()) advance_block();
  const KeyBytes kb = derive_cycle_bytes(key_[pos_], quantized_[pos_]);
  ++pos_;
  return kb;
}

Keystream keystream(std::u32string_view secret, std::size_t length, const ChaosParams& params,
                    const Kgm& m) {
  const FirstKey k1 = first_key(secret, m);
  KeystreamGenerator gen(k1, params);
  Keystream ks;
  ks.params = params;
  ks.secret_fingerprint = fingerprint32(encode_utf8(secret));
  ks.bytes.resize(length);
  gen.fill(ks.bytes);
  return ks;
}

Keystream keystream(std::string_view secret_utf8, std::size_t length, const ChaosParams& params,
                    const Kgm& m) {
  Keystream ks = keystream(decode_utf8_lenient(secret_utf8), length, params, m);
  ks.secret_fingerprint = fingerprint32(secret_utf8);
  return ks;
}

}  // namespace chaoskey
