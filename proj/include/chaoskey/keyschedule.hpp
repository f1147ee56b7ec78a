#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "chaoskey/chaos.hpp"
#include "chaoskey/kgm.hpp"

namespace chaoskey {

/// (k1 + x0) mod 256 — the chaotic addition producing K2.
constexpr std::uint8_t second_key_byte(std::uint8_t k1_byte, std::uint8_t x0_byte) {
  return static_cast<std::uint8_t>(k1_byte + x0_byte);
}

// 8-bit LFSR, bits labelled D0..D7 from most significant to least.
// Feedback taps D0, D4, D5, D6.
constexpr std::uint8_t lfsr_feedback(std::uint8_t k2) {
  return static_cast<std::uint8_t>(((k2 >> 7) ^ (k2 >> 3) ^ (k2 >> 2) ^ (k2 >> 1)) & 1u);
}

/// Left shift dropping D0, feedback into the least significant bit.
constexpr std::uint8_t lfsr_next(std::uint8_t k2) {
  return static_cast<std::uint8_t>(static_cast<std::uint8_t>(k2 << 1) | lfsr_feedback(k2));
}

/// One cycle's derivation stages.
struct KeyBytes {
  std::uint8_t k1_byte = 0;
  std::uint8_t k2_byte = 0;
  std::uint8_t k3_byte = 0;
  std::uint8_t final_byte = 0;
};

constexpr std::uint8_t final_key_byte(const KeyBytes& kb) {
  return static_cast<std::uint8_t>(kb.k1_byte ^ kb.k2_byte ^ kb.k3_byte);
}

constexpr KeyBytes derive_cycle_bytes(std::uint8_t k1_byte, std::uint8_t x0_byte) {
  KeyBytes kb;
  kb.k1_byte = k1_byte;
  kb.k2_byte = second_key_byte(k1_byte, x0_byte);
  kb.k3_byte = lfsr_next(kb.k2_byte);
  kb.final_byte = final_key_byte(kb);
  return kb;
}

struct Keystream {
  std::vector<std::uint8_t> bytes;
  ChaosParams params;
  std::uint32_t secret_fingerprint = 0;
};

/// FNV-1a over the secret's byte encoding.
std::uint32_t fingerprint32(std::string_view bytes);

/// Streams final-key bytes cycle by cycle. One block covers every cycle of
/// the first key; each further block evolves every cycle's chaotic value by
/// one more logistic step before quantization, so output is prefix-stable in
/// the requested length.
class KeystreamGenerator {
 public:
  KeystreamGenerator(const FirstKey& k1, const ChaosParams& params);

  std::size_t base_length() const { return key_.size(); }

  /// Copies the next out.size() bytes of the stream.
  void fill(std::span<std::uint8_t> out);

  /// Produces the next byte along with its intermediate stages.
  KeyBytes next_traced();

 private:
  void make_block();
  void advance_block();

  std::vector<std::uint8_t> key_;
  std::vector<double> xs_;
  std::vector<std::uint8_t> quantized_;
  std::vector<std::uint8_t> block_;
  std::size_t pos_ = 0;
  ChaosParams params_;
};

/// Full pipeline: first key from the matrix, per-cycle chaos seeds, K2/K3
/// derivation, XOR assembly; truncated or block-extended to `length`.
/// Throws EmptyKey / KeyTooLong / KeyTooShort.
Keystream keystream(std::u32string_view secret, std::size_t length, const ChaosParams& params,
                    const Kgm& m);
Keystream keystream(std::string_view secret_utf8, std::size_t length, const ChaosParams& params,
                    const Kgm& m);

}  // namespace chaoskey
