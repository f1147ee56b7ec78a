#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chaoskey/chaos.hpp"
#include "chaoskey/kgm.hpp"

namespace chaoskey::cipher {

inline constexpr std::uint8_t kMagic[4] = {'C', 'H', 'K', '1'};
inline constexpr std::uint8_t kVersion = 1;
/// magic(4) + version(1) + kgm_seed(8) + mode(1) + index_flag(1) + payload_len(8)
inline constexpr std::size_t kHeaderSize = 23;

enum class Mode : std::uint8_t { literal = 0, hardened = 1 };

/// Chaos parameters for a mode: literal keeps the raw per-cycle seed,
/// hardened burns 16 logistic iterations into it first.
ChaosParams params_for(Mode mode);

struct EncryptOptions {
  Mode mode = Mode::literal;
  bool apply_index = true;
  std::uint64_t kgm_seed = kDefaultKgmSeed;
};

/// Parsed ciphertext container. The matrix seed travels in the clear; the
/// secret itself is never stored.
struct Envelope {
  std::uint64_t kgm_seed = kDefaultKgmSeed;
  Mode mode = Mode::literal;
  bool indexed = true;
  std::vector<std::uint8_t> payload;

  bool operator==(const Envelope&) const = default;
};

/// Fixed little-endian wire layout, header then payload.
std::vector<std::uint8_t> serialize(const Envelope& env);

/// Inverse of serialize. Throws BadMagic for non-envelope or truncated data,
/// VersionMismatch for an unknown version, mode, or index flag.
Envelope parse_envelope(std::span<const std::uint8_t> data);

/// Optionally indexes the plaintext, XORs with the keystream derived from the
/// secret, and wraps the result. Empty plaintext yields an envelope with an
/// empty payload. Throws EmptyKey / KeyTooShort / KeyTooLong.
std::vector<std::uint8_t> encrypt(std::string_view plaintext, std::string_view secret,
                                  const EncryptOptions& opts = {});

/// Parses, XORs with the regenerated keystream, and undoes indexing when the
/// envelope says it was applied. Errors from parse_envelope and the key
/// pipeline propagate; a wrong secret on an indexed envelope typically
/// surfaces as MalformedIndex.
std::string decrypt(std::span<const std::uint8_t> envelope_bytes, std::string_view secret);

}  // namespace chaoskey::cipher
