#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "chaoskey/chaos.hpp"
#include "chaoskey/kgm.hpp"

namespace chaoskey::analysis {

/// Inputs of a differential/linear trail bound: how many boxes are active and
/// the log2 of the worst per-box probability.
struct TrailParams {
  int active_count = 1;      // >= 1
  double per_box_log2 = -1;  // < 0
};

/// log2 of the trail probability bound: active_count * per_box_log2.
/// Throws DomainError when active_count < 1 or per_box_log2 >= 0.
double trail_bound_log2(const TrailParams& p);

/// Integer exponent as conventionally quoted (fraction dropped, sign kept):
/// -79.526 reports as -79, -96 as -96.
long reported_exponent(double bound_log2);

struct AvalancheReport {
  int trials = 0;
  double mean_flip_fraction = 0.0;
  double min_fraction = 0.0;
  double max_fraction = 0.0;
};

inline constexpr std::uint64_t kDefaultAvalancheRngSeed = 0x00C0FFEE;

/// Bit-flip sensitivity of the keystream. Each trial flips one uniformly
/// chosen bit of the secret's byte encoding and regenerates the stream at the
/// unmodified secret's base length (three bytes per secret character), then
/// records the fraction of output bits that changed. Deterministic for a
/// given rng_seed. Throws EmptyKey / KeyTooShort via the key pipeline.
AvalancheReport avalanche(std::string_view secret, int trials, const ChaosParams& params,
                          const Kgm& m, std::uint64_t rng_seed = kDefaultAvalancheRngSeed);

/// Number of differing bits; throws DomainError when lengths differ.
std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// hamming_distance / total bits. Throws DomainError when lengths differ or
/// both spans are empty.
double flip_fraction(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Fraction of one-bits in the stream. Throws EmptyInput on an empty stream.
double monobit(std::span<const std::uint8_t> stream);

}  // namespace chaoskey::analysis
