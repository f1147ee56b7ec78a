#pragma once

#include <cstdint>
#include <span>

#include "chaoskey/kgm.hpp"

namespace chaoskey {

struct ChaosParams {
  double r = 3.9999;  // map parameter, chaotic regime near 4
  int iterations = 0; // logistic steps applied to x0 before quantization

  static ChaosParams literal() { return {}; }
  static ChaosParams hardened() { return {3.9999, 16}; }
};

/// Per-cycle derivation state for the sliding byte windows over the first key.
struct CycleState {
  std::uint64_t cycle = 0;
  double x01 = 0.0;
  double x02 = 0.0;
  double x0 = 0.0;  // in [0, 1)
  std::size_t key_len = 0;
};

// Single map application r*x*(1-x). The association is fixed; the SIMD
// kernels replay the identical operation sequence so both paths agree
// bit for bit.
constexpr double logistic_once(double x, double r) { return r * (x * (1.0 - x)); }

/// Validated map step, throws DomainError for x outside [0,1] or r outside [0,4].
double logistic_step(double x, double r);

/// Derives the cycle's chaotic seed from byte windows at offsets 3c..3c+8
/// (wrapping modulo the key length): x01 over the first three bytes divided by
/// 2^24, x02 over the next six divided by 96, x0 the fractional part of their
/// sum. Throws KeyTooShort for keys under nine bytes.
CycleState initial_condition(std::span<const std::uint8_t> key_bytes, std::uint64_t cycle);
CycleState initial_condition(const FirstKey& k1, std::uint64_t cycle);

/// floor(x * 256) clamped to 255; throws DomainError for x outside [0,1).
std::uint8_t quantize(double x);

}  // namespace chaoskey
