#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace chaoskey::kernels {

/// Available kernel implementations. `scalar` is the reference; the SIMD
/// variants are selected at runtime when the CPU supports them and must be
/// byte- and bit-identical to the reference (see the equivalence tests).
enum class Backend { scalar, avx2, neon };

const char* name(Backend b);

/// Backends usable on this machine, scalar first.
std::vector<Backend> available();

Backend active();

/// Switches the active backend; returns false (and leaves the selection
/// unchanged) when the backend is not usable here.
bool set_active(Backend b);

/// Re-runs auto-selection: CHAOSKEY_KERNELS env override if set and usable,
/// otherwise the best SIMD variant the CPU offers.
void reset_auto();

/// Applies x <- r*x*(1-x) `steps` times to every element.
void logistic_iterate(std::span<double> xs, double r, int steps);

/// out[i] = min(255, floor(xs[i] * 256)) for xs[i] in [0, 1].
void quantize256(std::span<const double> xs, std::span<std::uint8_t> out);

/// Per-byte schedule: k2 = k1[i] + q[i] (mod 256), k3 = LFSR(k2),
/// out[i] = k1[i] ^ k2 ^ k3.
void schedule_block(std::span<const std::uint8_t> k1, std::span<const std::uint8_t> q,
                    std::span<std::uint8_t> out);

/// data[i] ^= keystream[i]; sizes must match.
void xor_bytes(std::span<std::uint8_t> data, std::span<const std::uint8_t> keystream);

}  // namespace chaoskey::kernels
