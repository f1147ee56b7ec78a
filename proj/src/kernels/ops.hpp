#pragma once

#include <cstddef>
#include <cstdint>

namespace chaoskey::kernels {

// Raw function table one backend exports.
struct Ops {
  void (*logistic_iterate)(double* xs, std::size_t n, double r, int steps);
  void (*quantize256)(const double* xs, std::size_t n, std::uint8_t* out);
  void (*schedule_block)(const std::uint8_t* k1, const std::uint8_t* q, std::uint8_t* out,
                         std::size_t n);
  void (*xor_bytes)(std::uint8_t* data, const std::uint8_t* ks, std::size_t n);
};

const Ops& scalar_ops();

#if defined(__x86_64__) || defined(_M_X64)
#define CHAOSKEY_HAVE_AVX2_BUILD 1
const Ops& avx2_ops();
#endif

#if defined(__aarch64__)
#define CHAOSKEY_HAVE_NEON_BUILD 1
const Ops& neon_ops();
#endif

}  // namespace chaoskey::kernels
