#include "ops.hpp"

#if defined(CHAOSKEY_HAVE_NEON_BUILD)

#include <arm_neon.h>

#include "chaoskey/chaos.hpp"
#include "chaoskey/keyschedule.hpp"

namespace chaoskey::kernels {

namespace {

void logistic_iterate_neon(double* xs, std::size_t n, double r, int steps) {
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t rv = vdupq_n_f64(r);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t x = vld1q_f64(xs + i);
    for (int s = 0; s < steps; ++s) {
      x = vmulq_f64(rv, vmulq_f64(x, vsubq_f64(one, x)));
    }
    vst1q_f64(xs + i, x);
  }
  for (; i < n; ++i) {
    double x = xs[i];
    for (int s = 0; s < steps; ++s) x = logistic_once(x, r);
    xs[i] = x;
  }
}

void quantize256_neon(const double* xs, std::size_t n, std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    // vcvtd truncates toward zero, matching the scalar cast
    const std::uint64_t v = vcvtd_u64_f64(xs[i] * 256.0);
    out[i] = static_cast<std::uint8_t>(v > 255 ? 255 : v);
  }
}

void schedule_block_neon(const std::uint8_t* k1, const std::uint8_t* q, std::uint8_t* out,
                         std::size_t n) {
  const uint8x16_t one = vdupq_n_u8(1);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const uint8x16_t k1v = vld1q_u8(k1 + i);
    const uint8x16_t k2 = vaddq_u8(k1v, vld1q_u8(q + i));
    const uint8x16_t fb =
        vandq_u8(veorq_u8(veorq_u8(vshrq_n_u8(k2, 7), vshrq_n_u8(k2, 3)),
                          veorq_u8(vshrq_n_u8(k2, 2), vshrq_n_u8(k2, 1))),
                 one);
    const uint8x16_t k3 = vorrq_u8(vshlq_n_u8(k2, 1), fb);
    vst1q_u8(out + i, veorq_u8(veorq_u8(k1v, k2), k3));
  }
  for (; i < n; ++i) {
    const std::uint8_t k2 = second_key_byte(k1[i], q[i]);
    out[i] = static_cast<std::uint8_t>(k1[i] ^ k2 ^ lfsr_next(k2));
  }
}

void xor_bytes_neon(std::uint8_t* data, const std::uint8_t* ks, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    vst1q_u8(data + i, veorq_u8(vld1q_u8(data + i), vld1q_u8(ks + i)));
  }
  for (; i < n; ++i) data[i] ^= ks[i];
}

}  // namespace

const Ops& neon_ops() {
  static constexpr Ops ops{logistic_iterate_neon, quantize256_neon, schedule_block_neon,
                           xor_bytes_neon};
  return ops;
}

}  // namespace chaoskey::kernels

#endif  // CHAOSKEY_HAVE_NEON_BUILD
