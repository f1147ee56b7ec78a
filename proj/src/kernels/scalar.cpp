#include "chaoskey/chaos.hpp"
#include "chaoskey/keyschedule.hpp"
#include "ops.hpp"

namespace chaoskey::kernels {

namespace {

void logistic_iterate_scalar(double* xs, std::size_t n, double r, int steps) {
  for (std::size_t i = 0; i < n; ++i) {
    double x = xs[i];
    for (int s = 0; s < steps; ++s) x = logistic_once(x, r);
    xs[i] = x;
  }
}

void quantize256_scalar(const double* xs, std::size_t n, std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<std::uint32_t>(xs[i] * 256.0);
    out[i] = static_cast<std::uint8_t>(v > 255 ? 255 : v);
  }
}

void schedule_block_scalar(const std::uint8_t* k1, const std::uint8_t* q, std::uint8_t* out,
                           std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t k2 = second_key_byte(k1[i], q[i]);
    out[i] = static_cast<std::uint8_t>(k1[i] ^ k2 ^ lfsr_next(k2));
  }
}

void xor_bytes_scalar(std::uint8_t* data, const std::uint8_t* ks, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) data[i] ^= ks[i];
}

}  // namespace

const Ops& scalar_ops() {
  static constexpr Ops ops{logistic_iterate_scalar, quantize256_scalar, schedule_block_scalar,
                           xor_bytes_scalar};
  return ops;
}

}  // namespace chaoskey::kernels
