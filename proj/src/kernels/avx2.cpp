#include "ops.hpp"

#if defined(CHAOSKEY_HAVE_AVX2_BUILD)

#include <immintrin.h>

#include "chaoskey/chaos.hpp"
#include "chaoskey/keyschedule.hpp"

namespace chaoskey::kernels {

namespace {

// Same operation order as logistic_once: sub, mul, mul. No FMA, so every
// lane rounds exactly like the scalar reference.
void logistic_iterate_avx2(double* xs, std::size_t n, double r, int steps) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d rv = _mm256_set1_pd(r);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(xs + i);
    for (int s = 0; s < steps; ++s) {
      x = _mm256_mul_pd(rv, _mm256_mul_pd(x, _mm256_sub_pd(one, x)));
    }
    _mm256_storeu_pd(xs + i, x);
  }
  for (; i < n; ++i) {
    double x = xs[i];
    for (int s = 0; s < steps; ++s) x = logistic_once(x, r);
    xs[i] = x;
  }
}

void quantize256_avx2(const double* xs, std::size_t n, std::uint8_t* out) {
  const __m256d scale = _mm256_set1_pd(256.0);
  const __m128i cap = _mm_set1_epi32(255);
  const __m128i pick_low_bytes =
      _mm_setr_epi8(0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d scaled = _mm256_mul_pd(_mm256_loadu_pd(xs + i), scale);
    __m128i v = _mm256_cvttpd_epi32(scaled);  // truncation, like the scalar cast
    v = _mm_min_epi32(v, cap);
    const int packed = _mm_cvtsi128_si32(_mm_shuffle_epi8(v, pick_low_bytes));
    out[i + 0] = static_cast<std::uint8_t>(packed);
    out[i + 1] = static_cast<std::uint8_t>(packed >> 8);
    out[i + 2] = static_cast<std::uint8_t>(packed >> 16);
    out[i + 3] = static_cast<std::uint8_t>(packed >> 24);
  }
  for (; i < n; ++i) {
    const auto v = static_cast<std::uint32_t>(xs[i] * 256.0);
    out[i] = static_cast<std::uint8_t>(v > 255 ? 255 : v);
  }
}

// Per-byte bit b of each lane; 16-bit shifts leak neighbour bits into the
// high positions only, so masking to bit 0 is exact.
inline __m256i byte_bit(__m256i v, int b) {
  return _mm256_and_si256(_mm256_srli_epi16(v, b), _mm256_set1_epi8(1));
}

void schedule_block_avx2(const std::uint8_t* k1, const std::uint8_t* q, std::uint8_t* out,
                         std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i k1v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(k1 + i));
    const __m256i qv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q + i));
    const __m256i k2 = _mm256_add_epi8(k1v, qv);
    const __m256i fb = _mm256_xor_si256(_mm256_xor_si256(byte_bit(k2, 7), byte_bit(k2, 3)),
                                        _mm256_xor_si256(byte_bit(k2, 2), byte_bit(k2, 1)));
    const __m256i shifted =
        _mm256_and_si256(_mm256_slli_epi16(k2, 1), _mm256_set1_epi8(static_cast<char>(0xFE)));
    const __m256i k3 = _mm256_or_si256(shifted, fb);
    const __m256i final_bytes = _mm256_xor_si256(_mm256_xor_si256(k1v, k2), k3);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), final_bytes);
  }
  for (; i < n; ++i) {
    const std::uint8_t k2 = second_key_byte(k1[i], q[i]);
    out[i] = static_cast<std::uint8_t>(k1[i] ^ k2 ^ lfsr_next(k2));
  }
}

void xor_bytes_avx2(std::uint8_t* data, const std::uint8_t* ks, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const __m256i k = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ks + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(data + i), _mm256_xor_si256(d, k));
  }
  for (; i < n; ++i) data[i] ^= ks[i];
}

}  // namespace

const Ops& avx2_ops() {
  static constexpr Ops ops{logistic_iterate_avx2, quantize256_avx2, schedule_block_avx2,
                           xor_bytes_avx2};
  return ops;
}

}  // namespace chaoskey::kernels

#endif  // CHAOSKEY_HAVE_AVX2_BUILD
