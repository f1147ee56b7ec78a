#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <vector>

#include "chaoskey/chaos.hpp"
#include "chaoskey/cipher.hpp"
#include "chaoskey/errors.hpp"
#include "chaoskey/kernels.hpp"
#include "chaoskey/keyschedule.hpp"

using namespace chaoskey;
using kernels::Backend;

namespace {

struct BackendGuard {
  ~BackendGuard() { kernels::reset_auto(); }
};

std::vector<Backend> simd_backends() {
  std::vector<Backend> out;
  for (Backend b : kernels::available()) {
    if (b != Backend::scalar) out.push_back(b);
  }
  return out;
}

std::vector<double> random_unit_values(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = uniform(rng);
  return v;
}

// Sizes chosen to cover empty input, every SIMD remainder lane, and a few
// full vectors.
const std::vector<std::size_t> kSizes{0, 1, 2, 3, 4, 5, 7, 8, 15, 16, 17, 31, 32, 33, 64, 67};

}  // namespace

TEST_CASE("backend bookkeeping") {
  BackendGuard guard;
  const std::vector<Backend> avail = kernels::available();
  REQUIRE_FALSE(avail.empty());
  CHECK(avail.front() == Backend::scalar);
  CHECK(std::find(avail.begin(), avail.end(), kernels::active()) != avail.end());

  for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
    const bool usable = std::find(avail.begin(), avail.end(), b) != avail.end();
    CHECK(kernels::set_active(b) == usable);
    if (usable) CHECK(kernels::active() == b);
  }
  CHECK(kernels::name(Backend::scalar) == std::string("scalar"));
  CHECK(kernels::name(Backend::avx2) == std::string("avx2"));
  CHECK(kernels::name(Backend::neon) == std::string("neon"));
}

TEST_CASE("environment override steers auto-selection") {
  BackendGuard guard;
  ::setenv("CHAOSKEY_KERNELS", "scalar", 1);
  kernels::reset_auto();
  CHECK(kernels::active() == Backend::scalar);

  ::unsetenv("CHAOSKEY_KERNELS");
  kernels::reset_auto();
  const std::vector<Backend> avail = kernels::available();
  CHECK(kernels::active() == avail.back());  // best SIMD variant, or scalar alone
}

TEST_CASE("logistic batches match the scalar reference bit for bit") {
  BackendGuard guard;
  for (Backend simd : simd_backends()) {
    CAPTURE(kernels::name(simd));
    for (std::size_t n : kSizes) {
      for (int steps : {0, 1, 5, 16}) {
        std::vector<double> reference = random_unit_values(n, 0xABC + n + steps);
        std::vector<double> candidate = reference;

        REQUIRE(kernels::set_active(Backend::scalar));
        kernels::logistic_iterate(reference, 3.9999, steps);
        REQUIRE(kernels::set_active(simd));
        kernels::logistic_iterate(candidate, 3.9999, steps);

        CHECK(candidate == reference);  // element-wise double equality, no tolerance
      }
    }
  }
}

TEST_CASE("logistic batch agrees with the single-step public map") {
  BackendGuard guard;
  for (Backend b : kernels::available()) {
    REQUIRE(kernels::set_active(b));
    std::vector<double> xs = random_unit_values(33, 2024);
    std::vector<double> expected = xs;
    for (auto& x : expected) {
      for (int s = 0; s < 3; ++s) x = logistic_step(x, 3.9999);
    }
    kernels::logistic_iterate(xs, 3.9999, 3);
    CHECK(xs == expected);
  }
}

TEST_CASE("quantize batches match the scalar reference and the public quantizer") {
  BackendGuard guard;
  for (Backend simd : simd_backends()) {
    CAPTURE(kernels::name(simd));
    for (std::size_t n : kSizes) {
      std::vector<double> xs = random_unit_values(n, 0xDEF + n);
      // Exact grid points and near-boundary values exercise the flooring.
      if (n >= 8) {
        xs[0] = 0.0;
        xs[1] = 101.0 / 256.0;
        xs[2] = 0.5;
        xs[3] = 255.0 / 256.0;
        xs[4] = 0.9999999999999999;  // largest double below 1
        xs[5] = 1.0 / 256.0;
        xs[6] = 0.999;
        xs[7] = 127.0 / 256.0;
      }
      std::vector<std::uint8_t> reference(n), candidate(n);

      REQUIRE(kernels::set_active(Backend::scalar));
      kernels::quantize256(xs, reference);
      REQUIRE(kernels::set_active(simd));
      kernels::quantize256(xs, candidate);

      CHECK(candidate == reference);
      for (std::size_t i = 0; i < n; ++i) CHECK(reference[i] == quantize(xs[i]));
    }
  }
}

TEST_CASE("schedule batches match the per-byte derivation") {
  BackendGuard guard;
  std::mt19937_64 rng(555);
  for (Backend b : kernels::available()) {
    CAPTURE(kernels::name(b));
    REQUIRE(kernels::set_active(b));
    for (std::size_t n : kSizes) {
      std::vector<std::uint8_t> k1(n), q(n), out(n);
      for (std::size_t i = 0; i < n; ++i) {
        k1[i] = static_cast<std::uint8_t>(rng());
        q[i] = static_cast<std::uint8_t>(rng());
      }
      kernels::schedule_block(k1, q, out);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(out[i] == derive_cycle_bytes(k1[i], q[i]).final_byte);
      }
    }
  }
}

TEST_CASE("xor batches match a plain loop") {
  BackendGuard guard;
  std::mt19937_64 rng(808);
  for (Backend b : kernels::available()) {
    REQUIRE(kernels::set_active(b));
    for (std::size_t n : kSizes) {
      std::vector<std::uint8_t> data(n), ks(n);
      for (std::size_t i = 0; i < n; ++i) {
        data[i] = static_cast<std::uint8_t>(rng());
        ks[i] = static_cast<std::uint8_t>(rng());
      }
      std::vector<std::uint8_t> expected = data;
      for (std::size_t i = 0; i < n; ++i) expected[i] ^= ks[i];
      kernels::xor_bytes(data, ks);
      CHECK(data == expected);
    }
  }
}

TEST_CASE("keystream and ciphertext are backend-independent") {
  BackendGuard guard;
  const Kgm m = build_matrix(kDefaultKgmSeed);

  REQUIRE(kernels::set_active(Backend::scalar));
  const Keystream ks_ref =
      keystream(std::string_view{"CrossBackendSecret"}, 4096, ChaosParams::hardened(), m);
  const std::vector<std::uint8_t> env_ref = cipher::encrypt("the same plaintext bytes",
                                                            "CrossBackendSecret");

  for (Backend simd : simd_backends()) {
    CAPTURE(kernels::name(simd));
    REQUIRE(kernels::set_active(simd));
    const Keystream ks =
        keystream(std::string_view{"CrossBackendSecret"}, 4096, ChaosParams::hardened(), m);
    CHECK(ks.bytes == ks_ref.bytes);
    CHECK(cipher::encrypt("the same plaintext bytes", "CrossBackendSecret") == env_ref);
  }
}

TEST_CASE("size validation is backend-independent") {
  BackendGuard guard;
  std::vector<std::uint8_t> a(4), b(5);
  CHECK_THROWS_AS(kernels::xor_bytes(a, b), Error);
  std::vector<double> xs(4);
  std::vector<std::uint8_t> out(3);
  CHECK_THROWS_AS(kernels::quantize256(xs, out), Error);
  CHECK_THROWS_AS(kernels::schedule_block(a, a, b), Error);
  std::vector<double> v(2, 0.5);
  CHECK_THROWS_AS(kernels::logistic_iterate(v, 3.9999, -1), Error);
  CHECK_NOTHROW(kernels::logistic_iterate(v, 3.9999, 0));
}
