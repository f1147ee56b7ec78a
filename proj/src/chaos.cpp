#include "chaoskey/chaos.hpp"

#include <cmath>

#include "chaoskey/errors.hpp"

namespace chaoskey {

double logistic_step(double x, double r) {
  if (!(x >= 0.0 && x <= 1.0)) {
    raise(ErrorCode::domain_error, "logistic map input must lie in [0,1]");
  }
  if (!(r >= 0.0 && r <= 4.0)) {
    raise(ErrorCode::domain_error, "logistic map parameter must lie in [0,4]");
  }
  return logistic_once(x, r);
}

CycleState initial_condition(std::span<const std::uint8_t> key_bytes, std::uint64_t cycle) {
  const std::size_t n = key_bytes.size();
  if (n < 9) {
    raise(ErrorCode::key_too_short, "first key must be at least 9 bytes");
  }
  const std::size_t base = (3 * static_cast<std::size_t>(cycle % n)) % n;
  auto byte_at = [&](std::size_t offset) -> unsigned {
    return key_bytes[(base + offset) % n];
  };
  unsigned sum1 = 0;
  for (std::size_t j = 0; j < 3; ++j) sum1 += byte_at(j);
  unsigned sum2 = 0;
  for (std::size_t j = 3; j < 9; ++j) sum2 += byte_at(j);

  CycleState state;
  state.cycle = cycle;
  state.key_len = n;
  state.x01 = static_cast<double>(sum1) / 16777216.0;  // 2^24
  state.x02 = static_cast<double>(sum2) / 96.0;
  const double sum = state.x01 + state.x02;
  state.x0 = sum - std::floor(sum);
  return state;
}

CycleState initial_condition(const FirstKey& k1, std::uint64_t cycle) {
  return initial_condition(k1.bytes(), cycle);
}

std::uint8_t quantize(double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    raise(ErrorCode::domain_error, "quantize input must lie in [0,1)");
  }
  const auto v = static_cast<std::uint32_t>(x * 256.0);
  return static_cast<std::uint8_t>(v > 255 ? 255 : v);
}

}  // namespace chaoskey
