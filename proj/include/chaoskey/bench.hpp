#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "chaoskey/chaos.hpp"

namespace chaoskey::bench {

struct BenchSample {
  std::size_t size_bytes = 0;
  double elapsed_ms = 0.0;  // median over repetitions
  int repetitions = 0;
};

struct LinearFit {
  double slope_ms_per_kb = 0.0;
  double intercept_ms = 0.0;
  double r_squared = 1.0;
};

struct BenchReport {
  std::vector<BenchSample> samples;
  LinearFit fit;
};

/// Ordinary least squares of ms against KB. Fewer than two points, or points
/// sharing one x, degenerate to slope 0 / intercept mean(y); a zero-variance
/// y column reports r_squared 1 by convention (the flat line is exact).
LinearFit fit_line(std::span<const std::pair<double, double>> points_kb_ms);

/// Times keystream generation + stream encryption of random text at each
/// size. Sizes are KB, must be strictly increasing and >= 1; repetitions are
/// clamped up to 3 and the median is kept. Wall time comes from the
/// monotonic clock.
BenchReport run_bench(std::span<const std::size_t> sizes_kb, const ChaosParams& params,
                      std::string_view secret, int repetitions = 5);

/// Times one full keystream pass (every cycle of a synthetic first key of the
/// given byte size). Fast passes are repeated in an auto-calibrated inner
/// loop so each measurement covers at least a few milliseconds.
/// Throws KeyTooShort for sizes under nine bytes.
BenchReport cycle_time(std::span<const std::size_t> key_sizes_bytes, const ChaosParams& params,
                       int repetitions = 5);

/// Mean time of one derivation cycle within a sample's keystream pass.
inline double per_cycle_ms(const BenchSample& s) {
  return s.size_bytes == 0 ? 0.0 : s.elapsed_ms / static_cast<double>(s.size_bytes);
}

}  // namespace chaoskey::bench
