#include "chaoskey/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>

#include "chaoskey/errors.hpp"
#include "chaoskey/kernels.hpp"
#include "chaoskey/keyschedule.hpp"

namespace chaoskey::bench {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string random_text(std::size_t bytes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter('a', 'z');
  std::uniform_int_distribution<int> word_len(3, 8);
  std::string out;
  out.reserve(bytes + 16);
  while (out.size() < bytes) {
    if (!out.empty()) out.push_back(' ');
    const int len = word_len(rng);
    for (int i = 0; i < len; ++i) out.push_back(static_cast<char>(letter(rng)));
  }
  out.resize(bytes);
  return out;
}

FirstKey synthetic_first_key(std::size_t bytes, std::uint64_t seed) {
  FirstKey k1;
  k1.chars.reserve(bytes);
  std::uint64_t state = seed;
  for (std::size_t i = 0; i < bytes; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    k1.chars.push_back(static_cast<char32_t>(0x21 + (state >> 33) % 0x5E));
  }
  k1.source_len = bytes / 3;
  return k1;
}

// Keeps the optimizer from dropping timed work.
volatile std::uint8_t g_sink = 0;

}  // namespace

LinearFit fit_line(std::span<const std::pair<double, double>> points_kb_ms) {
  const std::size_t n = points_kb_ms.size();
  if (n == 0) raise(ErrorCode::domain_error, "fit_line needs at least one point");

  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : points_kb_ms) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points_kb_ms) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }

  LinearFit fit;
  if (n < 2 || sxx == 0.0) {
    fit.slope_ms_per_kb = 0.0;
    fit.intercept_ms = my;
    fit.r_squared = 1.0;  // a flat line through the mean is exact here
    return fit;
  }
  fit.slope_ms_per_kb = sxy / sxx;
  fit.intercept_ms = my - fit.slope_ms_per_kb * mx;

  double ss_res = 0.0, ss_tot = 0.0;
  for (const auto& [x, y] : points_kb_ms) {
    const double predicted = fit.intercept_ms + fit.slope_ms_per_kb * x;
    ss_res += (y - predicted) * (y - predicted);
    ss_tot += (y - my) * (y - my);
  }
  fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  fit.r_squared = std::clamp(fit.r_squared, 0.0, 1.0);
  return fit;
}

BenchReport run_bench(std::span<const std::size_t> sizes_kb, const ChaosParams& params,
                      std::string_view secret, int repetitions) {
  if (sizes_kb.empty()) raise(ErrorCode::domain_error, "run_bench needs at least one size");
  for (std::size_t i = 0; i < sizes_kb.size(); ++i) {
    if (sizes_kb[i] < 1) raise(ErrorCode::domain_error, "bench sizes must be at least 1 KB");
    if (i > 0 && sizes_kb[i] <= sizes_kb[i - 1]) {
      raise(ErrorCode::domain_error, "bench sizes must be strictly increasing");
    }
  }
  const int reps = std::max(repetitions, 3);
  const Kgm m = build_matrix(kDefaultKgmSeed);

  BenchReport report;
  report.samples.reserve(sizes_kb.size());
  std::vector<std::pair<double, double>> points;
  points.reserve(sizes_kb.size());

  for (std::size_t size_kb : sizes_kb) {
    const std::size_t bytes = size_kb * 1024;
    std::string text = random_text(bytes, 0x9E3779B97F4A7C15ULL ^ bytes);
    std::vector<std::uint8_t> buf(text.begin(), text.end());

    std::vector<double> times;
    times.reserve(reps);
    for (int rep = 0; rep < reps; ++rep) {
      const auto start = Clock::now();
      const Keystream ks = keystream(secret, buf.size(), params, m);
      kernels::xor_bytes(buf, ks.bytes);
      times.push_back(ms_since(start));
      g_sink = g_sink ^ buf.front() ^ ks.bytes.back();
    }
    const double ms = median(std::move(times));
    report.samples.push_back({bytes, ms, reps});
    points.emplace_back(static_cast<double>(size_kb), ms);
  }
  report.fit = fit_line(points);
  return report;
}

BenchReport cycle_time(std::span<const std::size_t> key_sizes_bytes, const ChaosParams& params,
                       int repetitions) {
  if (key_sizes_bytes.empty()) {
    raise(ErrorCode::domain_error, "cycle_time needs at least one key size");
  }
  const int reps = std::max(repetitions, 3);

  BenchReport report;
  report.samples.reserve(key_sizes_bytes.size());
  std::vector<std::pair<double, double>> points;
  points.reserve(key_sizes_bytes.size());

  for (std::size_t bytes : key_sizes_bytes) {
    const FirstKey k1 = synthetic_first_key(bytes, 0xD1B54A32D192ED03ULL ^ bytes);
    std::vector<std::uint8_t> out(bytes);

    // One pass is microseconds; loop it until a measurement spans a few ms.
    auto one_pass = [&] {
      KeystreamGenerator gen(k1, params);  // throws KeyTooShort under 9 bytes
      gen.fill(out);
      g_sink = g_sink ^ out.front();
    };
    one_pass();
    const auto probe_start = Clock::now();
    one_pass();
    const double probe_ms = ms_since(probe_start);
    const int inner = probe_ms >= 2.0
                          ? 1
                          : static_cast<int>(std::min(10000.0, std::ceil(2.0 / std::max(probe_ms, 1e-6))));

    std::vector<double> times;
    times.reserve(reps);
    for (int rep = 0; rep < reps; ++rep) {
      const auto start = Clock::now();
      for (int i = 0; i < inner; ++i) one_pass();
      times.push_back(ms_since(start) / inner);
    }
    const double ms = median(std::move(times));
    report.samples.push_back({bytes, ms, reps});
    points.emplace_back(static_cast<double>(bytes) / 1024.0, ms);
  }
  report.fit = fit_line(points);
  return report;
}

}  // namespace chaoskey::bench
