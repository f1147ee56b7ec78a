#include "chaoskey/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "chaoskey/errors.hpp"
#include "chaoskey/keyschedule.hpp"
#include "chaoskey/utf8.hpp"

namespace chaoskey::analysis {

double trail_bound_log2(const TrailParams& p) {
  if (p.active_count < 1) {
    raise(ErrorCode::domain_error,
          "active_count must be at least 1, got " + std::to_string(p.active_count));
  }
  if (!(p.per_box_log2 < 0.0)) {
    raise(ErrorCode::domain_error, "per_box_log2 must be negative, got " +
                                       std::to_string(p.per_box_log2));
  }
  return static_cast<double>(p.active_count) * p.per_box_log2;
}

long reported_exponent(double bound_log2) {
  return static_cast<long>(std::trunc(bound_log2));
}

std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) {
    raise(ErrorCode::domain_error, "hamming_distance needs equal lengths, got " +
                                       std::to_string(a.size()) + " and " +
                                       std::to_string(b.size()));
  }
  std::size_t bits = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bits += std::popcount(static_cast<unsigned>(a[i] ^ b[i]));
  }
  return bits;
}

double flip_fraction(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  const std::size_t dist = hamming_distance(a, b);
  if (a.empty()) raise(ErrorCode::domain_error, "flip_fraction of empty streams is undefined");
  return static_cast<double>(dist) / (8.0 * static_cast<double>(a.size()));
}

AvalancheReport avalanche(std::string_view secret, int trials, const ChaosParams& params,
                          const Kgm& m, std::uint64_t rng_seed) {
  if (trials < 1) {
    raise(ErrorCode::domain_error, "avalanche needs at least 1 trial, got " +
                                       std::to_string(trials));
  }
  const std::size_t length = 3 * decode_utf8_lenient(secret).size();
  const Keystream base = keystream(secret, length, params, m);

  std::mt19937_64 rng(rng_seed);
  const std::size_t total_bits = secret.size() * 8;

  AvalancheReport report;
  report.trials = trials;
  report.min_fraction = 1.0;
  report.max_fraction = 0.0;
  double sum = 0.0;
  std::string mutated(secret);
  for (int t = 0; t < trials; ++t) {
    const std::size_t bit = rng() % total_bits;
    mutated[bit / 8] = static_cast<char>(mutated[bit / 8] ^ (1u << (bit % 8)));
    const Keystream flipped = keystream(mutated, length, params, m);
    mutated[bit / 8] = static_cast<char>(mutated[bit / 8] ^ (1u << (bit % 8)));  // restore
    const double frac = flip_fraction(base.bytes, flipped.bytes);
    sum += frac;
    report.min_fraction = std::min(report.min_fraction, frac);
    report.max_fraction = std::max(report.max_fraction, frac);
  }
  report.mean_flip_fraction = sum / trials;
  return report;
}

double monobit(std::span<const std::uint8_t> stream) {
  if (stream.empty()) raise(ErrorCode::empty_input, "monobit needs a non-empty stream");
  std::size_t ones = 0;
  for (std::uint8_t byte : stream) ones += std::popcount(static_cast<unsigned>(byte));
  return static_cast<double>(ones) / (8.0 * static_cast<double>(stream.size()));
}

}  // namespace chaoskey::analysis
