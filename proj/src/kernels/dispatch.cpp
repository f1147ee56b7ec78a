#include "chaoskey/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "chaoskey/errors.hpp"
#include "ops.hpp"

namespace chaoskey::kernels {

namespace {

bool backend_usable(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(CHAOSKEY_HAVE_AVX2_BUILD)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Backend::neon:
#if defined(CHAOSKEY_HAVE_NEON_BUILD)
      return true;  // baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

const Ops& ops_for(Backend b) {
  switch (b) {
#if defined(CHAOSKEY_HAVE_AVX2_BUILD)
    case Backend::avx2:
      return avx2_ops();
#endif
#if defined(CHAOSKEY_HAVE_NEON_BUILD)
    case Backend::neon:
      return neon_ops();
#endif
    default:
      return scalar_ops();
  }
}

Backend pick_auto() {
  if (const char* env = std::getenv("CHAOSKEY_KERNELS")) {
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
      if (std::strcmp(env, name(b)) == 0 && backend_usable(b)) return b;
    }
  }
  if (backend_usable(Backend::avx2)) return Backend::avx2;
  if (backend_usable(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

struct Selection {
  Backend backend;
  const Ops* ops;
};

Selection& selection() {
  static Selection s = [] {
    const Backend b = pick_auto();
    return Selection{b, &ops_for(b)};
  }();
  return s;
}

}  // namespace

const char* name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2:   return "avx2";
    case Backend::neon:   return "neon";
  }
  return "unknown";
}

std::vector<Backend> available() {
  std::vector<Backend> out{Backend::scalar};
  if (backend_usable(Backend::avx2)) out.push_back(Backend::avx2);
  if (backend_usable(Backend::neon)) out.push_back(Backend::neon);
  return out;
}

Backend active() { return selection().backend; }

bool set_active(Backend b) {
  if (!backend_usable(b)) return false;
  selection() = {b, &ops_for(b)};
  return true;
}

void reset_auto() {
  const Backend b = pick_auto();
  selection() = {b, &ops_for(b)};
}

void logistic_iterate(std::span<double> xs, double r, int steps) {
  if (steps < 0) raise(ErrorCode::domain_error, "iteration count must be non-negative");
  if (steps == 0 || xs.empty()) return;
  selection().ops->logistic_iterate(xs.data(), xs.size(), r, steps);
}

void quantize256(std::span<const double> xs, std::span<std::uint8_t> out) {
  if (xs.size() != out.size()) raise(ErrorCode::domain_error, "quantize256 size mismatch");
  selection().ops->quantize256(xs.data(), xs.size(), out.data());
}

void schedule_block(std::span<const std::uint8_t> k1, std::span<const std::uint8_t> q,
                    std::span<std::uint8_t> out) {
  if (k1.size() != q.size() || k1.size() != out.size()) {
    raise(ErrorCode::domain_error, "schedule_block size mismatch");
  }
  selection().ops->schedule_block(k1.data(), q.data(), out.data(), k1.size());
}

void xor_bytes(std::span<std::uint8_t> data, std::span<const std::uint8_t> keystream) {
  if (data.size() != keystream.size()) raise(ErrorCode::domain_error, "xor_bytes size mismatch");
  selection().ops->xor_bytes(data.data(), keystream.data(), data.size());
}

}  // namespace chaoskey::kernels
