#include "chaoskey/kgm.hpp"

#include <algorithm>

#include "chaoskey/errors.hpp"
#include "chaoskey/utf8.hpp"

namespace chaoskey {

namespace {

std::vector<char32_t> make_alphabet() {
  std::vector<char32_t> v;
  v.reserve(95);
  for (char32_t c = U'A'; c <= U'Z'; ++c) v.push_back(c);
  for (char32_t c = U'a'; c <= U'z'; ++c) v.push_back(c);
  for (char32_t c = U'0'; c <= U'9'; ++c) v.push_back(c);
  for (char32_t c : {U',', U'.', U'_', U'@', U'+', U'-', U'=', U'#', U'!'}) v.push_back(c);
  // lowercase Greek, skipping final sigma
  for (char32_t c = 0x3B1; c <= 0x3C9; ++c) {
    if (c != 0x3C2) v.push_back(c);
  }
  return v;
}

// splitmix64; fixed here because the matrix layout is part of the format.
std::uint64_t next_u64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::span<const char32_t> kgm_alphabet() {
  static const std::vector<char32_t> alphabet = make_alphabet();
  return alphabet;
}

Kgm build_matrix(std::uint64_t seed) {
  Kgm m;
  m.seed = seed;
  const auto alphabet = kgm_alphabet();
  for (int layer = 0; layer < Kgm::kDim; ++layer) {
    std::vector<char32_t> pool(alphabet.begin(), alphabet.end());
    // Pad from remaining printable ASCII should the alphabet ever be smaller
    // than a layer.
    for (char32_t c = 0x20; pool.size() < 81 && c < 0x7F; ++c) {
      if (std::find(pool.begin(), pool.end(), c) == pool.end()) pool.push_back(c);
    }
    std::uint64_t state = seed ^ (0xA0761D6478BD642FULL * static_cast<std::uint64_t>(layer + 1));
    for (std::size_t i = pool.size() - 1; i > 0; --i) {
      const std::size_t j = next_u64(state) % (i + 1);
      std::swap(pool[i], pool[j]);
    }
    std::size_t k = 0;
    for (int row = 0; row < Kgm::kDim; ++row) {
      for (int col = 0; col < Kgm::kDim; ++col) {
        m.layers[layer][row][col] = pool[k++];
      }
    }
  }
  return m;
}

std::u32string lookup(char32_t c, int layer, const Kgm& m) {
  if (layer < 0 || layer >= Kgm::kDim) {
    raise(ErrorCode::domain_error, "layer must be in 0..8");
  }
  for (int row = 0; row < Kgm::kDim; ++row) {
    for (int col = 0; col < Kgm::kDim; ++col) {
      if (m.layers[layer][row][col] == c) {
        std::u32string code;
        code.push_back(static_cast<char32_t>(U'0' + row));
        code.push_back(static_cast<char32_t>(U'0' + col));
        code.push_back(m.layers[(layer + 1) % Kgm::kDim][row][col]);
        return code;
      }
    }
  }
  return U"000";
}

FirstKey first_key(std::u32string_view secret, const Kgm& m) {
  if (secret.empty()) {
    raise(ErrorCode::empty_key, "secret key must not be empty");
  }
  if (secret.size() > 64) {
    raise(ErrorCode::key_too_long, "secret key must be at most 64 characters");
  }
  FirstKey key;
  key.source_len = secret.size();
  key.chars.reserve(3 * secret.size());
  for (std::size_t f = 0; f < secret.size(); ++f) {
    key.chars += lookup(secret[f], static_cast<int>(f % Kgm::kDim), m);
  }
  return key;
}

FirstKey first_key(std::string_view secret_utf8, const Kgm& m) {
  return first_key(decode_utf8_lenient(secret_utf8), m);
}

std::vector<std::uint8_t> FirstKey::bytes() const {
  std::vector<std::uint8_t> out;
  out.reserve(chars.size());
  for (char32_t c : chars) out.push_back(static_cast<std::uint8_t>(c & 0xFF));
  return out;
}

}  // namespace chaoskey
