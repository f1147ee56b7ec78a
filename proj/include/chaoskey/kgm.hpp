#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chaoskey {

/// Seed used everywhere a matrix seed is not given explicitly. Fixed so that
/// test vectors and ciphertext produced with defaults stay reproducible.
inline constexpr std::uint64_t kDefaultKgmSeed = 0x0003'D4C3'B2A1'0001ULL;

/// Ordered 95-character alphabet the matrix layers are drawn from:
/// A-Z, a-z, 0-9, the punctuation set , . _ @ + - = # ! and the 24 lowercase
/// Greek letters (alpha..omega, final sigma excluded).
std::span<const char32_t> kgm_alphabet();

/// 9x9x9 character matrix. Each layer is an independent seeded permutation of
/// the alphabet truncated to 81 cells, so every layer is duplicate-free but
/// may be missing some alphabet characters; lookups of missing characters take
/// the "000" path.
struct Kgm {
  static constexpr int kDim = 9;

  std::uint64_t seed = 0;
  // layers[layer][row][col]
  std::array<std::array<std::array<char32_t, kDim>, kDim>, kDim> layers{};

  char32_t at(int layer, int row, int col) const { return layers[layer][row][col]; }

  bool operator==(const Kgm&) const = default;
};

/// Per-character code string produced by matrix lookup, three code points per
/// input character.
struct FirstKey {
  std::u32string chars;
  std::size_t source_len = 0;

  /// 8-bit view used by the chaos stage: low byte of each code point.
  std::vector<std::uint8_t> bytes() const;
};

/// Deterministic construction: identical seeds give identical matrices.
Kgm build_matrix(std::uint64_t seed);

/// Finds c in the given layer and returns digit(row), digit(col) plus the
/// depth-adjacent cell; "000" when c does not occur in the layer.
std::u32string lookup(char32_t c, int layer, const Kgm& m);

/// Concatenated lookup codes, layer cycling with character position.
/// Throws EmptyKey / KeyTooLong.
FirstKey first_key(std::u32string_view secret, const Kgm& m);
FirstKey first_key(std::string_view secret_utf8, const Kgm& m);

}  // namespace chaoskey
