#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ccm/error.hpp"

namespace ccm {

inline constexpr unsigned kWordBits = 64;

/// Number of binary digits needed to write `n`, with 0 and 1 both taking one
/// bit. Always in [1, 64].
constexpr unsigned bit_length(std::uint64_t n) noexcept {
  return n < 2 ? 1u : static_cast<unsigned>(std::bit_width(n));
}

/// Mask with the low `width` bits set, for width in [0, 64].
constexpr std::uint64_t low_mask(unsigned width) noexcept {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// Growable bitstring made of 64-bit words.
///
/// Bit position p lives in word p / 64 at bit p % 64, bit 0 being the least
/// significant bit of the word. Fields therefore fill each word from the right,
/// and a field that crosses a word boundary keeps its low-order bits in the
/// earlier word. Bits at positions >= size() are always zero, so two buffers
/// holding the same fields compare equal word for word.
class BitBuffer {
 public:
  BitBuffer() = default;

  /// Adopts `words` as storage holding `bit_len` valid bits. Throws
  /// kCorruptStream if the word count does not match or padding is non-zero.
  static BitBuffer from_words(std::vector<std::uint64_t> words, std::size_t bit_len);

  /// Writes the low `width` bits of `value` at bit offset `pos`, growing the
  /// buffer with zero words as needed.
  void write_field(std::size_t pos, unsigned width, std::uint64_t value);

  std::uint64_t read_field(std::size_t pos, unsigned width) const;

  /// Appends a field at size() and returns its offset.
  std::size_t append(unsigned width, std::uint64_t value) {
    std::size_t pos = bit_len_;
    write_field(pos, width, value);
    return pos;
  }

  /// Reserves room for `bits` bits without changing size().
  void reserve_bits(std::size_t bits) { words_.reserve(words_for(bits)); }

  std::size_t size() const noexcept { return bit_len_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  static constexpr std::size_t words_for(std::size_t bits) noexcept {
    return (bits + kWordBits - 1) / kWordBits;
  }

  friend bool operator==(const BitBuffer&, const BitBuffer&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t bit_len_ = 0;
};

}  // namespace ccm
