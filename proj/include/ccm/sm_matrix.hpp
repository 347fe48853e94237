#pragma once

#include <cstddef>
#include <cstdint>

#include "ccm/bit_buffer.hpp"
#include "ccm/dense_matrix.hpp"

namespace ccm {

/// Matrix packed with the Supreme Minimum scheme: every element occupies a
/// fixed chunk of `width()` bits, where the width is the bit-length of the
/// largest element. Element (i, j) sits at bits [idx * width, (idx + 1) * width)
/// with idx its unravelled position, so access is O(1) (at most two words).
class SmMatrix {
 public:
  /// Packs `m` at the minimal width. Requires a non-empty matrix.
  static SmMatrix compress(const DenseMatrix& m, Order order = Order::kRowMajor);

  /// All-zero matrix with a caller-chosen chunk width; used by producers that
  /// already know the width of their output.
  static SmMatrix zeros(std::size_t rows, std::size_t cols, unsigned width,
                        Order order = Order::kRowMajor);

  /// Rebuilds a matrix from stored parts (container load). Throws
  /// kCorruptStream when the parts are inconsistent.
  static SmMatrix from_parts(std::size_t rows, std::size_t cols, unsigned width, Order order,
                             BitBuffer data);

  std::uint64_t get(std::size_t i, std::size_t j) const;

  /// Stores `value` at (i, j). Throws kWidthOverflow if it needs more than
  /// width() bits; widen() first in that case.
  void set(std::size_t i, std::size_t j, std::uint64_t value);

  /// Re-encodes at a larger chunk width.
  SmMatrix widen(unsigned new_width) const;

  DenseMatrix decompress() const;

  /// Element at unravelled position `idx` (no bounds check beyond the buffer's).
  std::uint64_t get_linear(std::size_t idx) const {
    return data_.read_field(idx * width_, width_);
  }

  /// Same elements, dimensions swapped: the bitstring is reinterpreted in the
  /// opposite unravelling order, so no element is copied.
  SmMatrix transposed() const;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  unsigned width() const noexcept { return width_; }
  Order order() const noexcept { return order_; }
  const BitBuffer& data() const noexcept { return data_; }

  friend bool operator==(const SmMatrix&, const SmMatrix&) = default;

 private:
  SmMatrix(std::size_t rows, std::size_t cols, unsigned width, Order order)
      : rows_(rows), cols_(cols), width_(width), order_(order) {}

  std::size_t index_of(std::size_t i, std::size_t j) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned width_ = 1;
  Order order_ = Order::kRowMajor;
  BitBuffer data_;
};

}  // namespace ccm
