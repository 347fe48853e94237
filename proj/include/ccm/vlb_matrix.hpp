#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "ccm/bit_buffer.hpp"
#include "ccm/dense_matrix.hpp"

namespace ccm {

/// Matrix packed with the Variable Length Blocks scheme. Each element is a
/// k-bit prefix holding its bit-length p followed by a p-bit payload, prefix
/// first. k is the bit-length of the bit-length of the largest element (at
/// most 7). The stream is only sequentially decodable, so the matrix keeps a
/// checkpoint (element index, bit offset) every `stride()` elements to bound
/// the cost of random access.
///
/// Immutable: changing one element would shift the rest of the stream.
class VlbMatrix {
 public:
  static constexpr std::size_t kDefaultStride = 64;

  struct Checkpoint {
    std::size_t index;
    std::size_t offset;
    friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
  };

  static VlbMatrix compress(const DenseMatrix& m, Order order = Order::kRowMajor,
                            std::size_t stride = kDefaultStride);

  /// Validates and adopts a stored stream (container load). The stream must
  /// hold exactly rows * cols canonical (prefix, payload) pairs; bits beyond
  /// the last pair must be zero. Throws kCorruptStream otherwise.
  static VlbMatrix from_stream(std::size_t rows, std::size_t cols, unsigned k, Order order,
                               std::vector<std::uint64_t> words,
                               std::size_t stride = kDefaultStride);

  std::uint64_t get(std::size_t i, std::size_t j) const;
  DenseMatrix decompress() const;

  /// Forward iterator over the elements in stream (unravel) order.
  class const_iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::uint64_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::uint64_t;

    const_iterator() = default;

    std::uint64_t operator*() const { return value_; }
    const_iterator& operator++() {
      ++index_;
      load();
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.index_ == b.index_;
    }

    std::size_t index() const noexcept { return index_; }
    /// Bit offset of the element *after* the current one.
    std::size_t next_offset() const noexcept { return offset_; }

   private:
    friend class VlbMatrix;
    const_iterator(const VlbMatrix* m, std::size_t index, std::size_t offset)
        : m_(m), index_(index), offset_(offset) {
      load();
    }
    void load();

    const VlbMatrix* m_ = nullptr;
    std::size_t index_ = 0;
    std::size_t offset_ = 0;
    std::uint64_t value_ = 0;
  };

  const_iterator begin() const { return const_iterator(this, 0, 0); }
  const_iterator end() const {
    const_iterator it;
    it.index_ = rows_ * cols_;
    return it;
  }

  /// Iterator positioned at unravelled element `idx`, reached from the
  /// closest preceding checkpoint.
  const_iterator seek(std::size_t idx) const;

  /// Element at unravelled position `idx`.
  std::uint64_t get_linear(std::size_t idx) const { return *seek(idx); }

  /// Same stream reinterpreted in the opposite unravelling order.
  VlbMatrix transposed() const;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  unsigned k() const noexcept { return k_; }
  Order order() const noexcept { return order_; }
  std::size_t stride() const noexcept { return stride_; }
  const BitBuffer& data() const noexcept { return data_; }
  const std::vector<Checkpoint>& checkpoints() const noexcept { return checkpoints_; }

  friend bool operator==(const VlbMatrix&, const VlbMatrix&) = default;

 private:
  VlbMatrix(std::size_t rows, std::size_t cols, unsigned k, Order order, std::size_t stride)
      : rows_(rows), cols_(cols), k_(k), order_(order), stride_(stride) {}

  /// Decodes the pair starting at `offset`; returns the value and advances
  /// `offset` past it.
  std::uint64_t decode_at(std::size_t& offset) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned k_ = 1;
  Order order_ = Order::kRowMajor;
  std::size_t stride_ = kDefaultStride;
  BitBuffer data_;
  std::vector<Checkpoint> checkpoints_;
};

/// Prefix width for a matrix whose largest element is `max_element`.
constexpr unsigned vlb_prefix_width(std::uint64_t max_element) noexcept {
  return bit_length(bit_length(max_element));
}

}  // namespace ccm
