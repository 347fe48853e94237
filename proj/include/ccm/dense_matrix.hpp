#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ccm/error.hpp"

namespace ccm {

/// Unravelling order used when laying matrix elements into a bitstring.
enum class Order : std::uint8_t { kRowMajor = 0, kColMajor = 1 };

/// Position of element (i, j) in the unravelled sequence.
constexpr std::size_t unravel(Order order, std::size_t rows, std::size_t cols, std::size_t i,
                              std::size_t j) noexcept {
  return order == Order::kRowMajor ? i * cols + j : j * rows + i;
}

/// Plain uncompressed matrix of unsigned 64-bit integers, stored row-major.
/// Serves as the input/output format of the codecs and as the test oracle.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, std::uint64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint64_t> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorCode::kShapeMismatch, "element count does not match shape");
    }
  }
  DenseMatrix(std::initializer_list<std::initializer_list<std::uint64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::kShapeMismatch, "ragged rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  std::uint64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::uint64_t at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error(ErrorCode::kOutOfBounds, "dense index");
    return data_[i * cols_ + j];
  }

  std::span<const std::uint64_t> values() const noexcept { return data_; }
  std::span<std::uint64_t> values() noexcept { return data_; }

  std::uint64_t max() const noexcept {
    return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace ccm
