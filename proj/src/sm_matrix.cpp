#include "ccm/sm_matrix.hpp"

#include <string>
#include <utility>

namespace ccm {

namespace {

void check_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix must have at least one row and column");
  }
}

Order flipped(Order order) {
  return order == Order::kRowMajor ? Order::kColMajor : Order::kRowMajor;
}

}  // namespace

SmMatrix SmMatrix::compress(const DenseMatrix& m, Order order) {
  check_shape(m.rows(), m.cols());
  SmMatrix out(m.rows(), m.cols(), bit_length(m.max()), order);
  out.data_.reserve_bits(m.size() * out.width_);
  // Appending in unravel order yields the same layout as write_field at
  // idx * width, one chunk after another.
  if (order == Order::kRowMajor) {
    for (std::uint64_t v : m.values()) out.data_.append(out.width_, v);
  } else {
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i) out.data_.append(out.width_, m(i, j));
  }
  return out;
}

SmMatrix SmMatrix::zeros(std::size_t rows, std::size_t cols, unsigned width, Order order) {
  check_shape(rows, cols);
  if (width == 0 || width > kWordBits) {
    throw Error(ErrorCode::kInvalidArgument, "chunk width " + std::to_string(width));
  }
  SmMatrix out(rows, cols, width, order);
  out.data_.write_field(rows * cols * width - 1, 1, 0);
  return out;
}

SmMatrix SmMatrix::from_parts(std::size_t rows, std::size_t cols, unsigned width, Order order,
                              BitBuffer data) {
  if (rows == 0 || cols == 0 || width == 0 || width > kWordBits) {
    throw Error(ErrorCode::kCorruptStream, "invalid SM header");
  }
  if (data.size() != rows * cols * width) {
    throw Error(ErrorCode::kCorruptStream, "SM payload holds " + std::to_string(data.size()) +
                                               " bits, expected " +
                                               std::to_string(rows * cols * width));
  }
  SmMatrix out(rows, cols, width, order);
  out.data_ = std::move(data);
  return out;
}

std::size_t SmMatrix::index_of(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::kOutOfBounds, "(" + std::to_string(i) + ", " + std::to_string(j) +
                                             ") outside " + std::to_string(rows_) + "x" +
                                             std::to_string(cols_));
  }
  return unravel(order_, rows_, cols_, i, j);
}

std::uint64_t SmMatrix::get(std::size_t i, std::size_t j) const {
  return get_linear(index_of(i, j));
}

void SmMatrix::set(std::size_t i, std::size_t j, std::uint64_t value) {
  const std::size_t idx = index_of(i, j);
  if (bit_length(value) > width_) {
    throw Error(ErrorCode::kWidthOverflow, std::to_string(value) + " needs " +
                                               std::to_string(bit_length(value)) +
                                               " bits, chunk width is " +
                                               std::to_string(width_));
  }
  data_.write_field(idx * width_, width_, value);
}

SmMatrix SmMatrix::widen(unsigned new_width) const {
  if (new_width < width_) {
    throw Error(ErrorCode::kNarrowingRequested, "cannot narrow width " + std::to_string(width_) +
                                                    " to " + std::to_string(new_width));
  }
  if (new_width > kWordBits) {
    throw Error(ErrorCode::kInvalidArgument, "chunk width " + std::to_string(new_width));
  }
  SmMatrix out(rows_, cols_, new_width, order_);
  const std::size_t n = rows_ * cols_;
  out.data_.reserve_bits(n * new_width);
  for (std::size_t idx = 0; idx < n; ++idx) out.data_.append(new_width, get_linear(idx));
  return out;
}

DenseMatrix SmMatrix::decompress() const {
  DenseMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(i, j) = get_linear(unravel(order_, rows_, cols_, i, j));
  return m;
}

SmMatrix SmMatrix::transposed() const {
  SmMatrix out(cols_, rows_, width_, flipped(order_));
  out.data_ = data_;
  return out;
}

}  // namespace ccm
