#include "ccm/vlb_matrix.hpp"

#include <string>
#include <utility>

namespace ccm {

namespace {

void check_args(std::size_t rows, std::size_t cols, std::size_t stride) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix must have at least one row and column");
  }
  if (stride == 0) throw Error(ErrorCode::kInvalidArgument, "checkpoint stride must be >= 1");
}

}  // namespace

VlbMatrix VlbMatrix::compress(const DenseMatrix& m, Order order, std::size_t stride) {
  check_args(m.rows(), m.cols(), stride);
  VlbMatrix out(m.rows(), m.cols(), vlb_prefix_width(m.max()), order, stride);
  const std::size_t n = m.size();
  out.checkpoints_.reserve((n + stride - 1) / stride);

  auto put = [&](std::size_t idx, std::uint64_t v) {
    if (idx % stride == 0) out.checkpoints_.push_back({idx, out.data_.size()});
    const unsigned len = bit_length(v);
    out.data_.append(out.k_, len);
    out.data_.append(len, v);
  };
  std::size_t idx = 0;
  if (order == Order::kRowMajor) {
    for (std::uint64_t v : m.values()) put(idx++, v);
  } else {
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i) put(idx++, m(i, j));
  }
  return out;
}

VlbMatrix VlbMatrix::from_stream(std::size_t rows, std::size_t cols, unsigned k, Order order,
                                 std::vector<std::uint64_t> words, std::size_t stride) {
  if (rows == 0 || cols == 0 || k == 0 || k > 7) {
    throw Error(ErrorCode::kCorruptStream, "invalid VLB header");
  }
  check_args(rows, cols, stride);
  const std::size_t capacity = words.size() * kWordBits;
  VlbMatrix out(rows, cols, k, order, stride);
  out.data_ = BitBuffer::from_words(std::move(words), capacity);

  const std::size_t n = rows * cols;
  std::size_t offset = 0;
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (idx % stride == 0) out.checkpoints_.push_back({idx, offset});
    out.decode_at(offset);
  }
  // Re-adopt the words with the exact stream length; this rejects extra
  // words and non-zero trailing bits.
  std::vector<std::uint64_t> raw(out.data_.words().begin(), out.data_.words().end());
  out.data_ = BitBuffer::from_words(std::move(raw), offset);
  return out;
}

std::uint64_t VlbMatrix::decode_at(std::size_t& offset) const {
  if (offset + k_ > data_.size()) {
    throw Error(ErrorCode::kCorruptStream, "prefix runs past end of stream");
  }
  const auto len = static_cast<unsigned>(data_.read_field(offset, k_));
  if (len == 0 || len > kWordBits) {
    throw Error(ErrorCode::kCorruptStream,
                "invalid length prefix " + std::to_string(len) + " at bit " +
                    std::to_string(offset));
  }
  if (offset + k_ + len > data_.size()) {
    throw Error(ErrorCode::kCorruptStream, "payload runs past end of stream");
  }
  const std::uint64_t v = data_.read_field(offset + k_, len);
  if (bit_length(v) != len) {
    throw Error(ErrorCode::kCorruptStream, "non-canonical length prefix at bit " +
                                               std::to_string(offset));
  }
  offset += k_ + len;
  return v;
}

void VlbMatrix::const_iterator::load() {
  if (m_ != nullptr && index_ < m_->rows_ * m_->cols_) value_ = m_->decode_at(offset_);
}

VlbMatrix::const_iterator VlbMatrix::seek(std::size_t idx) const {
  if (idx >= rows_ * cols_) {
    throw Error(ErrorCode::kOutOfBounds, "element " + std::to_string(idx) + " of " +
                                             std::to_string(rows_ * cols_));
  }
  const Checkpoint& cp = checkpoints_[idx / stride_];
  std::size_t offset = cp.offset;
  for (std::size_t e = cp.index; e < idx; ++e) {
    const auto len = static_cast<unsigned>(data_.read_field(offset, k_));
    if (len == 0) throw Error(ErrorCode::kCorruptStream, "zero length prefix");
    offset += k_ + len;
  }
  return const_iterator(this, idx, offset);
}

std::uint64_t VlbMatrix::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::kOutOfBounds, "(" + std::to_string(i) + ", " + std::to_string(j) +
                                             ") outside " + std::to_string(rows_) + "x" +
                                             std::to_string(cols_));
  }
  return get_linear(unravel(order_, rows_, cols_, i, j));
}

DenseMatrix VlbMatrix::decompress() const {
  DenseMatrix m(rows_, cols_);
  std::size_t idx = 0;
  for (std::uint64_t v : *this) {
    if (order_ == Order::kRowMajor) {
      m.values()[idx] = v;
    } else {
      m(idx % rows_, idx / rows_) = v;
    }
    ++idx;
  }
  return m;
}

VlbMatrix VlbMatrix::transposed() const {
  VlbMatrix out(cols_, rows_, k_,
                order_ == Order::kRowMajor ? Order::kColMajor : Order::kRowMajor, stride_);
  out.data_ = data_;
  out.checkpoints_ = checkpoints_;
  return out;
}

}  // namespace ccm
