#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "ccm/sm_matrix.hpp"
#include "ccm/vlb_matrix.hpp"

namespace ccm {

enum class Method : std::uint8_t { kSm = 1, kVlb = 2 };

/// A matrix held in either compressed representation. Arithmetic reads the
/// operands element by element through the codecs and never materialises a
/// dense copy of them.
class CompressedMatrix {
 public:
  using Repr = std::variant<SmMatrix, VlbMatrix>;

  CompressedMatrix(SmMatrix m) : repr_(std::move(m)) {}   // NOLINT(implicit)
  CompressedMatrix(VlbMatrix m) : repr_(std::move(m)) {}  // NOLINT(implicit)

  static CompressedMatrix compress(const DenseMatrix& m, Method method,
                                   Order order = Order::kRowMajor,
                                   std::size_t stride = VlbMatrix::kDefaultStride);

  std::size_t rows() const {
    return std::visit([](const auto& m) { return m.rows(); }, repr_);
  }
  std::size_t cols() const {
    return std::visit([](const auto& m) { return m.cols(); }, repr_);
  }
  Order order() const {
    return std::visit([](const auto& m) { return m.order(); }, repr_);
  }
  const BitBuffer& data() const {
    return std::visit([](const auto& m) -> const BitBuffer& { return m.data(); }, repr_);
  }
  Method method() const { return is_sm() ? Method::kSm : Method::kVlb; }
  bool is_sm() const noexcept { return std::holds_alternative<SmMatrix>(repr_); }

  const SmMatrix& sm() const { return std::get<SmMatrix>(repr_); }
  const VlbMatrix& vlb() const { return std::get<VlbMatrix>(repr_); }
  const Repr& repr() const noexcept { return repr_; }

  std::uint64_t get(std::size_t i, std::size_t j) const {
    return std::visit([&](const auto& m) { return m.get(i, j); }, repr_);
  }
  DenseMatrix decompress() const {
    return std::visit([](const auto& m) { return m.decompress(); }, repr_);
  }

 private:
  Repr repr_;
};

/// Sequential-friendly element reader. Visiting elements in the operand's
/// own unravel order decodes a VLB stream once; other access patterns fall
/// back to checkpoint seeks. Holds O(1) state.
class ElementReader {
 public:
  explicit ElementReader(const CompressedMatrix& m) : m_(&m) {}

  std::uint64_t operator()(std::size_t i, std::size_t j);

 private:
  const CompressedMatrix* m_;
  VlbMatrix::const_iterator cursor_;
  bool primed_ = false;
};

/// Element-wise sum. Result is SM-encoded at the minimal width.
/// Throws kShapeMismatch or kArithmeticOverflow.
CompressedMatrix add(const CompressedMatrix& a, const CompressedMatrix& b);

CompressedMatrix scalar_mul(const CompressedMatrix& a, std::uint64_t s);

/// Standard matrix product with checked 64-bit accumulation.
CompressedMatrix matmul(const CompressedMatrix& a, const CompressedMatrix& b);

/// Swaps rows and columns. The stored stream is reused as-is in the opposite
/// unravel order, so the representation is preserved.
CompressedMatrix transpose(const CompressedMatrix& a);

/// True iff shapes match and every element is equal, whatever the
/// representations.
bool equals(const CompressedMatrix& a, const CompressedMatrix& b);

}  // namespace ccm
