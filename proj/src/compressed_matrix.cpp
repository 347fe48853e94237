#include "ccm/compressed_matrix.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace ccm {

namespace {

void require_same_shape(const CompressedMatrix& a, const CompressedMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw Error(ErrorCode::kArithmeticOverflow,
                std::to_string(x) + " + " + std::to_string(y) + " exceeds 2^64 - 1");
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw Error(ErrorCode::kArithmeticOverflow,
                std::to_string(x) + " * " + std::to_string(y) + " exceeds 2^64 - 1");
  }
  return r;
}

// Two passes over the output: the first finds the largest element so the SM
// width is known, the second fills a buffer of exactly that width. `element`
// must be a pure function of (i, j) within one pass; it is re-created per pass
// so readers restart cleanly.
template <typename MakeElementFn>
CompressedMatrix build_sm(std::size_t rows, std::size_t cols, MakeElementFn make_element) {
  std::uint64_t max = 0;
  {
    auto element = make_element();
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) max = std::max(max, element(i, j));
  }
  SmMatrix out = SmMatrix::zeros(rows, cols, bit_length(max));
  auto element = make_element();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, element(i, j));
  return out;
}

}  // namespace

CompressedMatrix CompressedMatrix::compress(const DenseMatrix& m, Method method, Order order,
                                            std::size_t stride) {
  if (method == Method::kSm) return SmMatrix::compress(m, order);
  return VlbMatrix::compress(m, order, stride);
}

std::uint64_t ElementReader::operator()(std::size_t i, std::size_t j) {
  if (m_->is_sm()) return m_->sm().get(i, j);
  const VlbMatrix& v = m_->vlb();
  if (i >= v.rows() || j >= v.cols()) {
    throw Error(ErrorCode::kOutOfBounds, "(" + std::to_string(i) + ", " + std::to_string(j) +
                                             ")");
  }
  const std::size_t idx = unravel(v.order(), v.rows(), v.cols(), i, j);
  if (primed_ && idx == cursor_.index()) return *cursor_;
  if (primed_ && idx == cursor_.index() + 1) {
    ++cursor_;
  } else {
    cursor_ = v.seek(idx);
    primed_ = true;
  }
  return *cursor_;
}

CompressedMatrix add(const CompressedMatrix& a, const CompressedMatrix& b) {
  require_same_shape(a, b);
  return build_sm(a.rows(), a.cols(), [&] {
    return [ra = ElementReader(a), rb = ElementReader(b)](std::size_t i, std::size_t j) mutable {
      return checked_add(ra(i, j), rb(i, j));
    };
  });
}

CompressedMatrix scalar_mul(const CompressedMatrix& a, std::uint64_t s) {
  return build_sm(a.rows(), a.cols(), [&] {
    return [ra = ElementReader(a), s](std::size_t i, std::size_t j) mutable {
      return checked_mul(ra(i, j), s);
    };
  });
}

CompressedMatrix matmul(const CompressedMatrix& a, const CompressedMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kShapeMismatch,
                "inner dimensions " + std::to_string(a.cols()) + " and " +
                    std::to_string(b.rows()) + " differ");
  }
  const std::size_t inner = a.cols();
  // One row strip of A is buffered; B is read through its own reader.
  return build_sm(a.rows(), b.cols(), [&] {
    return [ra = ElementReader(a), rb = ElementReader(b), strip = std::vector<std::uint64_t>(inner),
            strip_row = std::size_t(-1), inner](std::size_t i, std::size_t j) mutable {
      if (strip_row != i) {
        for (std::size_t t = 0; t < inner; ++t) strip[t] = ra(i, t);
        strip_row = i;
      }
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < inner; ++t) acc = checked_add(acc, checked_mul(strip[t], rb(t, j)));
      return acc;
    };
  });
}

CompressedMatrix transpose(const CompressedMatrix& a) {
  if (a.is_sm()) return a.sm().transposed();
  return a.vlb().transposed();
}

bool equals(const CompressedMatrix& a, const CompressedMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  ElementReader ra(a);
  ElementReader rb(b);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (ra(i, j) != rb(i, j)) return false;
  return true;
}

}  // namespace ccm
