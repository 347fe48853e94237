#include "ccm/sm_matrix.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace ccm {
namespace {

using testing::paper_row;
using testing::random_matrix;

constexpr std::uint64_t kPaperWord0 = 900ULL + (1023ULL << 10) + (721ULL << 20) + (256ULL << 30) +
                                      (1ULL << 40) + (10ULL << 50) + ((700ULL % 16) << 60);
constexpr std::uint64_t kPaperWord1 = (700ULL / 16) + (20ULL << 6);

TEST(SmMatrix, PaperRowLayout) {
  const SmMatrix m = SmMatrix::compress(paper_row());
  EXPECT_EQ(m.width(), 10u);
  EXPECT_EQ(m.data().size(), 80u);
  ASSERT_EQ(m.data().word_count(), 2u);
  EXPECT_EQ(m.data().words()[0], kPaperWord0);
  EXPECT_EQ(m.data().words()[1], kPaperWord1);
  EXPECT_EQ(m.get(0, 6), 700u);
}

TEST(SmMatrix, BinaryMatrixFitsOneWord) {
  std::mt19937_64 rng(1);
  DenseMatrix m(8, 8);
  for (auto& v : m.values()) v = rng() & 1;
  m(3, 3) = 1;
  const SmMatrix sm = SmMatrix::compress(m);
  EXPECT_EQ(sm.width(), 1u);
  EXPECT_EQ(sm.data().word_count(), 1u);
  EXPECT_EQ(sm.decompress(), m);
}

TEST(SmMatrix, SingleZero) {
  const SmMatrix sm = SmMatrix::compress(DenseMatrix{{0}});
  EXPECT_EQ(sm.width(), 1u);
  EXPECT_EQ(sm.data().word_count(), 1u);
  EXPECT_EQ(sm.data().words()[0], 0u);
  EXPECT_EQ(sm.get(0, 0), 0u);
}

TEST(SmMatrix, ColumnMajorUnravelling) {
  const DenseMatrix m{{1, 2, 3}, {4, 5, 6}};
  const SmMatrix sm = SmMatrix::compress(m, Order::kColMajor);
  // stream order 1 4 2 5 3 6 at width 3
  EXPECT_EQ(sm.data().read_field(3, 3), 4u);
  EXPECT_EQ(sm.data().read_field(6, 3), 2u);
  EXPECT_EQ(sm.get(1, 2), 6u);
  EXPECT_EQ(sm.decompress(), m);
}

TEST(SmMatrix, SetAndRestore) {
  SmMatrix sm = SmMatrix::compress(paper_row());
  const SmMatrix original = sm;
  sm.set(0, 0, 1023);
  EXPECT_EQ(sm.get(0, 0), 1023u);
  for (std::size_t j = 1; j < 8; ++j) EXPECT_EQ(sm.get(0, j), paper_row()(0, j));
  sm.set(0, 0, 900);
  EXPECT_EQ(sm, original);
}

TEST(SmMatrix, SetRejectsWiderValue) {
  SmMatrix sm = SmMatrix::compress(paper_row());
  try {
    sm.set(0, 0, 1024);
    FAIL() << "1024 needs 11 bits";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWidthOverflow);
  }
  EXPECT_EQ(sm.get(0, 0), 900u);
}

TEST(SmMatrix, OutOfBounds) {
  const SmMatrix sm = SmMatrix::compress(paper_row());
  try {
    sm.get(1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfBounds);
  }
  EXPECT_THROW(sm.get(0, 8), Error);
}

TEST(SmMatrix, Widen) {
  const SmMatrix sm = SmMatrix::compress(paper_row());
  const SmMatrix wide = sm.widen(11);
  EXPECT_EQ(wide.width(), 11u);
  EXPECT_EQ(wide.decompress(), paper_row());
  EXPECT_EQ(sm.widen(10), sm);
  try {
    sm.widen(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNarrowingRequested);
  }
  SmMatrix widened = wide;
  widened.set(0, 0, 2047);
  EXPECT_EQ(widened.get(0, 0), 2047u);
}

TEST(SmMatrix, WidenTo64IsDenseLayout) {
  const DenseMatrix m{{0, 1, 1}, {1, 0, 1}};
  const SmMatrix wide = SmMatrix::compress(m).widen(64);
  ASSERT_EQ(wide.data().word_count(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(wide.data().words()[i], m.values()[i]);
}

TEST(SmMatrix, RejectsEmpty) { EXPECT_THROW(SmMatrix::compress(DenseMatrix(0, 3)), Error); }

TEST(SmMatrix, TransposedSharesStream) {
  const DenseMatrix m{{1, 2, 3}, {4, 5, 6}};
  const SmMatrix t = SmMatrix::compress(m).transposed();
  EXPECT_EQ(t.rows(), 3u);
  EXPECT_EQ(t.cols(), 2u);
  EXPECT_EQ(t.get(2, 1), 6u);
  EXPECT_EQ(t.get(0, 1), 4u);
}

TEST(SmMatrixProperty, LosslessAcrossWidths) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned bits = 1 + trial % 64;
    const DenseMatrix m = random_matrix(1 + rng() % 16, 1 + rng() % 16, bits, rng);
    const Order order = trial % 2 ? Order::kColMajor : Order::kRowMajor;
    const SmMatrix sm = SmMatrix::compress(m, order);
    ASSERT_EQ(sm.width(), bits);
    ASSERT_EQ(sm.data().size(), m.size() * bits);
    ASSERT_EQ(sm.data().word_count(), (m.size() * bits + 63) / 64);
    ASSERT_LE(sm.data().word_count(), m.size() * bits / 64 + 1);
    const DenseMatrix back = sm.decompress();
    ASSERT_EQ(back, m);
    ASSERT_EQ(SmMatrix::compress(back, order), sm);
  }
}

TEST(SmMatrixProperty, RandomAccessMatchesSource) {
  std::mt19937_64 rng(3);
  const DenseMatrix m = random_matrix(37, 53, 29, rng);
  const SmMatrix sm = SmMatrix::compress(m);
  for (std::size_t i = 0; i < 37; ++i)
    for (std::size_t j = 0; j < 53; ++j) ASSERT_EQ(sm.get(i, j), m(i, j));
}

}  // namespace
}  // namespace ccm
