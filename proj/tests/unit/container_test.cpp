#include "ccm/container.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ccm/text_matrix.hpp"
#include "test_util.hpp"

namespace ccm {
namespace {

using testing::paper_row;
using testing::random_matrix;

std::string saved(const CompressedMatrix& m) {
  std::ostringstream out;
  save(m, out);
  return out.str();
}

CompressedMatrix loaded(const std::string& bytes) {
  std::istringstream in(bytes);
  return load(in);
}

ErrorCode load_error(const std::string& bytes) {
  try {
    loaded(bytes);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "load succeeded";
  return ErrorCode::kInvalidArgument;
}

TEST(Container, HeaderBytes) {
  const std::string bytes = saved(CompressedMatrix::compress(paper_row(), Method::kSm));
  ASSERT_EQ(bytes.size(), kContainerHeaderSize + 16);
  EXPECT_EQ(bytes.substr(0, 4), "CCM1");
  EXPECT_EQ(bytes[4], 1);
  EXPECT_EQ(bytes[5], 1);
  EXPECT_EQ(bytes[6], 0);
  EXPECT_EQ(bytes[7], 1);    // rows, little-endian
  EXPECT_EQ(bytes[15], 8);   // cols
  EXPECT_EQ(bytes[23], 10);  // width
  EXPECT_EQ(bytes[24], 2);   // word count
  // first payload word, little-endian: low byte of 900 | 1023 << 10
  EXPECT_EQ(static_cast<unsigned char>(bytes[32]), 900 & 0xFF);
}

TEST(Container, VlbHeader) {
  const std::string bytes =
      saved(CompressedMatrix::compress(paper_row(), Method::kVlb, Order::kColMajor));
  EXPECT_EQ(bytes[5], 2);
  EXPECT_EQ(bytes[6], 1);
  EXPECT_EQ(bytes[23], 4);
  EXPECT_EQ(bytes[24], 2);
}

TEST(Container, RoundTripIsBitExact) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const DenseMatrix m = random_matrix(1 + rng() % 20, 1 + rng() % 20, 1 + trial % 64, rng);
    const Method method = trial % 2 ? Method::kVlb : Method::kSm;
    const Order order = trial % 4 < 2 ? Order::kRowMajor : Order::kColMajor;
    const auto c = CompressedMatrix::compress(m, method, order);
    const std::string bytes = saved(c);
    const auto back = loaded(bytes);
    ASSERT_EQ(back.repr(), c.repr());
    ASSERT_EQ(saved(back), bytes);
    ASSERT_EQ(back.decompress(), m);
  }
}

TEST(Container, RejectsBadMagic) {
  std::string bytes = saved(CompressedMatrix::compress(paper_row(), Method::kSm));
  bytes[0] = 'X';
  EXPECT_EQ(load_error(bytes), ErrorCode::kBadMagic);
  EXPECT_EQ(load_error(""), ErrorCode::kBadMagic);
  std::string version = saved(CompressedMatrix::compress(paper_row(), Method::kSm));
  version[4] = 2;
  EXPECT_EQ(load_error(version), ErrorCode::kBadMagic);
}

TEST(Container, RejectsTruncation) {
  const std::string bytes = saved(CompressedMatrix::compress(paper_row(), Method::kVlb));
  EXPECT_EQ(load_error(bytes.substr(0, bytes.size() - 1)), ErrorCode::kTruncatedPayload);
  EXPECT_EQ(load_error(bytes.substr(0, kContainerHeaderSize)), ErrorCode::kTruncatedPayload);
  EXPECT_EQ(load_error(bytes.substr(0, 10)), ErrorCode::kTruncatedPayload);
}

TEST(Container, RejectsInconsistentHeader) {
  const std::string good = saved(CompressedMatrix::compress(paper_row(), Method::kSm));
  std::string method = good;
  method[5] = 3;
  EXPECT_EQ(load_error(method), ErrorCode::kCorruptStream);
  std::string width = good;
  width[23] = 20;  // 160 bits need three words
  EXPECT_EQ(load_error(width), ErrorCode::kCorruptStream);
  EXPECT_EQ(load_error(good + std::string(1, '\0')), ErrorCode::kCorruptStream);
  std::string rows = good;
  rows[7] = 0;
  EXPECT_EQ(load_error(rows), ErrorCode::kCorruptStream);
}

TEST(Container, MissingFileIsIoError) {
  try {
    load_file("/nonexistent/dir/x.ccm");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
}

TEST(TextMatrix, ParsesSeparators) {
  std::istringstream in("1, 2 3\n\n4\t5,6\r\n");
  EXPECT_EQ(parse_text_matrix(in), (DenseMatrix{{1, 2, 3}, {4, 5, 6}}));
}

TEST(TextMatrix, CanonicalOutput) {
  std::ostringstream out;
  write_text_matrix(DenseMatrix{{900, 1023}, {0, 18446744073709551615ULL}}, out);
  EXPECT_EQ(out.str(), "900 1023\n0 18446744073709551615\n");
}

TEST(TextMatrix, ParseErrors) {
  for (const char* bad : {"", "\n\n", "1 2\n3\n", "1 -2\n", "1 x\n", "18446744073709551616\n",
                          "1.5\n"}) {
    std::istringstream in(bad);
    try {
      parse_text_matrix(in);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParseError) << bad;
    }
  }
}

}  // namespace
}  // namespace ccm
