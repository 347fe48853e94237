#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "ccm/compressed_matrix.hpp"

namespace ccm {

// On-disk layout, all integers little-endian:
//
//   offset  size  field
//        0     4  magic "CCM1"
//        4     1  version (1)
//        5     1  method (1 = SM, 2 = VLB)
//        6     1  order (0 = row-major, 1 = column-major)
//        7     8  rows
//       15     8  cols
//       23     1  param (SM chunk width, or VLB prefix width k)
//       24     8  word_count = ceil(bit_len / 64)
//       32     8 * word_count payload words
//
// VLB checkpoints are not stored; they are rebuilt while validating the
// stream on load.

inline constexpr char kContainerMagic[4] = {'C', 'C', 'M', '1'};
inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::size_t kContainerHeaderSize = 32;

struct ContainerHeader {
  Method method = Method::kSm;
  Order order = Order::kRowMajor;
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::uint8_t param = 0;
  std::uint64_t word_count = 0;
};

ContainerHeader header_of(const CompressedMatrix& m);

void save(const CompressedMatrix& m, std::ostream& out);

/// Throws kBadMagic (magic or version mismatch), kTruncatedPayload (header
/// or payload shorter than declared) or kCorruptStream (inconsistent fields,
/// invalid stream, trailing bytes).
CompressedMatrix load(std::istream& in, std::size_t vlb_stride = VlbMatrix::kDefaultStride);

/// File variants; these add kIoError for open/write failures.
void save_file(const CompressedMatrix& m, const std::filesystem::path& path);
CompressedMatrix load_file(const std::filesystem::path& path,
                           std::size_t vlb_stride = VlbMatrix::kDefaultStride);

}  // namespace ccm
