#include "ccm/container.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace ccm {

namespace {

void put_u64(std::uint8_t* p, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

std::uint64_t get_u64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{p[i]} << (8 * i);
  return v;
}

// Reads exactly n bytes; false if the stream ends first.
bool read_exact(std::istream& in, std::uint8_t* dst, std::size_t n) {
  in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
  return static_cast<std::size_t>(in.gcount()) == n;
}

}  // namespace

ContainerHeader header_of(const CompressedMatrix& m) {
  ContainerHeader h;
  h.method = m.method();
  h.order = m.order();
  h.rows = m.rows();
  h.cols = m.cols();
  h.param = static_cast<std::uint8_t>(m.is_sm() ? m.sm().width() : m.vlb().k());
  h.word_count = m.data().word_count();
  return h;
}

void save(const CompressedMatrix& m, std::ostream& out) {
  const ContainerHeader h = header_of(m);
  std::array<std::uint8_t, kContainerHeaderSize> hdr{};
  std::memcpy(hdr.data(), kContainerMagic, 4);
  hdr[4] = kContainerVersion;
  hdr[5] = static_cast<std::uint8_t>(h.method);
  hdr[6] = static_cast<std::uint8_t>(h.order);
  put_u64(&hdr[7], h.rows);
  put_u64(&hdr[15], h.cols);
  hdr[23] = h.param;
  put_u64(&hdr[24], h.word_count);
  out.write(reinterpret_cast<const char*>(hdr.data()), hdr.size());

  std::array<std::uint8_t, 8> word{};
  for (std::uint64_t w : m.data().words()) {
    put_u64(word.data(), w);
    out.write(reinterpret_cast<const char*>(word.data()), word.size());
  }
  if (!out) throw Error(ErrorCode::kIoError, "write failed");
}

CompressedMatrix load(std::istream& in, std::size_t vlb_stride) {
  std::array<std::uint8_t, kContainerHeaderSize> hdr{};
  in.read(reinterpret_cast<char*>(hdr.data()), 4);
  if (in.gcount() != 4 || std::memcmp(hdr.data(), kContainerMagic, 4) != 0) {
    throw Error(ErrorCode::kBadMagic, "not a CCM1 container");
  }
  if (!read_exact(in, hdr.data() + 4, kContainerHeaderSize - 4)) {
    throw Error(ErrorCode::kTruncatedPayload, "header ends early");
  }
  if (hdr[4] != kContainerVersion) {
    throw Error(ErrorCode::kBadMagic, "unsupported version " + std::to_string(hdr[4]));
  }

  ContainerHeader h;
  if (hdr[5] != 1 && hdr[5] != 2) {
    throw Error(ErrorCode::kCorruptStream, "unknown method " + std::to_string(hdr[5]));
  }
  if (hdr[6] > 1) throw Error(ErrorCode::kCorruptStream, "unknown order " + std::to_string(hdr[6]));
  h.method = static_cast<Method>(hdr[5]);
  h.order = static_cast<Order>(hdr[6]);
  h.rows = get_u64(&hdr[7]);
  h.cols = get_u64(&hdr[15]);
  h.param = hdr[23];
  h.word_count = get_u64(&hdr[24]);

  if (h.rows == 0 || h.cols == 0 || h.rows > (std::uint64_t{1} << 32) ||
      h.cols > (std::uint64_t{1} << 32) || h.rows * h.cols > (std::uint64_t{1} << 40)) {
    throw Error(ErrorCode::kCorruptStream, "implausible dimensions");
  }
  // Every element costs at least one bit (SM) or two (VLB), at most 64 + 7.
  const std::uint64_t max_words = BitBuffer::words_for(h.rows * h.cols * (kWordBits + 7));
  if (h.word_count > max_words) throw Error(ErrorCode::kCorruptStream, "implausible word count");

  std::vector<std::uint64_t> words;
  std::array<std::uint8_t, 8> word{};
  for (std::uint64_t i = 0; i < h.word_count; ++i) {
    if (!read_exact(in, word.data(), word.size())) {
      throw Error(ErrorCode::kTruncatedPayload, "payload holds " + std::to_string(i) + " of " +
                                                    std::to_string(h.word_count) + " words");
    }
    words.push_back(get_u64(word.data()));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw Error(ErrorCode::kCorruptStream, "trailing bytes after payload");
  }

  if (h.method == Method::kSm) {
    const std::size_t bits = h.rows * h.cols * h.param;
    return SmMatrix::from_parts(h.rows, h.cols, h.param, h.order,
                                BitBuffer::from_words(std::move(words), bits));
  }
  return VlbMatrix::from_stream(h.rows, h.cols, h.param, h.order, std::move(words), vlb_stride);
}

void save_file(const CompressedMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path.string() + " for writing");
  save(m, out);
  out.close();
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

CompressedMatrix load_file(const std::filesystem::path& path, std::size_t vlb_stride) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return load(in, vlb_stride);
}

}  // namespace ccm
