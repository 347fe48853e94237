#include "ccm/bit_buffer.hpp"

#include <string>
#include <utility>

namespace ccm {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kFieldOverflow: return "FieldOverflow";
    case ErrorCode::kOutOfBounds: return "OutOfBounds";
    case ErrorCode::kWidthOverflow: return "WidthOverflow";
    case ErrorCode::kNarrowingRequested: return "NarrowingRequested";
    case ErrorCode::kCorruptStream: return "CorruptStream";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kTruncatedPayload: return "TruncatedPayload";
  }
  return "Unknown";
}

BitBuffer BitBuffer::from_words(std::vector<std::uint64_t> words, std::size_t bit_len) {
  if (words.size() != words_for(bit_len)) {
    throw Error(ErrorCode::kCorruptStream,
                "word count " + std::to_string(words.size()) + " does not hold " +
                    std::to_string(bit_len) + " bits");
  }
  if (bit_len % kWordBits != 0 && (words.back() & ~low_mask(bit_len % kWordBits)) != 0) {
    throw Error(ErrorCode::kCorruptStream, "non-zero padding bits");
  }
  BitBuffer buf;
  buf.words_ = std::move(words);
  buf.bit_len_ = bit_len;
  return buf;
}

void BitBuffer::write_field(std::size_t pos, unsigned width, std::uint64_t value) {
  if (width == 0 || width > kWordBits) {
    throw Error(ErrorCode::kInvalidArgument, "field width " + std::to_string(width));
  }
  if (width < kWordBits && (value >> width) != 0) {
    throw Error(ErrorCode::kFieldOverflow,
                std::to_string(value) + " does not fit in " + std::to_string(width) + " bits");
  }
  const std::size_t end = pos + width;
  if (words_.size() < words_for(end)) words_.resize(words_for(end), 0);

  const std::size_t word = pos / kWordBits;
  const unsigned offset = pos % kWordBits;
  const std::uint64_t mask = low_mask(width);

  words_[word] = (words_[word] & ~(mask << offset)) | (value << offset);
  if (offset + width > kWordBits) {
    // straddling field: the high segment continues in the next word
    const unsigned spill = kWordBits - offset;
    words_[word + 1] = (words_[word + 1] & ~(mask >> spill)) | (value >> spill);
  }
  if (end > bit_len_) bit_len_ = end;
}

std::uint64_t BitBuffer::read_field(std::size_t pos, unsigned width) const {
  if (width == 0 || width > kWordBits) {
    throw Error(ErrorCode::kInvalidArgument, "field width " + std::to_string(width));
  }
  if (pos + width > bit_len_) {
    throw Error(ErrorCode::kOutOfBounds, "read [" + std::to_string(pos) + ", " +
                                             std::to_string(pos + width) + ") past " +
                                             std::to_string(bit_len_) + " bits");
  }
  const std::size_t word = pos / kWordBits;
  const unsigned offset = pos % kWordBits;
  std::uint64_t value = words_[word] >> offset;
  if (offset + width > kWordBits) value |= words_[word + 1] << (kWordBits - offset);
  return value & low_mask(width);
}

}  // namespace ccm
