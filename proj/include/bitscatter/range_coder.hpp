#pragma once

#include <cstdint>

#include "bitscatter/sequences.hpp"

namespace bitscatter {

/// Carry-propagating range coder over cumulative frequencies (32-bit range,
/// byte-wise output). Totals must not exceed kMaxTotal.
///
/// The leading byte of a classic stream of this kind is always zero and is
/// not written. finish() flushes all four bytes of `low`, so a decoder reads
/// exactly the bytes the encoder produced and a truncated stream is always
/// detected.
class RangeEncoder {
 public:
  static constexpr std::uint32_t kMaxTotal = 1u << 16;

  void encode(std::uint32_t start, std::uint32_t size, std::uint32_t total);
  Bytes finish();

 private:
  void shift_low();

  Bytes out_;
  std::uint64_t low_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
  std::uint8_t cache_ = 0;
  std::uint64_t cache_size_ = 1;
  bool skipped_lead_ = false;
};

class RangeDecoder {
 public:
  /// Throws DecodeError if fewer than four bytes are available.
  explicit RangeDecoder(ByteView in);

  /// Scaled cumulative frequency of the next symbol; must be followed by
  /// decode(). Throws DecodeError if the stream is inconsistent with total.
  std::uint32_t threshold(std::uint32_t total);
  void decode(std::uint32_t start, std::uint32_t size);

  /// True once every input byte has been consumed.
  bool exhausted() const noexcept { return pos_ == in_.size(); }

 private:
  std::uint8_t next_byte();

  ByteView in_;
  std::size_t pos_ = 0;
  std::uint32_t range_ = 0xFFFFFFFFu;
  std::uint32_t code_ = 0;
};

}  // namespace bitscatter
