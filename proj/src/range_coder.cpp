#include "bitscatter/range_coder.hpp"

#include "bitscatter/errors.hpp"

namespace bitscatter {
namespace {
constexpr std::uint32_t kTop = 1u << 24;
}

void RangeEncoder::encode(std::uint32_t start, std::uint32_t size, std::uint32_t total) {
  range_ /= total;
  low_ += static_cast<std::uint64_t>(start) * range_;
  range_ *= size;
  while (range_ < kTop) {
    range_ <<= 8;
    shift_low();
  }
}

void RangeEncoder::shift_low() {
  if (static_cast<std::uint32_t>(low_) < 0xFF000000u || (low_ >> 32) != 0) {
    const auto carry = static_cast<std::uint8_t>(low_ >> 32);
    std::uint8_t temp = cache_;
    do {
      const auto byte = static_cast<std::uint8_t>(temp + carry);
      if (skipped_lead_) {
        out_.push_back(byte);
      } else {
        skipped_lead_ = true;  // always zero: the code value lies in [0, 1)
      }
      temp = 0xFF;
    } while (--cache_size_ != 0);
    cache_ = static_cast<std::uint8_t>(low_ >> 24);
  }
  ++cache_size_;
  low_ = (low_ & 0x00FFFFFFu) << 8;
}

Bytes RangeEncoder::finish() {
  for (int i = 0; i < 5; ++i) shift_low();
  return std::move(out_);
}

RangeDecoder::RangeDecoder(ByteView in) : in_(in) {
  for (int i = 0; i < 4; ++i) code_ = (code_ << 8) | next_byte();
}

std::uint8_t RangeDecoder::next_byte() {
  if (pos_ >= in_.size()) throw DecodeError("range decoder: truncated stream");
  return in_[pos_++];
}

std::uint32_t RangeDecoder::threshold(std::uint32_t total) {
  range_ /= total;
  const std::uint32_t value = code_ / range_;
  if (value >= total) throw DecodeError("range decoder: corrupt stream");
  return value;
}

void RangeDecoder::decode(std::uint32_t start, std::uint32_t size) {
  code_ -= start * range_;
  range_ *= size;
  while (range_ < kTop) {
    code_ = (code_ << 8) | next_byte();
    range_ <<= 8;
  }
}

}  // namespace bitscatter
