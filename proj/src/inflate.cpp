#include <array>
#include <span>
#include <vector>

#include "bitscatter/deflate.hpp"
#include "bitscatter/errors.hpp"
#include "deflate_tables.hpp"

namespace bitscatter::deflate {
namespace {

using namespace tables;

class BitReader {
 public:
  explicit BitReader(ByteView in) : in_(in) {}

  std::uint32_t bits(int need) {
    std::uint64_t val = buffer_;
    while (count_ < need) {
      if (pos_ >= in_.size()) throw DecodeError("inflate: unexpected end of stream");
      val |= static_cast<std::uint64_t>(in_[pos_++]) << count_;
      count_ += 8;
    }
    buffer_ = static_cast<std::uint32_t>(val >> need);
    count_ -= need;
    return static_cast<std::uint32_t>(val & ((std::uint64_t{1} << need) - 1));
  }

  void align() {
    buffer_ = 0;
    count_ = 0;
  }

  std::uint8_t byte() {
    if (pos_ >= in_.size()) throw DecodeError("inflate: unexpected end of stream");
    return in_[pos_++];
  }

  std::size_t position() const { return pos_; }

 private:
  ByteView in_;
  std::size_t pos_ = 0;
  std::uint32_t buffer_ = 0;
  int count_ = 0;
};

// Canonical Huffman decoding table: codeword counts per length plus the
// symbols sorted by code.
struct Huffman {
  std::array<std::uint16_t, kMaxBits + 1> count{};
  std::vector<std::uint16_t> symbol;

  // Returns 0 for a complete code, > 0 for incomplete, < 0 for
  // over-subscribed.
  int build(std::span<const std::uint8_t> lengths) {
    count.fill(0);
    for (auto l : lengths) ++count[l];
    if (count[0] == lengths.size()) return 0;
    int left = 1;
    for (int len = 1; len <= kMaxBits; ++len) {
      left <<= 1;
      left -= count[static_cast<std::size_t>(len)];
      if (left < 0) return left;
    }
    std::array<std::uint16_t, kMaxBits + 1> offs{};
    for (int len = 1; len < kMaxBits; ++len)
      offs[static_cast<std::size_t>(len + 1)] =
          static_cast<std::uint16_t>(offs[static_cast<std::size_t>(len)] + count[static_cast<std::size_t>(len)]);
    symbol.assign(lengths.size(), 0);
    for (std::size_t s = 0; s < lengths.size(); ++s)
      if (lengths[s] != 0) symbol[offs[lengths[s]]++] = static_cast<std::uint16_t>(s);
    return left;
  }

  int decode(BitReader& in) const {
    int code = 0, first = 0, index = 0;
    for (int len = 1; len <= kMaxBits; ++len) {
      code |= static_cast<int>(in.bits(1));
      const int n = count[static_cast<std::size_t>(len)];
      if (code - n < first) return symbol[static_cast<std::size_t>(index + (code - first))];
      index += n;
      first += n;
      first <<= 1;
      code <<= 1;
    }
    throw DecodeError("inflate: invalid Huffman code");
  }
};

void inflate_codes(BitReader& in, Bytes& out, const Huffman& litlen, const Huffman& dist) {
  for (;;) {
    int sym = litlen.decode(in);
    if (sym < 256) {
      out.push_back(static_cast<std::uint8_t>(sym));
      continue;
    }
    if (sym == kEndOfBlock) return;
    sym -= kFirstLengthSymbol;
    if (sym >= kNumLengthCodes) throw DecodeError("inflate: invalid length symbol");
    const std::size_t len = kLengthBase[static_cast<std::size_t>(sym)] + in.bits(kLengthExtra[static_cast<std::size_t>(sym)]);
    const int dsym = dist.decode(in);
    if (dsym >= kNumDistanceCodes) throw DecodeError("inflate: invalid distance symbol");
    const std::size_t distance =
        kDistanceBase[static_cast<std::size_t>(dsym)] + in.bits(kDistanceExtra[static_cast<std::size_t>(dsym)]);
    if (distance > out.size()) throw DecodeError("inflate: distance too far back");
    const std::size_t from = out.size() - distance;
    for (std::size_t i = 0; i < len; ++i) out.push_back(out[from + i]);
  }
}

void inflate_stored(BitReader& in, Bytes& out) {
  in.align();
  const std::uint32_t lo = in.byte();
  const std::uint32_t len = lo | (static_cast<std::uint32_t>(in.byte()) << 8);
  const std::uint32_t nlo = in.byte();
  const std::uint32_t nlen = nlo | (static_cast<std::uint32_t>(in.byte()) << 8);
  if (len != (~nlen & 0xFFFF)) throw DecodeError("inflate: stored block length mismatch");
  for (std::uint32_t i = 0; i < len; ++i) out.push_back(in.byte());
}

const std::pair<Huffman, Huffman>& fixed_tables() {
  static const auto tables = [] {
    std::array<std::uint8_t, 288> lit{};
    for (std::size_t i = 0; i < 288; ++i) lit[i] = i < 144 ? 8 : i < 256 ? 9 : i < 280 ? 7 : 8;
    std::array<std::uint8_t, 30> dist{};
    dist.fill(5);
    std::pair<Huffman, Huffman> t;
    t.first.build(lit);
    t.second.build(dist);
    return t;
  }();
  return tables;
}

void inflate_dynamic(BitReader& in, Bytes& out) {
  const std::size_t nlen = in.bits(5) + 257;
  const std::size_t ndist = in.bits(5) + 1;
  const std::size_t ncode = in.bits(4) + 4;
  if (nlen > kLitLenAlphabet || ndist > kNumDistanceCodes) throw DecodeError("inflate: bad code counts");

  std::array<std::uint8_t, kNumCodeLengthSymbols> cl_lengths{};
  for (std::size_t i = 0; i < ncode; ++i) cl_lengths[kCodeLengthOrder[i]] = static_cast<std::uint8_t>(in.bits(3));
  Huffman cl;
  if (cl.build(cl_lengths) != 0) throw DecodeError("inflate: incomplete code-length code");

  std::vector<std::uint8_t> lengths(nlen + ndist, 0);
  std::size_t index = 0;
  while (index < nlen + ndist) {
    const int sym = cl.decode(in);
    if (sym < 16) {
      lengths[index++] = static_cast<std::uint8_t>(sym);
      continue;
    }
    std::uint8_t value = 0;
    std::size_t repeat;
    if (sym == 16) {
      if (index == 0) throw DecodeError("inflate: repeat with no previous length");
      value = lengths[index - 1];
      repeat = 3 + in.bits(2);
    } else if (sym == 17) {
      repeat = 3 + in.bits(3);
    } else {
      repeat = 11 + in.bits(7);
    }
    if (index + repeat > nlen + ndist) throw DecodeError("inflate: too many code lengths");
    while (repeat-- > 0) lengths[index++] = value;
  }
  if (lengths[kEndOfBlock] == 0) throw DecodeError("inflate: missing end-of-block code");

  const std::span<const std::uint8_t> all(lengths);
  Huffman litlen, dist;
  int err = litlen.build(all.first(nlen));
  if (err < 0 || (err > 0 && nlen - litlen.count[0] != 1)) throw DecodeError("inflate: bad literal/length code");
  err = dist.build(all.subspan(nlen, ndist));
  if (err < 0 || (err > 0 && ndist - dist.count[0] != 1)) throw DecodeError("inflate: bad distance code");
  inflate_codes(in, out, litlen, dist);
}

}  // namespace

Bytes decompress(ByteView data, std::size_t* consumed) {
  BitReader in(data);
  Bytes out;
  bool last;
  do {
    last = in.bits(1) == 1;
    switch (in.bits(2)) {
      case 0:
        inflate_stored(in, out);
        break;
      case 1:
        inflate_codes(in, out, fixed_tables().first, fixed_tables().second);
        break;
      case 2:
        inflate_dynamic(in, out);
        break;
      default:
        throw DecodeError("inflate: invalid block type");
    }
  } while (!last);
  if (consumed != nullptr) *consumed = in.position();
  return out;
}

}  // namespace bitscatter::deflate
