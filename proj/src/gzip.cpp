#include "bitscatter/gzip.hpp"

#include "bitscatter/deflate.hpp"
#include "bitscatter/errors.hpp"

namespace bitscatter {
namespace {

constexpr std::uint8_t kFlagText = 0x01;
constexpr std::uint8_t kFlagHeaderCrc = 0x02;
constexpr std::uint8_t kFlagExtra = 0x04;
constexpr std::uint8_t kFlagName = 0x08;
constexpr std::uint8_t kFlagComment = 0x10;

void put_le32(Bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_le32(ByteView in, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | in[at + static_cast<std::size_t>(i)];
  return v;
}

}  // namespace

Bytes lz_compress(ByteView data) {
  Bytes out = {0x1f, 0x8b, 0x08, 0x00, 0x00, 0x00, 0x00, 0x00, 0x02, 0xff};
  const Bytes body = deflate::compress(data);
  out.insert(out.end(), body.begin(), body.end());
  put_le32(out, deflate::crc32(data));
  put_le32(out, static_cast<std::uint32_t>(data.size()));
  return out;
}

Bytes lz_decompress(ByteView stream) {
  if (stream.size() < kGzipFramingBytes) throw DecodeError("gzip: stream too short");
  if (stream[0] != 0x1f || stream[1] != 0x8b) throw DecodeError("gzip: bad magic");
  if (stream[2] != 0x08) throw DecodeError("gzip: unsupported compression method");
  const std::uint8_t flags = stream[3];
  if (flags & ~(kFlagText | kFlagHeaderCrc | kFlagExtra | kFlagName | kFlagComment))
    throw DecodeError("gzip: reserved flag bits set");

  std::size_t pos = 10;
  auto need = [&](std::size_t n) {
    if (pos + n > stream.size()) throw DecodeError("gzip: truncated header");
  };
  if (flags & kFlagExtra) {
    need(2);
    const std::size_t xlen = stream[pos] | (static_cast<std::size_t>(stream[pos + 1]) << 8);
    pos += 2;
    need(xlen);
    pos += xlen;
  }
  for (std::uint8_t f : {kFlagName, kFlagComment}) {
    if (!(flags & f)) continue;
    do {
      need(1);
    } while (stream[pos++] != 0);
  }
  if (flags & kFlagHeaderCrc) {
    need(2);
    pos += 2;
  }

  std::size_t consumed = 0;
  Bytes out = deflate::decompress(stream.subspan(pos), &consumed);
  pos += consumed;
  if (pos + 8 > stream.size()) throw DecodeError("gzip: truncated trailer");
  if (get_le32(stream, pos) != deflate::crc32(out)) throw DecodeError("gzip: CRC mismatch");
  if (get_le32(stream, pos + 4) != static_cast<std::uint32_t>(out.size())) throw DecodeError("gzip: length mismatch");
  if (pos + 8 != stream.size()) throw DecodeError("gzip: trailing data after member");
  return out;
}

}  // namespace bitscatter
