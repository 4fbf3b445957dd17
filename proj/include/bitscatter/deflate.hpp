#pragma once

#include <cstddef>
#include <cstdint>

#include "bitscatter/sequences.hpp"

namespace bitscatter::deflate {

struct EncoderOptions {
  int max_chain = 4096;  // hash-chain probes per position
  bool lazy = true;      // one-step lazy match evaluation
};

/// Raw DEFLATE stream. Every block is emitted as whichever of stored, fixed
/// Huffman, or dynamic Huffman is smallest.
Bytes compress(ByteView data, const EncoderOptions& options = {});

/// Decodes one raw DEFLATE stream starting at data[0]. `consumed`, when
/// given, receives the number of input bytes the stream occupied (the final
/// partial byte included). Throws DecodeError on malformed input.
Bytes decompress(ByteView data, std::size_t* consumed = nullptr);

/// CRC-32 (ISO 3309 / ITU-T V.42), as used by the gzip trailer.
std::uint32_t crc32(ByteView data, std::uint32_t crc = 0) noexcept;

}  // namespace bitscatter::deflate
