#pragma once

#include <cstddef>

#include "bitscatter/sequences.hpp"

namespace bitscatter {

/// Header (10 bytes) plus CRC-32 and size trailer (8 bytes).
inline constexpr std::size_t kGzipFramingBytes = 18;

/// Single-member gzip file (RFC 1952) around a raw DEFLATE stream. The header
/// is fixed: no name, mtime 0, OS "unknown", so output is reproducible.
Bytes lz_compress(ByteView data);

/// Decodes a single-member gzip file, verifying CRC-32 and length. Optional
/// header fields are skipped. Throws DecodeError on malformed input or
/// trailing bytes.
Bytes lz_decompress(ByteView stream);

}  // namespace bitscatter
