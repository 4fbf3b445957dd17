#pragma once

#include "bitscatter/sequences.hpp"

namespace bitscatter {

struct PpmOptions {
  int order = 4;  // maximum context length in bytes, 0..7
};

/// Prediction by partial matching over the byte alphabet with escape
/// method C and symbol exclusion, range-coded.
///
/// Stream layout: 4-byte big-endian length of the original data, then the
/// range-coded payload (empty when the length is 0). No checksum.
Bytes ppm_compress(ByteView data, const PpmOptions& options = {});

/// Throws DecodeError on a truncated or corrupt stream, or trailing bytes.
Bytes ppm_decompress(ByteView stream, const PpmOptions& options = {});

}  // namespace bitscatter
