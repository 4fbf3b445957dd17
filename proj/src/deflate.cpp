#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>
#include <span>
#include <vector>

#include "bitscatter/deflate.hpp"
#include "deflate_tables.hpp"

namespace bitscatter::deflate {
namespace {

using namespace tables;

constexpr std::size_t kWindowSize = 32768;
constexpr std::size_t kMinMatch = 3;
constexpr std::size_t kMaxMatch = 258;
constexpr std::size_t kTooFar = 4096;  // length-3 matches farther than this rarely pay
constexpr int kHashBits = 15;
constexpr std::size_t kTokensPerBlock = 16384;
constexpr std::size_t kMaxStoredChunk = 65535;

struct Token {
  std::uint16_t length;  // 0 for a literal
  std::uint16_t value;   // literal byte or match distance
};

struct Match {
  std::size_t length = 0;
  std::size_t distance = 0;
};

class BitWriter {
 public:
  void put(std::uint32_t bits, int count) {
    acc_ |= static_cast<std::uint64_t>(bits) << fill_;
    fill_ += count;
    while (fill_ >= 8) {
      out_.push_back(static_cast<std::uint8_t>(acc_));
      acc_ >>= 8;
      fill_ -= 8;
    }
  }

  void align() {
    if (fill_ > 0) {
      out_.push_back(static_cast<std::uint8_t>(acc_));
      acc_ = 0;
      fill_ = 0;
    }
  }

  std::size_t bit_position() const { return out_.size() * 8 + static_cast<std::size_t>(fill_); }

  void append_bytes(ByteView bytes) { out_.insert(out_.end(), bytes.begin(), bytes.end()); }

  Bytes take() {
    align();
    return std::move(out_);
  }

 private:
  Bytes out_;
  std::uint64_t acc_ = 0;
  int fill_ = 0;
};

int length_code(std::size_t length) {
  int code = kNumLengthCodes - 1;
  while (kLengthBase[static_cast<std::size_t>(code)] > length) --code;
  return code;
}

int distance_code(std::size_t distance) {
  int code = kNumDistanceCodes - 1;
  while (kDistanceBase[static_cast<std::size_t>(code)] > distance) --code;
  return code;
}

// Length-limited Huffman code lengths by package-merge.
std::vector<std::uint8_t> limited_code_lengths(std::span<const std::uint32_t> freqs, int max_len) {
  std::vector<std::uint8_t> lengths(freqs.size(), 0);
  std::vector<int> symbols;
  for (std::size_t i = 0; i < freqs.size(); ++i)
    if (freqs[i] > 0) symbols.push_back(static_cast<int>(i));
  if (symbols.empty()) return lengths;
  if (symbols.size() == 1) {
    // A lone symbol still gets a complete two-codeword code.
    lengths[static_cast<std::size_t>(symbols[0])] = 1;
    lengths[symbols[0] == 0 ? 1 : 0] = 1;
    return lengths;
  }
  std::stable_sort(symbols.begin(), symbols.end(), [&](int a, int b) {
    return freqs[static_cast<std::size_t>(a)] < freqs[static_cast<std::size_t>(b)];
  });

  struct Node {
    std::uint64_t weight;
    int leaf;  // symbol, or -1 for a package
    int left;
    int right;
  };
  std::vector<Node> pool;
  std::vector<int> leaves;
  for (int s : symbols) {
    leaves.push_back(static_cast<int>(pool.size()));
    pool.push_back({freqs[static_cast<std::size_t>(s)], s, -1, -1});
  }

  std::vector<int> list = leaves;
  for (int level = 1; level < max_len; ++level) {
    std::vector<int> packages;
    for (std::size_t i = 0; i + 1 < list.size(); i += 2) {
      packages.push_back(static_cast<int>(pool.size()));
      pool.push_back({pool[static_cast<std::size_t>(list[i])].weight + pool[static_cast<std::size_t>(list[i + 1])].weight,
                      -1, list[i], list[i + 1]});
    }
    std::vector<int> merged;
    merged.reserve(leaves.size() + packages.size());
    std::merge(leaves.begin(), leaves.end(), packages.begin(), packages.end(), std::back_inserter(merged),
               [&](int a, int b) { return pool[static_cast<std::size_t>(a)].weight < pool[static_cast<std::size_t>(b)].weight; });
    list = std::move(merged);
  }

  const std::size_t take = 2 * symbols.size() - 2;
  std::vector<int> stack(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(take));
  while (!stack.empty()) {
    const Node& node = pool[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    if (node.leaf >= 0) {
      ++lengths[static_cast<std::size_t>(node.leaf)];
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
  return lengths;
}

std::uint32_t reverse_bits(std::uint32_t code, int length) {
  std::uint32_t r = 0;
  for (int i = 0; i < length; ++i) {
    r = (r << 1) | (code & 1);
    code >>= 1;
  }
  return r;
}

// Canonical codes, bit-reversed for LSB-first emission.
std::vector<std::uint32_t> canonical_codes(std::span<const std::uint8_t> lengths) {
  std::array<std::uint32_t, kMaxBits + 2> count{};
  for (auto l : lengths) ++count[l];
  count[0] = 0;
  std::array<std::uint32_t, kMaxBits + 2> next{};
  std::uint32_t code = 0;
  for (int bits = 1; bits <= kMaxBits; ++bits) {
    code = (code + count[static_cast<std::size_t>(bits - 1)]) << 1;
    next[static_cast<std::size_t>(bits)] = code;
  }
  std::vector<std::uint32_t> codes(lengths.size(), 0);
  for (std::size_t s = 0; s < lengths.size(); ++s)
    if (lengths[s] != 0) codes[s] = reverse_bits(next[lengths[s]]++, lengths[s]);
  return codes;
}

struct CodeLengthItem {
  std::uint8_t symbol;
  std::uint8_t extra_bits;
  std::uint8_t extra_value;
};

// Run-length encodes a code-length sequence with symbols 16/17/18.
std::vector<CodeLengthItem> encode_code_lengths(std::span<const std::uint8_t> lengths) {
  std::vector<CodeLengthItem> items;
  std::size_t i = 0;
  while (i < lengths.size()) {
    const std::uint8_t value = lengths[i];
    std::size_t run = 1;
    while (i + run < lengths.size() && lengths[i + run] == value) ++run;
    std::size_t left = run;
    if (value == 0) {
      while (left >= 11) {
        const std::size_t n = std::min<std::size_t>(left, 138);
        items.push_back({18, 7, static_cast<std::uint8_t>(n - 11)});
        left -= n;
      }
      if (left >= 3) {
        items.push_back({17, 3, static_cast<std::uint8_t>(left - 3)});
        left = 0;
      }
    } else {
      items.push_back({value, 0, 0});
      --left;
      while (left >= 3) {
        const std::size_t n = std::min<std::size_t>(left, 6);
        items.push_back({16, 2, static_cast<std::uint8_t>(n - 3)});
        left -= n;
      }
    }
    for (; left > 0; --left) items.push_back({value, 0, 0});
    i += run;
  }
  return items;
}

struct FixedCode {
  std::vector<std::uint8_t> litlen_lengths;
  std::vector<std::uint8_t> dist_lengths;
  std::vector<std::uint32_t> litlen_codes;
  std::vector<std::uint32_t> dist_codes;
};

const FixedCode& fixed_code() {
  static const FixedCode code = [] {
    FixedCode c;
    c.litlen_lengths.assign(288, 8);
    std::fill(c.litlen_lengths.begin() + 144, c.litlen_lengths.begin() + 256, 9);
    std::fill(c.litlen_lengths.begin() + 256, c.litlen_lengths.begin() + 280, 7);
    c.dist_lengths.assign(32, 5);
    c.litlen_codes = canonical_codes(c.litlen_lengths);
    c.dist_codes = canonical_codes(c.dist_lengths);
    return c;
  }();
  return code;
}

std::size_t data_cost(std::span<const Token> tokens, std::span<const std::uint8_t> litlen,
                      std::span<const std::uint8_t> dist) {
  std::size_t bits = litlen[kEndOfBlock];
  for (const Token& t : tokens) {
    if (t.length == 0) {
      bits += litlen[t.value];
    } else {
      const auto lc = static_cast<std::size_t>(length_code(t.length));
      const auto dc = static_cast<std::size_t>(distance_code(t.value));
      bits += litlen[kFirstLengthSymbol + lc] + kLengthExtra[lc] + dist[dc] + kDistanceExtra[dc];
    }
  }
  return bits;
}

void write_tokens(BitWriter& out, std::span<const Token> tokens, std::span<const std::uint8_t> litlen_len,
                  std::span<const std::uint32_t> litlen_code, std::span<const std::uint8_t> dist_len,
                  std::span<const std::uint32_t> dist_code) {
  for (const Token& t : tokens) {
    if (t.length == 0) {
      out.put(litlen_code[t.value], litlen_len[t.value]);
      continue;
    }
    const auto lc = static_cast<std::size_t>(length_code(t.length));
    out.put(litlen_code[kFirstLengthSymbol + lc], litlen_len[kFirstLengthSymbol + lc]);
    out.put(t.length - kLengthBase[lc], kLengthExtra[lc]);
    const auto dc = static_cast<std::size_t>(distance_code(t.value));
    out.put(dist_code[dc], dist_len[dc]);
    out.put(t.value - kDistanceBase[dc], kDistanceExtra[dc]);
  }
  out.put(litlen_code[kEndOfBlock], litlen_len[kEndOfBlock]);
}

std::size_t stored_cost(std::size_t bit_position, std::size_t raw_size) {
  std::size_t bits = 0;
  std::size_t pos = bit_position;
  std::size_t left = raw_size;
  do {
    const std::size_t chunk = std::min(left, kMaxStoredChunk);
    const std::size_t header_end = pos + 3;
    const std::size_t aligned = (header_end + 7) / 8 * 8;
    const std::size_t block = (aligned - pos) + 32 + 8 * chunk;
    bits += block;
    pos += block;
    left -= chunk;
  } while (left > 0);
  return bits;
}

void write_stored(BitWriter& out, ByteView raw, bool final_block) {
  std::size_t offset = 0;
  do {
    const std::size_t chunk = std::min(raw.size() - offset, kMaxStoredChunk);
    const bool last = offset + chunk == raw.size();
    out.put((final_block && last) ? 1u : 0u, 1);
    out.put(0, 2);
    out.align();
    out.put(static_cast<std::uint32_t>(chunk), 16);
    out.put(static_cast<std::uint32_t>(~chunk & 0xFFFF), 16);
    out.append_bytes(raw.subspan(offset, chunk));
    offset += chunk;
  } while (offset < raw.size());
}

void write_block(BitWriter& out, std::span<const Token> tokens, ByteView raw, bool final_block) {
  std::array<std::uint32_t, kLitLenAlphabet> lit_freq{};
  std::array<std::uint32_t, kNumDistanceCodes> dist_freq{};
  lit_freq[kEndOfBlock] = 1;
  for (const Token& t : tokens) {
    if (t.length == 0) {
      ++lit_freq[t.value];
    } else {
      ++lit_freq[kFirstLengthSymbol + static_cast<std::size_t>(length_code(t.length))];
      ++dist_freq[static_cast<std::size_t>(distance_code(t.value))];
    }
  }

  const auto lit_len = limited_code_lengths(lit_freq, kMaxBits);
  const auto dist_len = limited_code_lengths(dist_freq, kMaxBits);

  std::size_t hlit = kLitLenAlphabet;
  while (hlit > 257 && lit_len[hlit - 1] == 0) --hlit;
  std::size_t hdist = kNumDistanceCodes;
  while (hdist > 1 && dist_len[hdist - 1] == 0) --hdist;

  std::vector<std::uint8_t> all_lengths(lit_len.begin(), lit_len.begin() + static_cast<std::ptrdiff_t>(hlit));
  all_lengths.insert(all_lengths.end(), dist_len.begin(), dist_len.begin() + static_cast<std::ptrdiff_t>(hdist));
  const auto cl_items = encode_code_lengths(all_lengths);
  std::array<std::uint32_t, kNumCodeLengthSymbols> cl_freq{};
  for (const auto& item : cl_items) ++cl_freq[item.symbol];
  const auto cl_len = limited_code_lengths(cl_freq, kMaxCodeLengthBits);
  std::size_t hclen = kNumCodeLengthSymbols;
  while (hclen > 4 && cl_len[kCodeLengthOrder[hclen - 1]] == 0) --hclen;

  std::size_t dynamic_bits = 3 + 5 + 5 + 4 + 3 * hclen + data_cost(tokens, lit_len, dist_len);
  for (const auto& item : cl_items) dynamic_bits += cl_len[item.symbol] + item.extra_bits;

  const FixedCode& fixed = fixed_code();
  const std::size_t fixed_bits = 3 + data_cost(tokens, fixed.litlen_lengths, fixed.dist_lengths);
  const std::size_t stored_bits = stored_cost(out.bit_position(), raw.size());

  const std::uint32_t final_bit = final_block ? 1u : 0u;
  if (stored_bits < fixed_bits && stored_bits < dynamic_bits) {
    write_stored(out, raw, final_block);
  } else if (fixed_bits <= dynamic_bits) {
    out.put(final_bit, 1);
    out.put(1, 2);
    write_tokens(out, tokens, fixed.litlen_lengths, fixed.litlen_codes, fixed.dist_lengths, fixed.dist_codes);
  } else {
    out.put(final_bit, 1);
    out.put(2, 2);
    out.put(static_cast<std::uint32_t>(hlit - 257), 5);
    out.put(static_cast<std::uint32_t>(hdist - 1), 5);
    out.put(static_cast<std::uint32_t>(hclen - 4), 4);
    for (std::size_t i = 0; i < hclen; ++i) out.put(cl_len[kCodeLengthOrder[i]], 3);
    const auto cl_code = canonical_codes(cl_len);
    for (const auto& item : cl_items) {
      out.put(cl_code[item.symbol], cl_len[item.symbol]);
      out.put(item.extra_value, item.extra_bits);
    }
    write_tokens(out, tokens, lit_len, canonical_codes(lit_len), dist_len, canonical_codes(dist_len));
  }
}

class MatchFinder {
 public:
  MatchFinder(ByteView data, int max_chain)
      : data_(data), max_chain_(max_chain), head_(std::size_t{1} << kHashBits, -1), prev_(data.size(), -1) {}

  Match find(std::size_t pos) {
    if (pos + kMinMatch > data_.size()) return {};
    insert_before(pos);
    const std::size_t limit = std::min(kMaxMatch, data_.size() - pos);
    Match best;
    std::size_t best_len = kMinMatch - 1;
    int chain = max_chain_;
    for (std::int64_t cand = head_[hash(pos)]; cand >= 0 && chain-- > 0; cand = prev_[static_cast<std::size_t>(cand)]) {
      const auto c = static_cast<std::size_t>(cand);
      const std::size_t distance = pos - c;
      if (distance > kWindowSize) break;
      if (data_[c + best_len] != data_[pos + best_len] || data_[c] != data_[pos]) continue;
      std::size_t len = 0;
      while (len < limit && data_[c + len] == data_[pos + len]) ++len;
      if (len > best_len) {
        best_len = len;
        best = {len, distance};
        if (len == limit) break;
      }
    }
    if (best.length == kMinMatch && best.distance > kTooFar) return {};
    return best;
  }

 private:
  std::size_t hash(std::size_t p) const {
    return ((static_cast<std::size_t>(data_[p]) << 10) ^ (static_cast<std::size_t>(data_[p + 1]) << 5) ^
            data_[p + 2]) & ((std::size_t{1} << kHashBits) - 1);
  }

  void insert_before(std::size_t end) {
    for (; inserted_ < end; ++inserted_) {
      if (inserted_ + kMinMatch > data_.size()) continue;
      const std::size_t h = hash(inserted_);
      prev_[inserted_] = head_[h];
      head_[h] = static_cast<std::int64_t>(inserted_);
    }
  }

  ByteView data_;
  int max_chain_;
  std::vector<std::int64_t> head_;
  std::vector<std::int64_t> prev_;
  std::size_t inserted_ = 0;
};

std::vector<Token> tokenize(ByteView data, const EncoderOptions& options) {
  std::vector<Token> tokens;
  MatchFinder finder(data, options.max_chain);
  std::size_t pos = 0;
  Match lookahead;
  bool have_lookahead = false;
  while (pos < data.size()) {
    Match m = have_lookahead ? lookahead : finder.find(pos);
    have_lookahead = false;
    if (options.lazy && m.length >= kMinMatch && m.length < kMaxMatch && pos + 1 < data.size()) {
      lookahead = finder.find(pos + 1);
      if (lookahead.length > m.length) {
        tokens.push_back({0, data[pos]});
        ++pos;
        have_lookahead = true;
        continue;
      }
    }
    if (m.length >= kMinMatch) {
      tokens.push_back({static_cast<std::uint16_t>(m.length), static_cast<std::uint16_t>(m.distance)});
      pos += m.length;
    } else {
      tokens.push_back({0, data[pos]});
      ++pos;
    }
  }
  return tokens;
}

}  // namespace

Bytes compress(ByteView data, const EncoderOptions& options) {
  const auto tokens = tokenize(data, options);
  BitWriter out;
  if (tokens.empty()) {
    write_block(out, {}, {}, true);
    return out.take();
  }
  std::size_t byte_pos = 0;
  for (std::size_t begin = 0; begin < tokens.size(); begin += kTokensPerBlock) {
    const std::size_t end = std::min(tokens.size(), begin + kTokensPerBlock);
    const std::span<const Token> block(tokens.data() + begin, end - begin);
    std::size_t block_bytes = 0;
    for (const Token& t : block) block_bytes += t.length == 0 ? 1 : t.length;
    write_block(out, block, data.subspan(byte_pos, block_bytes), end == tokens.size());
    byte_pos += block_bytes;
  }
  return out.take();
}

}  // namespace bitscatter::deflate
