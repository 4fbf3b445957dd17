#include "bitscatter/ppm.hpp"

#include <algorithm>
#include <bitset>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bitscatter/errors.hpp"
#include "bitscatter/range_coder.hpp"

namespace bitscatter {
namespace {

constexpr std::uint32_t kRescaleAt = RangeEncoder::kMaxTotal - 512;

struct SymbolCount {
  std::uint8_t symbol;
  std::uint32_t count;
};

struct Context {
  std::vector<SymbolCount> entries;
  std::uint32_t total = 0;
};

// Frequencies of a context after removing excluded symbols.
struct Visible {
  std::uint32_t total = 0;
  std::uint32_t distinct = 0;
};

class Model {
 public:
  explicit Model(int order) : order_(order) {
    if (order < 0 || order > 7) throw std::domain_error("PPM order must lie in [0, 7]");
  }

  int max_order(std::size_t position) const {
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(order_), position));
  }

  Context* find(int order) {
    auto it = contexts_.find(key(order));
    return it == contexts_.end() ? nullptr : &it->second;
  }

  void update(std::uint8_t symbol, std::size_t position) {
    for (int o = 0; o <= max_order(position); ++o) {
      Context& c = contexts_[key(o)];
      auto it = std::find_if(c.entries.begin(), c.entries.end(),
                             [&](const SymbolCount& e) { return e.symbol == symbol; });
      if (it == c.entries.end()) {
        c.entries.push_back({symbol, 1});
      } else {
        ++it->count;
      }
      ++c.total;
      if (c.total + c.entries.size() > kRescaleAt) {
        c.total = 0;
        for (auto& e : c.entries) {
          e.count = (e.count + 1) / 2;
          c.total += e.count;
        }
      }
    }
    history_ = (history_ << 8) | symbol;
  }

 private:
  std::uint64_t key(int order) const {
    const std::uint64_t mask = order == 0 ? 0 : (~std::uint64_t{0} >> (64 - 8 * order));
    return (static_cast<std::uint64_t>(order) << 56) | (history_ & mask);
  }

  int order_;
  std::uint64_t history_ = 0;
  std::unordered_map<std::uint64_t, Context> contexts_;
};

Visible visible(const Context& c, const std::bitset<256>& excluded) {
  Visible v;
  for (const auto& e : c.entries) {
    if (excluded[e.symbol]) continue;
    v.total += e.count;
    ++v.distinct;
  }
  return v;
}

void exclude_all(const Context& c, std::bitset<256>& excluded) {
  for (const auto& e : c.entries) excluded.set(e.symbol);
}

void encode_symbol(Model& model, RangeEncoder& enc, std::uint8_t symbol, std::size_t position) {
  std::bitset<256> excluded;
  for (int o = model.max_order(position); o >= 0; --o) {
    const Context* c = model.find(o);
    if (c == nullptr) continue;
    const Visible v = visible(*c, excluded);
    if (v.distinct == 0) continue;
    std::uint32_t cum = 0;
    for (const auto& e : c->entries) {
      if (excluded[e.symbol]) continue;
      if (e.symbol == symbol) {
        enc.encode(cum, e.count, v.total + v.distinct);
        return;
      }
      cum += e.count;
    }
    enc.encode(v.total, v.distinct, v.total + v.distinct);
    exclude_all(*c, excluded);
  }
  // Order -1: uniform over the symbols not yet excluded.
  std::uint32_t rank = 0;
  for (unsigned s = 0; s < symbol; ++s) rank += excluded[s] ? 0 : 1;
  enc.encode(rank, 1, static_cast<std::uint32_t>(256 - excluded.count()));
}

std::uint8_t decode_symbol(Model& model, RangeDecoder& dec, std::size_t position) {
  std::bitset<256> excluded;
  for (int o = model.max_order(position); o >= 0; --o) {
    const Context* c = model.find(o);
    if (c == nullptr) continue;
    const Visible v = visible(*c, excluded);
    if (v.distinct == 0) continue;
    const std::uint32_t target = dec.threshold(v.total + v.distinct);
    if (target >= v.total) {
      dec.decode(v.total, v.distinct);
      exclude_all(*c, excluded);
      continue;
    }
    std::uint32_t cum = 0;
    for (const auto& e : c->entries) {
      if (excluded[e.symbol]) continue;
      if (target < cum + e.count) {
        dec.decode(cum, e.count);
        return e.symbol;
      }
      cum += e.count;
    }
  }
  const std::uint32_t target = dec.threshold(static_cast<std::uint32_t>(256 - excluded.count()));
  std::uint32_t rank = 0;
  for (unsigned s = 0; s < 256; ++s) {
    if (excluded[s]) continue;
    if (rank == target) {
      dec.decode(target, 1);
      return static_cast<std::uint8_t>(s);
    }
    ++rank;
  }
  throw DecodeError("ppm: corrupt stream");
}

}  // namespace

Bytes ppm_compress(ByteView data, const PpmOptions& options) {
  if (data.size() > 0xFFFFFFFFu) throw std::length_error("ppm_compress: input exceeds 4 GiB");
  const auto n = static_cast<std::uint32_t>(data.size());
  Bytes out = {static_cast<std::uint8_t>(n >> 24), static_cast<std::uint8_t>(n >> 16),
               static_cast<std::uint8_t>(n >> 8), static_cast<std::uint8_t>(n)};
  if (data.empty()) return out;

  Model model(options.order);
  RangeEncoder enc;
  for (std::size_t i = 0; i < data.size(); ++i) {
    encode_symbol(model, enc, data[i], i);
    model.update(data[i], i);
  }
  const Bytes payload = enc.finish();
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Bytes ppm_decompress(ByteView stream, const PpmOptions& options) {
  if (stream.size() < 4) throw DecodeError("ppm: missing length prefix");
  const std::uint32_t n = (static_cast<std::uint32_t>(stream[0]) << 24) | (static_cast<std::uint32_t>(stream[1]) << 16) |
                          (static_cast<std::uint32_t>(stream[2]) << 8) | stream[3];
  const ByteView payload = stream.subspan(4);
  if (n == 0) {
    if (!payload.empty()) throw DecodeError("ppm: trailing data after empty stream");
    return {};
  }

  Model model(options.order);
  RangeDecoder dec(payload);
  Bytes out;
  out.reserve(std::min<std::size_t>(n, payload.size() * 64));
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t symbol = decode_symbol(model, dec, i);
    out.push_back(symbol);
    model.update(symbol, i);
  }
  if (!dec.exhausted()) throw DecodeError("ppm: trailing data after payload");
  return out;
}

}  // namespace bitscatter
