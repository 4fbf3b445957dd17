#include "bitscatter/sequences.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <stdexcept>

namespace bitscatter {

BitSequence::BitSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; }))
    throw std::domain_error("BitSequence: elements must be 0 or 1");
}

BitSequence BitSequence::from_string(std::string_view text) {
  BitSequence seq;
  seq.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw std::invalid_argument(std::string("BitSequence: invalid character '") + c + "'");
    seq.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return seq;
}

std::size_t BitSequence::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

double BitSequence::ones_fraction() const noexcept {
  return bits_.empty() ? 0.0 : static_cast<double>(count_ones()) / static_cast<double>(bits_.size());
}

std::string BitSequence::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

Bytes encode_ascii(const BitSequence& seq) {
  Bytes out(seq.size());
  std::transform(seq.begin(), seq.end(), out.begin(),
                 [](std::uint8_t b) { return static_cast<std::uint8_t>('0' + b); });
  return out;
}

BitSequence decode_ascii(ByteView bytes) {
  std::vector<std::uint8_t> bits(bytes.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (bytes[i] != '0' && bytes[i] != '1')
      throw std::invalid_argument("decode_ascii: byte " + std::to_string(i) + " is not '0' or '1'");
    bits[i] = static_cast<std::uint8_t>(bytes[i] - '0');
  }
  return BitSequence(std::move(bits));
}

BitSequence random_bernoulli(std::size_t n, double p, RngSeed seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("random_bernoulli: p must lie in [0, 1]");
  Rng rng(seed);
  BitSequence seq;
  seq.reserve(n);
  for (std::size_t i = 0; i < n; ++i) seq.push_back(rng.bernoulli(p));
  return seq;
}

void write_bit_file(const std::filesystem::path& path, const BitSequence& seq) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const std::string text = seq.to_string();
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

BitSequence read_bit_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return BitSequence::from_string(text);
}

}  // namespace bitscatter
