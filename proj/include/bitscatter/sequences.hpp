#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitscatter/rng.hpp"

namespace bitscatter {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Finite ordered sequence of bits. Every stored element is 0 or 1.
class BitSequence {
 public:
  using value_type = std::uint8_t;
  using const_iterator = std::vector<std::uint8_t>::const_iterator;

  BitSequence() = default;

  /// Throws std::domain_error if any element is not 0 or 1.
  explicit BitSequence(std::vector<std::uint8_t> bits);

  /// Parses '0'/'1' characters. Throws std::invalid_argument on anything else.
  static BitSequence from_string(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const_iterator begin() const noexcept { return bits_.begin(); }
  const_iterator end() const noexcept { return bits_.end(); }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  void reserve(std::size_t n) { bits_.reserve(n); }
  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }

  std::size_t count_ones() const noexcept;

  /// Fraction of ones; 0 for the empty sequence.
  double ones_fraction() const noexcept;

  std::string to_string() const;

  friend bool operator==(const BitSequence&, const BitSequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// One byte per bit: 0 -> '0' (0x30), 1 -> '1' (0x31).
Bytes encode_ascii(const BitSequence& seq);

/// Inverse of encode_ascii. Throws std::invalid_argument on other bytes.
BitSequence decode_ascii(ByteView bytes);

/// n independent draws, each 1 with probability p. Throws std::domain_error
/// unless 0 <= p <= 1.
BitSequence random_bernoulli(std::size_t n, double p, RngSeed seed);

/// Bit files hold '0'/'1' characters with no trailing newline, so the file
/// size in bytes equals the sequence length.
void write_bit_file(const std::filesystem::path& path, const BitSequence& seq);
BitSequence read_bit_file(const std::filesystem::path& path);

}  // namespace bitscatter
