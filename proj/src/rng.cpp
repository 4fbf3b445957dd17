#include "bitscatter/rng.hpp"

#include <stdexcept>

namespace bitscatter {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngSeed derive_seed(RngSeed parent, std::uint64_t stream) noexcept {
  return RngSeed{splitmix64(splitmix64(parent.value) ^ splitmix64(~stream))};
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("Rng::below: bound must be positive");
  // Rejection keeps the result unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

}  // namespace bitscatter
