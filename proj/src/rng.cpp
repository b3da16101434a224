#include "skewlab/rng.hpp"

namespace skewlab {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RngState::RngState(std::uint64_t seed) noexcept : seed_(seed), key_(mix64(seed)) {}

std::uint64_t RngState::at(std::uint64_t index) const noexcept {
  return mix64(key_ + (index + 1) * kGoldenGamma);
}

RngState RngState::split(std::uint64_t stream_id) const noexcept {
  return RngState(mix64(seed_ ^ mix64(stream_id + 0x632BE59BD9B4E019ULL)));
}

}  // namespace skewlab
