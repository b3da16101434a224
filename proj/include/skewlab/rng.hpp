#pragma once

#include <cstdint>

namespace skewlab {

/// Counter-based generator: draw i of a stream is a SplitMix64 finalizer
/// applied to (key + i * golden gamma), so any draw can be computed without
/// touching the others. That is what lets batch samplers fill index i from
/// any thread and still reproduce the serial stream bit for bit.
class RngState {
 public:
  explicit RngState(std::uint64_t seed) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

  std::uint64_t next_u64() noexcept { return at(counter_++); }
  /// Uniform on the open interval (0,1); never returns 0 or 1.
  double next_unit() noexcept { return to_unit(next_u64()); }

  /// Draw number `index` of this stream, independent of the current counter.
  std::uint64_t at(std::uint64_t index) const noexcept;
  double unit_at(std::uint64_t index) const noexcept { return to_unit(at(index)); }

  /// Reserve `count` consecutive draws and return the index of the first.
  std::uint64_t advance(std::uint64_t count) noexcept {
    const std::uint64_t first = counter_;
    counter_ += count;
    return first;
  }

  /// Independent child stream, a pure function of (seed, stream_id).
  RngState split(std::uint64_t stream_id) const noexcept;

  static double to_unit(std::uint64_t bits) noexcept {
    return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace skewlab
