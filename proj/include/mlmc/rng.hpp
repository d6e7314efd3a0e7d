#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace mlmc::rng {

/// Philox4x64-10 keyed counter generator (Salmon et al. 2011 constants).
/// Emits the block at the current counter, then increments counter word 0,
/// so a single object behaves like an ordinary 64-bit URBG.
class Philox {
 public:
  using result_type = std::uint64_t;

  Philox(const std::array<std::uint64_t, 4>& counter,
         const std::array<std::uint64_t, 2>& key) noexcept
      : ctr_(counter), key_(key) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<std::uint64_t>::max();
  }

  result_type operator()() noexcept {
    if (pos_ == 4) {
      block_ = encrypt(ctr_, key_);
      ++ctr_[0];
      pos_ = 0;
    }
    return block_[pos_++];
  }

  /// Uniform draw on the open interval (0, 1) with 53-bit resolution.
  double uniform01() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1p-53;
  }

  /// One application of the 10-round bijection; exposed for known-answer tests.
  static std::array<std::uint64_t, 4> encrypt(std::array<std::uint64_t, 4> c,
                                              std::array<std::uint64_t, 2> k) noexcept {
    for (int r = 0; r < 10; ++r) {
      const auto p0 = mulhilo(kMul0, c[0]);
      const auto p1 = mulhilo(kMul1, c[2]);
      c = {p1.hi ^ c[1] ^ k[0], p1.lo, p0.hi ^ c[3] ^ k[1], p0.lo};
      k[0] += kBump0;
      k[1] += kBump1;
    }
    return c;
  }

 private:
  struct Wide {
    std::uint64_t hi, lo;
  };

  static Wide mulhilo(std::uint64_t a, std::uint64_t b) noexcept {
    const auto w = static_cast<unsigned __int128>(a) * b;
    return {static_cast<std::uint64_t>(w >> 64), static_cast<std::uint64_t>(w)};
  }

  static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ull;
  static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ull;
  static constexpr std::uint64_t kBump0 = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kBump1 = 0xBB67AE8584CAA73Bull;

  std::array<std::uint64_t, 4> ctr_;
  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> block_{};
  int pos_ = 4;
};

inline constexpr std::uint64_t kStreamSalt = 0x6d6c6d635f6c6162ull;

/// Sample index reserved for families that draw one aggregate value per
/// (replication, level) instead of one value per increment.
inline constexpr std::uint64_t kAggregateIndex = ~0ull;

/// Every (seed, replication, level, index) tuple names its own stream, so
/// results cannot depend on sampling order or thread layout.
inline Philox substream(std::uint64_t seed, std::uint64_t replication,
                        std::uint64_t level, std::uint64_t index) noexcept {
  return Philox({0, index, level, replication}, {seed, kStreamSalt});
}

}  // namespace mlmc::rng
