#pragma once

#include <array>
#include <cstdint>

namespace auctionlab {

// Philox 4x32-10 counter-based generator (Salmon et al., SC'11).
//
// A stream is identified by (key, stream_id). Block i of a stream is produced
// by encrypting counter i, so draws depend only on (key, stream_id, i) and
// never on call order or thread scheduling. That is what makes parallel
// simulation replications reproducible.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key, std::uint64_t stream_id = 0) noexcept
      : key_{static_cast<std::uint32_t>(key),
             static_cast<std::uint32_t>(key >> 32)},
        stream_{static_cast<std::uint32_t>(stream_id),
                static_cast<std::uint32_t>(stream_id >> 32)} {}

  std::uint64_t next_u64() noexcept {
    if (lane_ == 2) {
      block_ = block({static_cast<std::uint32_t>(counter_),
                      static_cast<std::uint32_t>(counter_ >> 32), stream_[0],
                      stream_[1]},
                     key_);
      ++counter_;
      lane_ = 0;
    }
    const std::uint64_t lo = block_[2 * lane_];
    const std::uint64_t hi = block_[2 * lane_ + 1];
    ++lane_;
    return (hi << 32) | lo;
  }

  // Uniform on the open interval (0, 1); safe through quantile transforms.
  double next_unit() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // One raw block; exposed for the known-answer tests.
  static std::array<std::uint32_t, 4> block(
      std::array<std::uint32_t, 4> counter,
      std::array<std::uint32_t, 2> key) noexcept {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += 0x9E3779B9u;
        key[1] += 0xBB67AE85u;
      }
      const std::uint64_t prod0 = 0xD2511F53ull * counter[0];
      const std::uint64_t prod1 = 0xCD9E8D57ull * counter[2];
      counter = {static_cast<std::uint32_t>(prod1 >> 32) ^ counter[1] ^ key[0],
                 static_cast<std::uint32_t>(prod1),
                 static_cast<std::uint32_t>(prod0 >> 32) ^ counter[3] ^ key[1],
                 static_cast<std::uint32_t>(prod0)};
    }
    return counter;
  }

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> stream_;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int lane_ = 2;
};

// SplitMix-style 64-bit finalizer, used to derive stream keys from seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace auctionlab
