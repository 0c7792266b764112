#pragma once

#include <cstdint>

namespace qcollapse {

/// PCG64 (setseq variant, XSL-RR 128/64 output function).
///
/// Each (seed, stream) pair selects a distinct LCG increment, so streams for
/// different workers are disjoint by construction. State is 128 bits; period
/// 2^128 per stream.
class Pcg64 {
 public:
  Pcg64() : Pcg64(0xcafef00dd15ea5e5ULL, 0) {}

  Pcg64(std::uint64_t seed, std::uint64_t stream) {
    state_ = 0;
    inc_ = (static_cast<u128>(stream) << 1) | 1u;
    step();
    state_ += seed;
    step();
  }

  std::uint64_t next() {
    step();
    const auto xored =
        static_cast<std::uint64_t>(state_ >> 64) ^ static_cast<std::uint64_t>(state_);
    const auto rot = static_cast<unsigned>(state_ >> 122);
    return (xored >> rot) | (xored << ((64u - rot) & 63u));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Bernoulli draw with success probability p.
  bool bernoulli(double p) { return uniform() < p; }

 private:
  using u128 = unsigned __int128;

  void step() { state_ = state_ * kMultiplier + inc_; }

  static constexpr u128 kMultiplier =
      (static_cast<u128>(0x2360ed051fc65da4ULL) << 64) | 0x4385df649fccf645ULL;

  u128 state_;
  u128 inc_;
};

/// SplitMix64 step, used to derive child seeds from a base seed and a salt
/// (stage index, trial index, ...) without correlating the resulting streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace qcollapse
