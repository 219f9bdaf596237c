#pragma once

#include <cstdint>
#include <random>

#include "rsmm/reliability.hpp"
#include "rsmm/rscode.hpp"

namespace rsmm {

struct ChannelConfig {
  double snr_db = 0.0;     // Eb/N0 in dB, BPSK over AWGN
  std::uint64_t seed = 0;  // campaign seed; frames derive substreams
};

std::uint64_t splitmix64(std::uint64_t x);

// Deterministic per-frame random stream: mt19937_64 seeded from the
// campaign seed xored with a frame-index hash.
class FrameRng {
 public:
  FrameRng(std::uint64_t seed, std::uint64_t frame)
      : gen_(seed ^ splitmix64(frame + 1)) {}

  std::uint64_t bits() { return gen_(); }
  // Uniform in (0, 1), 53-bit resolution.
  double uniform() { return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53; }
  // Box-Muller; draws two uniforms per pair of normals.
  double gaussian();
  // Uniform field element; q is a power of two so masking is exact.
  Fe symbol(int q) { return static_cast<Fe>(gen_() & static_cast<std::uint64_t>(q - 1)); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct TransmitResult {
  Word codeword;
  ReliabilityMatrix pi;
};

// Encode, BPSK-modulate p bits per symbol (LSB first, bit 0 -> +1), add
// white Gaussian noise at Eb/N0 = snr_db, and form the symbol posteriors
// as products of per-bit posteriors under a uniform prior. Columns are
// normalized to sum to 1.
TransmitResult transmit(const RsCode& code, std::span<const Fe> message,
                        const ChannelConfig& cfg, std::uint64_t frame);

}  // namespace rsmm
