#include "rsmm/channel.hpp"

#include <cmath>

namespace rsmm {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double FrameRng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

TransmitResult transmit(const RsCode& code, std::span<const Fe> message,
                        const ChannelConfig& cfg, std::uint64_t frame) {
  const int n = code.n(), p = code.field().exponent(), q = code.field().size();
  const Gf gf(code.field());  // channel-side arithmetic is never counted
  Word cw = code.encode(gf, message);

  const double rate = static_cast<double>(code.k()) / n;
  const double ebn0 = std::pow(10.0, cfg.snr_db / 10.0);
  const double n0 = 1.0 / (rate * ebn0);  // Es = 1 per BPSK bit
  const double sigma = std::sqrt(n0 / 2.0);

  FrameRng rng(cfg.seed, frame);
  TransmitResult out{std::move(cw), ReliabilityMatrix(q, n)};
  std::vector<double> bit_p0(static_cast<std::size_t>(p));
  for (int j = 0; j < n; ++j) {
    const Fe v = out.codeword[static_cast<std::size_t>(j)];
    for (int b = 0; b < p; ++b) {
      const double tx = ((v >> b) & 1) ? -1.0 : 1.0;
      const double y = tx + sigma * rng.gaussian();
      bit_p0[static_cast<std::size_t>(b)] = 1.0 / (1.0 + std::exp(-4.0 * y / n0));
    }
    double colsum = 0.0;
    for (int i = 0; i < q; ++i) {
      double prob = 1.0;
      for (int b = 0; b < p; ++b) {
        const double p0 = bit_p0[static_cast<std::size_t>(b)];
        prob *= ((i >> b) & 1) ? (1.0 - p0) : p0;
      }
      out.pi.at(i, j) = prob;
      colsum += prob;
    }
    for (int i = 0; i < q; ++i) out.pi.at(i, j) /= colsum;
  }
  return out;
}

}  // namespace rsmm
