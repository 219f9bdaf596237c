#include "rsmm/galois.hpp"

#include <mutex>
#include <stdexcept>

namespace rsmm {

namespace {

// Default primitive polynomials, index = exponent p. The decoders only
// need determinism, not a particular generator; these are the common
// textbook choices.
constexpr std::uint32_t kPrimitivePoly[13] = {
    0,      0,      0b111,       0b1011,       0b10011,      0b100101,
    0b1000011u,     0b10001001u, 0b100011101u, 0b1000010001u,
    0b10000001001u, 0b100000000101u, 0b1000001010011u,
};

}  // namespace

FieldTable::FieldTable(int exponent) {
  if (exponent < 2 || exponent > 12)
    throw std::invalid_argument("field exponent must be in [2, 12]");
  p_ = exponent;
  q_ = 1 << exponent;
  poly_ = kPrimitivePoly[exponent];

  exp_.assign(static_cast<std::size_t>(2 * (q_ - 1)), 0);
  log_.assign(static_cast<std::size_t>(q_), -1);

  std::uint32_t b = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    if (log_[b] != -1)
      throw std::logic_error("non-primitive generator polynomial");
    exp_[i] = static_cast<Fe>(b);
    exp_[i + q_ - 1] = static_cast<Fe>(b);
    log_[b] = i;
    b <<= 1;
    if (b & static_cast<std::uint32_t>(q_)) b ^= poly_;
  }
  if (b != 1) throw std::logic_error("exp table did not close at alpha^(q-1)");
}

const FieldTable& FieldTable::of(int exponent) {
  static std::array<const FieldTable*, 13> cache{};
  static std::mutex mu;
  if (exponent < 2 || exponent > 12)
    throw std::invalid_argument("field exponent must be in [2, 12]");
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[exponent]) cache[exponent] = new FieldTable(exponent);
  return *cache[exponent];
}

Fe Gf::inv(Fe a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (a == 1) return 1;
  return tab_->exp((tab_->size() - 1) - tab_->log(a));
}

Fe Gf::pow(Fe a, int e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  Fe r = 1;
  Fe base = a;
  while (true) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base);
  }
  return r;
}

}  // namespace rsmm
