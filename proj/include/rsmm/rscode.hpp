#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "rsmm/unipoly.hpp"

namespace rsmm {

using Word = std::vector<Fe>;     // n received / code symbols
using Message = std::vector<Fe>;  // k message symbols, low-to-high

// (n, k) Reed-Solomon code over GF(q) with n = q - 1 and code locators
// alpha_j = alpha^j. Codewords are message-polynomial evaluations at the
// locators. The descriptor is immutable and shareable; the interpolation
// caches (G, its powers, the Lagrange basis, the pairwise products) are
// data-independent and built once, outside any decode counter.
class RsCode {
 public:
  RsCode(const FieldTable& table, int k);

  const FieldTable& field() const { return *table_; }
  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Fe>& locators() const { return locators_; }

  Word encode(const Gf& gf, std::span<const Fe> message) const;

  // G(x) = prod_j (x - alpha_j) and its powers up to e.
  const Poly& locator_product() const { return g_; }
  const Poly& locator_product_power(int e) const;

  // varpi_j = prod_{j' != j} (alpha_j - alpha_{j'})
  const std::vector<Fe>& lagrange_denoms() const { return varpi_; }

  // Phi_j(x) with Phi_j(alpha_j) = 1, zero at the other locators.
  const std::vector<Poly>& lagrange_cache() const;

  // Interpolant of (alpha_j, ys[j]) using the cached Phi_j; n^2 products.
  Poly interpolate_received(const Gf& gf, std::span<const Fe> ys) const;

 private:
  const FieldTable* table_;
  int n_, k_;
  std::vector<Fe> locators_;
  Poly g_;
  std::vector<Fe> varpi_;
  mutable std::vector<Poly> gpow_;
  mutable std::vector<Poly> phi_;
  mutable std::mutex cache_mu_;
};

int hamming_distance(std::span<const Fe> a, std::span<const Fe> b);

// Syndrome-based unique decoding (Berlekamp-Massey plus Forney). Returns
// the message whenever at most floor((n-k)/2) symbol errors occurred;
// empty optional on decoding failure.
std::optional<Message> bm_decode(const Gf& gf, const RsCode& code,
                                 std::span<const Fe> received);

}  // namespace rsmm
