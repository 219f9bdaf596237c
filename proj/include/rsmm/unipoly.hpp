#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rsmm/galois.hpp"

namespace rsmm {

// Dense univariate polynomial over GF(q), coefficients low-to-high with no
// trailing zeros. The zero polynomial has an empty coefficient vector and
// degree kZeroDeg, which sorts below every true degree.
class Poly {
 public:
  static constexpr int kZeroDeg = -1;

  Poly() = default;
  explicit Poly(std::vector<Fe> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(Fe c) {
    return c ? Poly(std::vector<Fe>{c}) : Poly();
  }
  // c * x^e
  static Poly x_power(int e, Fe c = 1);

  bool is_zero() const { return c_.empty(); }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  Fe coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  Fe leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Fe>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  // Raw mutable access for construction helpers; callers must re-trim.
  std::vector<Fe>& raw() { return c_; }

 private:
  std::vector<Fe> c_;
};

Poly add(const Poly& f, const Poly& g);
Poly mul(const Gf& gf, const Poly& f, const Poly& g);
Poly scale(const Gf& gf, const Poly& f, Fe c);
Poly shift_up(const Poly& f, int s);              // f * x^s
Poly shift_down_exact(const Poly& f, int s);      // f / x^s, throws if inexact
Fe eval(const Gf& gf, const Poly& f, Fe a);       // Horner

// dst += c * x^s * src (in place; characteristic 2 so += is -=)
void add_scaled_shifted(const Gf& gf, Poly& dst, const Poly& src, Fe c, int s);

// f = q*g + r with deg r < deg g; throws on g == 0.
std::pair<Poly, Poly> divmod(const Gf& gf, const Poly& f, const Poly& g);
Poly div_exact(const Gf& gf, const Poly& f, const Poly& g);

// prod_{r in roots} (x - r)
Poly from_roots(const Gf& gf, std::span<const Fe> roots);

// Lagrange basis polynomial for locator j: 1 at locators[j], 0 elsewhere.
Poly lagrange_basis(const Gf& gf, std::span<const Fe> locators, int j);

// Unique polynomial of degree < n through (xs[i], ys[i]); xs distinct.
Poly lagrange_interpolate(const Gf& gf, std::span<const Fe> xs,
                          std::span<const Fe> ys);

}  // namespace rsmm
