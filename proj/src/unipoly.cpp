#include "rsmm/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsmm {

Poly Poly::x_power(int e, Fe c) {
  if (c == 0) return Poly();
  std::vector<Fe> v(static_cast<std::size_t>(e) + 1, 0);
  v.back() = c;
  return Poly(std::move(v));
}

Poly add(const Poly& f, const Poly& g) {
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<Fe> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] ^= b[i];
  return Poly(std::move(out));
}

Poly mul(const Gf& gf, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly();
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<Fe> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] ^= gf.mul(a[i], b[j]);
  }
  return Poly(std::move(out));
}

Poly scale(const Gf& gf, const Poly& f, Fe c) {
  if (c == 0) return Poly();
  if (c == 1) return f;
  std::vector<Fe> out(f.coeffs());
  for (auto& v : out) v = gf.mul(v, c);
  return Poly(std::move(out));
}

Poly shift_up(const Poly& f, int s) {
  if (f.is_zero() || s == 0) return f;
  std::vector<Fe> out(f.coeffs().size() + static_cast<std::size_t>(s), 0);
  std::copy(f.coeffs().begin(), f.coeffs().end(), out.begin() + s);
  return Poly(std::move(out));
}

Poly shift_down_exact(const Poly& f, int s) {
  if (s == 0 || f.is_zero()) return f;
  const auto& a = f.coeffs();
  if (static_cast<int>(a.size()) <= s)
    throw std::runtime_error("inexact power-of-x division");
  for (int i = 0; i < s; ++i)
    if (a[static_cast<std::size_t>(i)] != 0)
      throw std::runtime_error("inexact power-of-x division");
  return Poly(std::vector<Fe>(a.begin() + s, a.end()));
}

Fe eval(const Gf& gf, const Poly& f, Fe a) {
  Fe acc = 0;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = static_cast<Fe>(gf.mul(acc, a) ^ c[i]);
  return acc;
}

void add_scaled_shifted(const Gf& gf, Poly& dst, const Poly& src, Fe c, int s) {
  if (c == 0 || src.is_zero()) return;
  const auto& b = src.coeffs();
  auto& a = dst.raw();
  if (a.size() < b.size() + static_cast<std::size_t>(s))
    a.resize(b.size() + static_cast<std::size_t>(s), 0);
  for (std::size_t j = 0; j < b.size(); ++j)
    a[j + static_cast<std::size_t>(s)] ^= gf.mul(c, b[j]);
  dst.trim();
}

std::pair<Poly, Poly> divmod(const Gf& gf, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (f.deg() < g.deg()) return {Poly(), f};
  const Fe ginv = gf.inv(g.leading());
  Poly rem = f;
  std::vector<Fe> q(static_cast<std::size_t>(f.deg() - g.deg()) + 1, 0);
  while (!rem.is_zero() && rem.deg() >= g.deg()) {
    const int s = rem.deg() - g.deg();
    const Fe c = gf.mul(rem.leading(), ginv);
    q[static_cast<std::size_t>(s)] = c;
    add_scaled_shifted(gf, rem, g, c, s);  // cancels the leading term
  }
  return {Poly(std::move(q)), std::move(rem)};
}

Poly div_exact(const Gf& gf, const Poly& f, const Poly& g) {
  auto [q, r] = divmod(gf, f, g);
  if (!r.is_zero()) throw std::runtime_error("inexact polynomial division");
  return q;
}

Poly from_roots(const Gf& gf, std::span<const Fe> roots) {
  std::vector<Fe> out{1};
  for (Fe r : roots) {
    out.push_back(0);
    // multiply by (x - r) = (x + r) in place, high to low
    for (std::size_t i = out.size(); i-- > 1;)
      out[i] = static_cast<Fe>(out[i - 1] ^ gf.mul(out[i], r));
    out[0] = gf.mul(out[0], r);
  }
  return Poly(std::move(out));
}

Poly lagrange_basis(const Gf& gf, std::span<const Fe> locators, int j) {
  const int n = static_cast<int>(locators.size());
  if (j < 0 || j >= n) throw std::invalid_argument("locator index out of range");
  std::vector<Fe> others;
  others.reserve(static_cast<std::size_t>(n) - 1);
  Fe denom = 1;
  for (int i = 0; i < n; ++i) {
    if (i == j) continue;
    if (locators[static_cast<std::size_t>(i)] == locators[static_cast<std::size_t>(j)])
      throw std::invalid_argument("repeated locators");
    others.push_back(locators[static_cast<std::size_t>(i)]);
    denom = gf.mul(denom,
                   Gf::add(locators[static_cast<std::size_t>(j)],
                           locators[static_cast<std::size_t>(i)]));
  }
  return scale(gf, from_roots(gf, others), gf.inv(denom));
}

Poly lagrange_interpolate(const Gf& gf, std::span<const Fe> xs,
                          std::span<const Fe> ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("point count mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (xs[i] == xs[j]) throw std::invalid_argument("repeated x-coordinates");

  const Poly g = from_roots(gf, xs);
  Poly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (ys[j] == 0) continue;
    // g / (x - xs[j]) by synthetic division, then scale to hit ys[j].
    const auto& gc = g.coeffs();
    std::vector<Fe> nj(n, 0);
    Fe carry = 0;
    for (std::size_t i = n; i-- > 0;) {
      carry = static_cast<Fe>(gc[i + 1] ^ gf.mul(carry, xs[j]));
      nj[i] = carry;
    }
    Poly num{std::move(nj)};
    num.trim();
    const Fe denom = eval(gf, num, xs[j]);
    add_scaled_shifted(gf, acc, num, gf.div(ys[j], denom), 0);
  }
  return acc;
}

}  // namespace rsmm
