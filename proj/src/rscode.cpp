#include "rsmm/rscode.hpp"

#include <stdexcept>

namespace rsmm {

RsCode::RsCode(const FieldTable& table, int k) : table_(&table), k_(k) {
  n_ = table.size() - 1;
  if (k < 1 || k >= n_) throw std::invalid_argument("require 1 <= k < n = q-1");
  const Gf gf(table);  // uncounted: code-level precomputation
  locators_.resize(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) locators_[static_cast<std::size_t>(j)] = table.exp(j);
  g_ = from_roots(gf, locators_);
  varpi_.resize(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    Fe w = 1;
    for (int j2 = 0; j2 < n_; ++j2)
      if (j2 != j)
        w = gf.mul(w, Gf::add(locators_[static_cast<std::size_t>(j)],
                              locators_[static_cast<std::size_t>(j2)]));
    varpi_[static_cast<std::size_t>(j)] = w;
  }
  gpow_.push_back(Poly::constant(1));
  gpow_.push_back(g_);
}

Word RsCode::encode(const Gf& gf, std::span<const Fe> message) const {
  if (static_cast<int>(message.size()) != k_)
    throw std::invalid_argument("message length must equal k");
  Poly f{std::vector<Fe>(message.begin(), message.end())};
  Word c(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j)
    c[static_cast<std::size_t>(j)] = eval(gf, f, locators_[static_cast<std::size_t>(j)]);
  return c;
}

const Poly& RsCode::locator_product_power(int e) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  const Gf gf(*table_);
  while (static_cast<int>(gpow_.size()) <= e)
    gpow_.push_back(mul(gf, gpow_.back(), g_));
  return gpow_[static_cast<std::size_t>(e)];
}

const std::vector<Poly>& RsCode::lagrange_cache() const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (phi_.empty()) {
    const Gf gf(*table_);
    phi_.reserve(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) {
      // G / (x - alpha_j), scaled by 1/varpi_j.
      const auto& gc = g_.coeffs();
      std::vector<Fe> nj(static_cast<std::size_t>(n_), 0);
      Fe carry = 0;
      const Fe aj = locators_[static_cast<std::size_t>(j)];
      for (std::size_t i = static_cast<std::size_t>(n_); i-- > 0;) {
        carry = static_cast<Fe>(gc[i + 1] ^ gf.mul(carry, aj));
        nj[i] = carry;
      }
      phi_.push_back(scale(gf, Poly(std::move(nj)),
                           gf.inv(varpi_[static_cast<std::size_t>(j)])));
    }
  }
  return phi_;
}

Poly RsCode::interpolate_received(const Gf& gf, std::span<const Fe> ys) const {
  if (static_cast<int>(ys.size()) != n_)
    throw std::invalid_argument("received word length must equal n");
  const auto& phi = lagrange_cache();
  Poly acc;
  for (int j = 0; j < n_; ++j)
    add_scaled_shifted(gf, acc, phi[static_cast<std::size_t>(j)],
                       ys[static_cast<std::size_t>(j)], 0);
  return acc;
}

int hamming_distance(std::span<const Fe> a, std::span<const Fe> b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

std::optional<Message> bm_decode(const Gf& gf, const RsCode& code,
                                 std::span<const Fe> received) {
  const int n = code.n(), k = code.k();
  if (static_cast<int>(received.size()) != n)
    throw std::invalid_argument("received word length must equal n");
  const int nsyn = n - k;

  // Syndromes S_u = r(alpha^{-(k+u)}): evaluating the received polynomial
  // at the exponents where every codeword spectrum vanishes.
  const FieldTable& tab = code.field();
  Poly r{std::vector<Fe>(received.begin(), received.end())};
  std::vector<Fe> syn(static_cast<std::size_t>(nsyn));
  bool clean = true;
  for (int u = 0; u < nsyn; ++u) {
    const Fe x = tab.exp(((n - ((k + u) % n)) % n));
    syn[static_cast<std::size_t>(u)] = eval(gf, r, x);
    clean = clean && syn[static_cast<std::size_t>(u)] == 0;
  }

  std::vector<Fe> corrected(received.begin(), received.end());
  if (!clean) {
    // Berlekamp-Massey LFSR synthesis for the error locator Lambda.
    std::vector<Fe> lambda{1}, prev{1};
    int L = 0, m = 1;
    Fe b = 1;
    for (int u = 0; u < nsyn; ++u) {
      Fe delta = syn[static_cast<std::size_t>(u)];
      for (int i = 1; i <= L && i < static_cast<int>(lambda.size()); ++i)
        delta = static_cast<Fe>(delta ^ gf.mul(lambda[static_cast<std::size_t>(i)],
                                               syn[static_cast<std::size_t>(u - i)]));
      if (delta == 0) {
        ++m;
        continue;
      }
      std::vector<Fe> t = lambda;
      const Fe c = gf.div(delta, b);
      if (lambda.size() < prev.size() + static_cast<std::size_t>(m))
        lambda.resize(prev.size() + static_cast<std::size_t>(m), 0);
      for (std::size_t i = 0; i < prev.size(); ++i)
        lambda[i + static_cast<std::size_t>(m)] =
            static_cast<Fe>(lambda[i + static_cast<std::size_t>(m)] ^ gf.mul(c, prev[i]));
      if (2 * L <= u) {
        L = u + 1 - L;
        prev = std::move(t);
        b = delta;
        m = 1;
      } else {
        ++m;
      }
    }
    Poly lam{std::vector<Fe>(lambda)};
    if (lam.deg() != L || L > nsyn / 2) return std::nullopt;

    // Chien search: error at position j iff Lambda(alpha^j) = 0, since the
    // locator attached to position j is X_j = alpha^{-j}.
    std::vector<int> positions;
    for (int j = 0; j < n; ++j)
      if (eval(gf, lam, tab.exp(j)) == 0) positions.push_back(j);
    if (static_cast<int>(positions.size()) != L) return std::nullopt;

    // Forney: with Omega = S * Lambda mod x^{n-k},
    // E_j = X_j * Omega(X_j^{-1}) / Lambda'(X_j^{-1}).
    Poly s{std::vector<Fe>(syn)};
    Poly omega = mul(gf, s, lam);
    if (omega.deg() >= nsyn)
      omega = Poly(std::vector<Fe>(omega.coeffs().begin(),
                                   omega.coeffs().begin() + nsyn));
    // Formal derivative: in characteristic 2 only odd powers survive.
    std::vector<Fe> dl(static_cast<std::size_t>(lam.deg()), 0);
    for (int i = 1; i <= lam.deg(); i += 2)
      dl[static_cast<std::size_t>(i - 1)] = lam.coeff(i);
    Poly lamd{std::move(dl)};
    for (int j : positions) {
      const Fe xinv = tab.exp(j);  // X_j^{-1} = alpha^j
      const Fe num = eval(gf, omega, xinv);
      const Fe den = eval(gf, lamd, xinv);
      if (den == 0) return std::nullopt;
      const Fe xj = tab.exp((n - j) % n);
      const Fe ecap = gf.mul(xj, gf.div(num, den));
      // E_j = e_j * alpha^{-jk}; undo the spectral twist.
      const Fe ej = gf.mul(ecap, gf.pow(tab.exp(j), k));
      corrected[static_cast<std::size_t>(j)] =
          static_cast<Fe>(corrected[static_cast<std::size_t>(j)] ^ ej);
    }
  }

  // Message recovery: f_t = sum_j c_j alpha^{-jt} for t < k, and the same
  // sums vanish for t >= k on any codeword; reject otherwise.
  Poly c{std::vector<Fe>(corrected)};
  Message msg(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t)
    msg[static_cast<std::size_t>(t)] = eval(gf, c, tab.exp((n - t) % n));
  for (int t = k; t < n; ++t)
    if (eval(gf, c, tab.exp((n - t) % n)) != 0) return std::nullopt;
  return msg;
}

}  // namespace rsmm
