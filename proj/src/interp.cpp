#include "rsmm/interp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rsmm {

namespace {
const Poly kZeroPoly;

// C(n, k) mod 2 via Lucas: odd iff k's bits are a subset of n's.
bool binom_odd(int n, int k) { return (k & n) == k; }
}  // namespace

bool Bivar::is_zero() const {
  for (const auto& p : yc)
    if (!p.is_zero()) return false;
  return true;
}

int Bivar::ydeg() const {
  for (int t = static_cast<int>(yc.size()); t-- > 0;)
    if (!yc[static_cast<std::size_t>(t)].is_zero()) return t;
  return -1;
}

const Poly& Bivar::coeff(int tau) const {
  if (tau < 0 || tau >= static_cast<int>(yc.size())) return kZeroPoly;
  return yc[static_cast<std::size_t>(tau)];
}

void Bivar::trim() {
  while (!yc.empty() && yc.back().is_zero()) yc.pop_back();
}

bool Bivar::operator==(const Bivar& o) const {
  const int d = std::max(static_cast<int>(yc.size()), static_cast<int>(o.yc.size()));
  for (int t = 0; t < d; ++t)
    if (!(coeff(t) == o.coeff(t))) return false;
  return true;
}

Bivar bivar_mul(const Gf& gf, const Bivar& a, const Bivar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Bivar out;
  out.yc.resize(a.yc.size() + b.yc.size() - 1);
  for (std::size_t i = 0; i < a.yc.size(); ++i) {
    if (a.yc[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.yc.size(); ++j) {
      if (b.yc[j].is_zero()) continue;
      out.yc[i + j] = add(out.yc[i + j], mul(gf, a.yc[i], b.yc[j]));
    }
  }
  out.trim();
  return out;
}

Bivar bivar_add(const Bivar& a, const Bivar& b) {
  Bivar out;
  out.yc.resize(std::max(a.yc.size(), b.yc.size()));
  for (std::size_t t = 0; t < out.yc.size(); ++t)
    out.yc[t] = add(a.coeff(static_cast<int>(t)), b.coeff(static_cast<int>(t)));
  out.trim();
  return out;
}

Fe bivar_eval(const Gf& gf, const Bivar& q, Fe a, Fe b) {
  Fe acc = 0;
  for (std::size_t t = q.yc.size(); t-- > 0;)
    acc = static_cast<Fe>(gf.mul(acc, b) ^ eval(gf, q.yc[t], a));
  return acc;
}

Poly eval_at_poly(const Gf& gf, const Bivar& q, const Poly& f) {
  Poly acc;
  for (std::size_t t = q.yc.size(); t-- > 0;)
    acc = add(mul(gf, acc, f), q.yc[t]);
  return acc;
}

Bivar substitute_y_scaled(const Gf& gf, const Bivar& q, const Poly& v) {
  Bivar out;
  out.yc.resize(q.yc.size());
  Poly vp = Poly::constant(1);
  for (std::size_t t = 0; t < q.yc.size(); ++t) {
    out.yc[t] = mul(gf, q.yc[t], vp);
    if (t + 1 < q.yc.size()) vp = mul(gf, vp, v);
  }
  out.trim();
  return out;
}

Bivar substitute_y_scaled_inverse(const Gf& gf, const Bivar& q, const Poly& v) {
  Bivar out;
  out.yc.resize(q.yc.size());
  Poly vp = Poly::constant(1);
  for (std::size_t t = 0; t < q.yc.size(); ++t) {
    out.yc[t] = q.yc[t].is_zero() ? Poly() : div_exact(gf, q.yc[t], vp);
    if (t + 1 < q.yc.size()) vp = mul(gf, vp, v);
  }
  out.trim();
  return out;
}

int weighted_degree(const Bivar& q, int nu) {
  bool any = false;
  int best = 0;
  for (int t = 0; t < static_cast<int>(q.yc.size()); ++t) {
    const Poly& c = q.yc[static_cast<std::size_t>(t)];
    if (c.is_zero()) continue;
    const int w = c.deg() + nu * t;
    if (!any || w > best) best = w;
    any = true;
  }
  if (!any) throw std::invalid_argument("weighted degree of zero polynomial");
  return best;
}

int leading_y_degree(const Bivar& q, int nu) {
  const int w = weighted_degree(q, nu);
  int best = -1;
  for (int t = 0; t < static_cast<int>(q.yc.size()); ++t) {
    const Poly& c = q.yc[static_cast<std::size_t>(t)];
    if (!c.is_zero() && c.deg() + nu * t == w) best = t;
  }
  return best;
}

bool verify_multiplicity(const Gf& gf, const Bivar& q, Fe a, Fe b, int m) {
  if (m < 1) throw std::invalid_argument("multiplicity order must be >= 1");
  if (q.is_zero()) return true;

  // Shift x by a: Horner form c(x+a) built coefficient by coefficient.
  std::vector<Poly> shifted;
  shifted.reserve(q.yc.size());
  for (const auto& c : q.yc) {
    std::vector<Fe> out;
    for (std::size_t i = c.coeffs().size(); i-- > 0;) {
      // out = out*(x+a) + c_i
      out.insert(out.begin(), 0);
      for (std::size_t j = 0; j + 1 < out.size(); ++j)
        out[j] = static_cast<Fe>(out[j] ^ gf.mul(out[j + 1], a));
      out[0] = static_cast<Fe>(out[0] ^ c.coeffs()[i]);
    }
    shifted.emplace_back(std::move(out));
  }

  // Shift y by b using the binomial expansion (Lucas for the parity).
  const int l = static_cast<int>(shifted.size()) - 1;
  for (int s = 0; s < m; ++s) {
    Poly cs;
    for (int t = s; t <= l; ++t) {
      if (!binom_odd(t, s)) continue;
      cs = add(cs, scale(gf, shifted[static_cast<std::size_t>(t)],
                         gf.pow(b, t - s)));
    }
    // Need total degree >= m: x-valuation of the y^s coefficient >= m-s.
    for (int d = 0; d < m - s; ++d)
      if (cs.coeff(d) != 0) return false;
  }
  return true;
}

ModuleBasis build_gs_basis(const Gf& gf, const RsCode& code,
                           std::span<const Fe> word, int m, int l) {
  if (m < 1 || m > l) throw std::invalid_argument("require 1 <= m <= l");
  StageGuard stage(gf.counter(), Stage::Formulation);

  const Poly r = code.interpolate_received(gf, word);

  std::vector<Poly> rpow(static_cast<std::size_t>(m) + 1);
  rpow[0] = Poly::constant(1);
  for (int i = 1; i <= m; ++i) rpow[static_cast<std::size_t>(i)] =
      mul(gf, rpow[static_cast<std::size_t>(i - 1)], r);

  ModuleBasis basis;
  basis.kind = BasisKind::Gs;
  basis.polys.resize(static_cast<std::size_t>(l) + 1);
  for (int t = 0; t <= l; ++t) {
    Bivar p;
    p.yc.resize(static_cast<std::size_t>(t) + 1);
    if (t <= m) {
      // G^{m-t} (y - R)^t
      const Poly& gp = code.locator_product_power(m - t);
      for (int tau = 0; tau <= t; ++tau) {
        if (!binom_odd(t, tau)) continue;
        p.yc[static_cast<std::size_t>(tau)] =
            mul(gf, gp, rpow[static_cast<std::size_t>(t - tau)]);
      }
    } else {
      // y^{t-m} (y - R)^m
      for (int tau = t - m; tau <= t; ++tau) {
        if (!binom_odd(m, tau - (t - m))) continue;
        p.yc[static_cast<std::size_t>(tau)] = rpow[static_cast<std::size_t>(t - tau)];
      }
    }
    basis.polys[static_cast<std::size_t>(t)] = std::move(p);
  }
  return basis;
}

PolyMatrix flatten(const ModuleBasis& basis) {
  const int l = basis.l();
  PolyMatrix m(l + 1);
  for (int t = 0; t <= l; ++t)
    for (int tau = 0; tau <= l; ++tau)
      m.at(t, tau) = basis.polys[static_cast<std::size_t>(t)].coeff(tau);
  return m;
}

ModuleBasis unflatten(const PolyMatrix& m, BasisKind kind) {
  ModuleBasis basis;
  basis.kind = kind;
  basis.polys.resize(static_cast<std::size_t>(m.size()));
  for (int t = 0; t < m.size(); ++t) {
    Bivar p;
    p.yc.resize(static_cast<std::size_t>(m.size()));
    for (int tau = 0; tau < m.size(); ++tau) p.yc[static_cast<std::size_t>(tau)] = m.at(t, tau);
    p.trim();
    basis.polys[static_cast<std::size_t>(t)] = std::move(p);
  }
  return basis;
}

InterpResult interpolate(const Gf& gf, const ModuleBasis& basis,
                         WeightKind kind, int beta) {
  PolyMatrix a = weight_map(flatten(basis), kind, beta);
  a.reduce(gf);

  InterpResult res;
  res.row_ops = a.row_ops();
  res.minimal_row = a.minimal_row();
  res.weighted_row_degree = a.row_profile(res.minimal_row).degree;

  StageGuard stage(gf.counter(), Stage::Extraction);
  const PolyMatrix b = weight_demap(a, kind, beta);
  Bivar q;
  q.yc.resize(static_cast<std::size_t>(b.size()));
  for (int tau = 0; tau < b.size(); ++tau)
    q.yc[static_cast<std::size_t>(tau)] = b.at(res.minimal_row, tau);
  q.trim();
  res.q = std::move(q);
  return res;
}

namespace {

void rr_recurse(const Gf& gf, const Bivar& q, int depth, int k,
                std::vector<Fe>& prefix, std::set<Message>& out,
                const Bivar& top) {
  // Roots of Q(0, y) over the field; Q has been stripped of x-powers so
  // this univariate polynomial in y is nonzero.
  std::vector<Fe> uni(q.yc.size());
  for (std::size_t t = 0; t < q.yc.size(); ++t) uni[t] = q.yc[t].coeff(0);

  for (int rho = 0; rho < gf.q(); ++rho) {
    Fe acc = 0;
    for (std::size_t t = uni.size(); t-- > 0;)
      acc = static_cast<Fe>(gf.mul(acc, static_cast<Fe>(rho)) ^ uni[t]);
    if (acc != 0) continue;

    prefix[static_cast<std::size_t>(depth)] = static_cast<Fe>(rho);
    if (depth == k - 1) {
      Message f(prefix.begin(), prefix.end());
      if (eval_at_poly(gf, top, Poly(std::vector<Fe>(f))).is_zero())
        out.insert(std::move(f));
      continue;
    }

    // Q(x, x*y + rho), then strip the common power of x.
    Bivar next;
    next.yc.resize(q.yc.size());
    for (int s = 0; s < static_cast<int>(q.yc.size()); ++s) {
      Poly cs;
      for (int t = s; t < static_cast<int>(q.yc.size()); ++t) {
        if (!binom_odd(t, s)) continue;
        add_scaled_shifted(gf, cs, q.yc[static_cast<std::size_t>(t)],
                           gf.pow(static_cast<Fe>(rho), t - s), s);
      }
      next.yc[static_cast<std::size_t>(s)] = std::move(cs);
    }
    next.trim();
    if (next.is_zero()) continue;
    int strip = -1;
    for (const auto& c : next.yc) {
      if (c.is_zero()) continue;
      int v = 0;
      while (c.coeff(v) == 0) ++v;
      strip = (strip < 0) ? v : std::min(strip, v);
    }
    if (strip > 0)
      for (auto& c : next.yc)
        if (!c.is_zero()) c = shift_down_exact(c, strip);
    rr_recurse(gf, next, depth + 1, k, prefix, out, top);
  }
}

}  // namespace

std::vector<Message> rr_factor(const Gf& gf, const Bivar& q, int k) {
  if (q.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  StageGuard stage(gf.counter(), Stage::Factorization);

  Bivar q0 = q;
  int strip = -1;
  for (const auto& c : q0.yc) {
    if (c.is_zero()) continue;
    int v = 0;
    while (c.coeff(v) == 0) ++v;
    strip = (strip < 0) ? v : std::min(strip, v);
  }
  if (strip > 0)
    for (auto& c : q0.yc)
      if (!c.is_zero()) c = shift_down_exact(c, strip);

  std::set<Message> out;
  std::vector<Fe> prefix(static_cast<std::size_t>(k), 0);
  rr_recurse(gf, q0, 0, k, prefix, out, q);
  return {out.begin(), out.end()};
}

Message pick_best_soft(const Gf& gf, const RsCode& code,
                       std::span<const Message> candidates,
                       const std::vector<double>& log_pi) {
  StageGuard stage(gf.counter(), Stage::Selection);
  const int n = code.n();
  int best = -1;
  double best_score = 0;
  for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
    const Word cw = code.encode(gf, candidates[static_cast<std::size_t>(i)]);
    double score = 0;
    for (int j = 0; j < n; ++j)
      score += log_pi[static_cast<std::size_t>(cw[static_cast<std::size_t>(j)]) *
                          static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)];
    if (best < 0 || score > best_score ||
        (score == best_score &&
         candidates[static_cast<std::size_t>(i)] <
             candidates[static_cast<std::size_t>(best)])) {
      best = i;
      best_score = score;
    }
  }
  return candidates[static_cast<std::size_t>(best)];
}

Message pick_best_hard(const Gf& gf, const RsCode& code,
                       std::span<const Message> candidates,
                       std::span<const Fe> hard_word) {
  StageGuard stage(gf.counter(), Stage::Selection);
  int best = -1, best_d = 0;
  for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
    const Word cw = code.encode(gf, candidates[static_cast<std::size_t>(i)]);
    const int d = hamming_distance(cw, hard_word);
    if (best < 0 || d < best_d ||
        (d == best_d && candidates[static_cast<std::size_t>(i)] <
                            candidates[static_cast<std::size_t>(best)])) {
      best = i;
      best_d = d;
    }
  }
  return candidates[static_cast<std::size_t>(best)];
}

}  // namespace rsmm
