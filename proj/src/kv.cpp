#include "rsmm/kv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rsmm {

MultiplicityMatrix pi_to_multiplicity(const ReliabilityMatrix& pi, int l) {
  if (l < 1) throw std::invalid_argument("target list size must be >= 1");
  const int q = pi.q(), n = pi.n();
  MultiplicityMatrix m(q, n);
  std::vector<int> colsum(static_cast<std::size_t>(n), 0);
  while (true) {
    int bi = -1, bj = -1;
    double best = 0.0;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < q; ++i) {
        const double score = pi.at(i, j) / (m.at(i, j) + 1);
        if (score > best) {
          best = score;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;  // no positive probability mass left
    if (colsum[static_cast<std::size_t>(bj)] == l) break;  // would exceed l
    ++m.at(bi, bj);
    ++colsum[static_cast<std::size_t>(bj)];
  }
  return m;
}

long long codeword_score(const MultiplicityMatrix& m, std::span<const Fe> c) {
  long long s = 0;
  for (int j = 0; j < m.n(); ++j)
    s += m.at(c[static_cast<std::size_t>(j)], j);
  return s;
}

BalancedLists balance_lists(const MultiplicityMatrix& m, int l) {
  const int q = m.q(), n = m.n();
  BalancedLists b;
  b.l = l;
  b.list.resize(static_cast<std::size_t>(n));
  b.mjt.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<int> remaining(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) remaining[static_cast<std::size_t>(i)] = m.at(i, j);
    auto& lj = b.list[static_cast<std::size_t>(j)];
    while (true) {
      int best = -1;
      for (int i = 0; i < q; ++i)
        if (remaining[static_cast<std::size_t>(i)] > 0 &&
            (best < 0 || remaining[static_cast<std::size_t>(i)] >
                             remaining[static_cast<std::size_t>(best)]))
          best = i;
      if (best < 0) break;
      lj.push_back(static_cast<Fe>(best));
      --remaining[static_cast<std::size_t>(best)];
    }
    // m_j(t): maximum multiset multiplicity within the tail positions t...
    auto& mj = b.mjt[static_cast<std::size_t>(j)];
    mj.assign(static_cast<std::size_t>(l) + 1, 0);
    for (int t = 0; t <= l && t < static_cast<int>(lj.size()); ++t) {
      std::map<Fe, int> tail;
      int mx = 0;
      for (std::size_t e = static_cast<std::size_t>(t); e < lj.size(); ++e)
        mx = std::max(mx, ++tail[lj[e]]);
      mj[static_cast<std::size_t>(t)] = mx;
    }
  }
  return b;
}

ModuleBasis build_kv_basis(const Gf& gf, const RsCode& code,
                           const BalancedLists& b, int l) {
  const int n = code.n();
  for (int j = 0; j < n; ++j)
    if (b.list_len(j) > l)
      throw std::invalid_argument("balanced list longer than the target list size");
  StageGuard stage(gf.counter(), Stage::Formulation);

  // F_e interpolates the e-th points of all balanced lists (zeros where a
  // list is exhausted).
  std::vector<Poly> f(static_cast<std::size_t>(std::max(l, 1)));
  std::vector<Fe> ys(static_cast<std::size_t>(n));
  for (int e = 0; e < l; ++e) {
    for (int j = 0; j < n; ++j) ys[static_cast<std::size_t>(j)] = b.point(j, e);
    f[static_cast<std::size_t>(e)] = code.interpolate_received(gf, ys);
  }

  ModuleBasis basis;
  basis.kind = BasisKind::Kv;
  basis.polys.resize(static_cast<std::size_t>(l) + 1);
  Bivar w;  // prod_{e < t} (y - F_e), grown incrementally
  w.yc = {Poly::constant(1)};
  for (int t = 0; t <= l; ++t) {
    if (t > 0) {
      Bivar lin;
      lin.yc = {f[static_cast<std::size_t>(t - 1)], Poly::constant(1)};
      w = bivar_mul(gf, w, lin);
    }
    std::vector<Fe> roots;
    for (int j = 0; j < n; ++j)
      roots.insert(roots.end(), static_cast<std::size_t>(b.mj(j, t)),
                   code.locators()[static_cast<std::size_t>(j)]);
    const Poly gt = from_roots(gf, roots);
    Bivar p;
    p.yc.resize(w.yc.size());
    for (std::size_t tau = 0; tau < w.yc.size(); ++tau)
      p.yc[tau] = mul(gf, gt, w.yc[tau]);
    basis.polys[static_cast<std::size_t>(t)] = std::move(p);
  }
  return basis;
}

namespace {

KvResult finish_kv(const Gf& gf, const RsCode& code, const ReliabilityMatrix& pi,
                   MultiplicityMatrix m, const Bivar& q, MulCounter& ops,
                   const Poly& h_shift) {
  KvResult res;
  res.mult = std::move(m);
  res.wdeg_q = weighted_degree(q, code.k() - 1);
  for (const Message& f1 : rr_factor(gf, q, code.k())) {
    Message f(static_cast<std::size_t>(code.k()), 0);
    for (int i = 0; i < code.k(); ++i)
      f[static_cast<std::size_t>(i)] =
          static_cast<Fe>(f1[static_cast<std::size_t>(i)] ^ h_shift.coeff(i));
    res.candidates.push_back(std::move(f));
  }
  std::sort(res.candidates.begin(), res.candidates.end());
  if (!res.candidates.empty())
    res.best = pick_best_soft(gf, code, res.candidates,
                              pi.log_floored(kProbFloor));
  res.ops = ops;
  return res;
}

}  // namespace

KvResult kv_mm_decode(const RsCode& code, const ReliabilityMatrix& pi, int l) {
  MulCounter ops;
  const Gf gf(code.field(), &ops);
  MultiplicityMatrix m = pi_to_multiplicity(pi, l);
  const BalancedLists b = balance_lists(m, l);
  const ModuleBasis basis = build_kv_basis(gf, code, b, l);
  const InterpResult ir =
      interpolate(gf, basis, WeightKind::Ascending, code.k() - 1);
  return finish_kv(gf, code, pi, std::move(m), ir.q, ops, Poly());
}

KvReencoding kv_reencoding(const Gf& gf, const RsCode& code,
                           const BalancedLists& b, int l) {
  const int n = code.n(), k = code.k();
  StageGuard stage(gf.counter(), Stage::Reencoding);

  KvReencoding re;
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int c) { return b.mj(a, 0) > b.mj(c, 0); });
  re.upsilon.assign(idx.begin(), idx.begin() + k);
  re.upsilon_bar.assign(idx.begin() + k, idx.end());
  std::sort(re.upsilon.begin(), re.upsilon.end());
  std::sort(re.upsilon_bar.begin(), re.upsilon_bar.end());

  std::vector<Fe> xs, ys;
  for (int j : re.upsilon) {
    xs.push_back(code.locators()[static_cast<std::size_t>(j)]);
    ys.push_back(b.point(j, 0));
  }
  re.h = lagrange_interpolate(gf, xs, ys);
  re.psi = from_roots(gf, xs);
  re.phi = Poly::constant(1);
  for (int j : re.upsilon) {
    std::vector<Fe> rep(static_cast<std::size_t>(b.mj(j, 0)),
                        code.locators()[static_cast<std::size_t>(j)]);
    re.phi = mul(gf, re.phi, from_roots(gf, rep));
  }

  re.h_at.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    re.h_at[static_cast<std::size_t>(j)] =
        eval(gf, re.h, code.locators()[static_cast<std::size_t>(j)]);

  re.w.assign(static_cast<std::size_t>(l), std::vector<Fe>(static_cast<std::size_t>(n), 0));
  re.lambda_bar.assign(static_cast<std::size_t>(l), {});
  for (int e = 0; e < l; ++e) {
    for (int j = 0; j < n; ++j)
      if (e < b.list_len(j))
        re.w[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] =
            static_cast<Fe>(b.point(j, e) ^ re.h_at[static_cast<std::size_t>(j)]);
    for (int j : re.upsilon)
      if (re.w[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] != 0)
        re.lambda_bar[static_cast<std::size_t>(e)].push_back(j);
  }
  return re;
}

Poly kv_t_poly(const Gf& gf, const RsCode& code, const KvReencoding& re,
               int epsilon) {
  // T_e interpolates w~_j over upsilon_bar plus the nonzero-shift columns
  // of upsilon; w~_j = w_j^(e) / varpi_j.
  std::vector<int> support = re.upsilon_bar;
  support.insert(support.end(), re.lambda_bar[static_cast<std::size_t>(epsilon)].begin(),
                 re.lambda_bar[static_cast<std::size_t>(epsilon)].end());
  std::sort(support.begin(), support.end());

  std::vector<Fe> xs;
  xs.reserve(support.size());
  for (int j : support) xs.push_back(code.locators()[static_cast<std::size_t>(j)]);
  const Poly prod = from_roots(gf, xs);

  Poly acc;
  const auto& pc = prod.coeffs();
  for (int j : support) {
    const Fe wj = re.w[static_cast<std::size_t>(epsilon)][static_cast<std::size_t>(j)];
    if (wj == 0) continue;
    const Fe aj = code.locators()[static_cast<std::size_t>(j)];
    std::vector<Fe> nj(support.size(), 0);
    Fe carry = 0;
    for (std::size_t i = support.size(); i-- > 0;) {
      carry = static_cast<Fe>(pc[i + 1] ^ gf.mul(carry, aj));
      nj[i] = carry;
    }
    const Fe c = gf.div(wj, code.lagrange_denoms()[static_cast<std::size_t>(j)]);
    add_scaled_shifted(gf, acc, Poly(std::move(nj)), c, 0);
  }
  return acc;
}

ModuleBasis build_kv_re_basis(const Gf& gf, const RsCode& code,
                              const BalancedLists& b, const KvReencoding& re,
                              int l) {
  StageGuard stage(gf.counter(), Stage::Formulation);

  ModuleBasis basis;
  basis.kind = BasisKind::KvRe;
  basis.polys.resize(static_cast<std::size_t>(l) + 1);

  Bivar w;  // prod_{e < t} (y * u_e - T_e)
  w.yc = {Poly::constant(1)};
  for (int t = 0; t <= l; ++t) {
    if (t > 0) {
      const int e = t - 1;
      std::vector<Fe> ue;
      for (int j : re.lambda_bar[static_cast<std::size_t>(e)])
        ue.push_back(code.locators()[static_cast<std::size_t>(j)]);
      Bivar lin;
      lin.yc = {kv_t_poly(gf, code, re, e), from_roots(gf, ue)};
      w = bivar_mul(gf, w, lin);
    }
    std::vector<Fe> roots;
    for (int j : re.upsilon_bar)
      roots.insert(roots.end(), static_cast<std::size_t>(b.mj(j, t)),
                   code.locators()[static_cast<std::size_t>(j)]);
    // Lambda-bar_l is empty: no list holds more than l points.
    if (t < l)
      for (int j : re.lambda_bar[static_cast<std::size_t>(t)])
        roots.push_back(code.locators()[static_cast<std::size_t>(j)]);
    const Poly gt = from_roots(gf, roots);
    Bivar p;
    p.yc.resize(w.yc.size());
    for (std::size_t tau = 0; tau < w.yc.size(); ++tau)
      p.yc[tau] = mul(gf, gt, w.yc[tau]);
    basis.polys[static_cast<std::size_t>(t)] = std::move(p);
  }
  return basis;
}

KvResult kv_mm_re_decode(const RsCode& code, const ReliabilityMatrix& pi, int l) {
  MulCounter ops;
  const Gf gf(code.field(), &ops);
  MultiplicityMatrix m = pi_to_multiplicity(pi, l);
  const BalancedLists b = balance_lists(m, l);
  const KvReencoding re = kv_reencoding(gf, code, b, l);
  const ModuleBasis basis = build_kv_re_basis(gf, code, b, re, l);
  const InterpResult ir = interpolate(gf, basis, WeightKind::Descending, 1);

  // Q = phi * Q~(x, y/psi)
  Bivar q;
  {
    StageGuard stage(gf.counter(), Stage::Extraction);
    q.yc.resize(ir.q.yc.size());
    Poly psip = Poly::constant(1);
    for (std::size_t tau = 0; tau < ir.q.yc.size(); ++tau) {
      if (!ir.q.yc[tau].is_zero())
        q.yc[tau] = div_exact(gf, mul(gf, ir.q.yc[tau], re.phi), psip);
      if (tau + 1 < ir.q.yc.size()) psip = mul(gf, psip, re.psi);
    }
    q.trim();
  }
  return finish_kv(gf, code, pi, std::move(m), q, ops, re.h);
}

}  // namespace rsmm
