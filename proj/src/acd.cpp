#include "rsmm/acd.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>

namespace rsmm {

ReliabilityOrder reliability_order(const ReliabilityMatrix& pi) {
  const int q = pi.q(), n = pi.n();
  ReliabilityOrder ord;
  ord.gamma.resize(static_cast<std::size_t>(n));
  ord.best.resize(static_cast<std::size_t>(n));
  ord.second.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    int i1 = 0;
    for (int i = 1; i < q; ++i)
      if (pi.at(i, j) > pi.at(i1, j)) i1 = i;
    int i2 = (i1 == 0) ? 1 : 0;
    for (int i = 0; i < q; ++i)
      if (i != i1 && pi.at(i, j) > pi.at(i2, j)) i2 = i;
    const double p1 = std::max(pi.at(i1, j), kProbFloor);
    const double p2 = std::max(pi.at(i2, j), kProbFloor);
    ord.gamma[static_cast<std::size_t>(j)] = p2 / p1;
    ord.best[static_cast<std::size_t>(j)] = static_cast<Fe>(i1);
    ord.second[static_cast<std::size_t>(j)] = static_cast<Fe>(i2);
  }
  ord.order.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) ord.order[static_cast<std::size_t>(j)] = j;
  std::stable_sort(ord.order.begin(), ord.order.end(), [&](int a, int b) {
    return ord.gamma[static_cast<std::size_t>(a)] <
           ord.gamma[static_cast<std::size_t>(b)];
  });
  return ord;
}

std::vector<TestVector> build_test_vectors(const ReliabilityOrder& ord, int eta) {
  const int n = static_cast<int>(ord.order.size());
  if (eta < 0 || eta >= n) throw std::invalid_argument("eta out of range");
  std::vector<TestVector> out;
  out.reserve(static_cast<std::size_t>(1) << eta);
  for (std::uint32_t u = 0; u < (1u << eta); ++u) {
    TestVector tv;
    tv.flip_mask = u;
    tv.symbols = ord.best;
    for (int b = 0; b < eta; ++b)
      if (u & (1u << b)) {
        const int j = ord.order[static_cast<std::size_t>(n - eta + b)];
        tv.symbols[static_cast<std::size_t>(j)] =
            ord.second[static_cast<std::size_t>(j)];
      }
    out.push_back(std::move(tv));
  }
  return out;
}

std::vector<TestVector> build_test_vectors(const ReliabilityMatrix& pi, int eta) {
  return build_test_vectors(reliability_order(pi), eta);
}

GsTrace gs_decode_word(const Gf& gf, const RsCode& code, const TestVector& tv,
                       int m, int l) {
  GsTrace trace;
  trace.vector = tv;
  const ModuleBasis basis = build_gs_basis(gf, code, tv.symbols, m, l);
  const InterpResult ir = interpolate(gf, basis, WeightKind::Ascending,
                                      code.k() - 1);
  trace.wdeg_q = weighted_degree(ir.q, code.k() - 1);
  trace.roots = rr_factor(gf, ir.q, code.k());
  return trace;
}

ReencodingContext reencode_context(const Gf& gf, const RsCode& code,
                                   const ReliabilityOrder& ord, int eta) {
  const int n = code.n(), k = code.k();
  if (eta < 0 || eta > n - k)
    throw std::invalid_argument("re-encoding requires eta <= n - k");
  StageGuard stage(gf.counter(), Stage::Reencoding);

  ReencodingContext ctx;
  ctx.theta.assign(ord.order.begin(), ord.order.begin() + k);
  ctx.theta_bar.assign(ord.order.begin() + k, ord.order.end());
  std::sort(ctx.theta.begin(), ctx.theta.end());
  std::sort(ctx.theta_bar.begin(), ctx.theta_bar.end());

  std::vector<Fe> xs, ys;
  xs.reserve(static_cast<std::size_t>(k));
  ys.reserve(static_cast<std::size_t>(k));
  for (int j : ctx.theta) {
    xs.push_back(code.locators()[static_cast<std::size_t>(j)]);
    ys.push_back(ord.best[static_cast<std::size_t>(j)]);
  }
  ctx.h = lagrange_interpolate(gf, xs, ys);
  ctx.v = from_roots(gf, xs);
  ctx.g_tilde = div_exact(gf, code.locator_product(), ctx.v);

  ctx.h_at.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    ctx.h_at[static_cast<std::size_t>(j)] =
        eval(gf, ctx.h, code.locators()[static_cast<std::size_t>(j)]);
  return ctx;
}

namespace {

// R~_u of the transformed vector z: interpolates z_j / V at the theta_bar
// locators; degree < n - k.
Poly reduced_interpolant(const Gf& gf, const RsCode& code,
                         const ReencodingContext& ctx,
                         std::span<const Fe> z) {
  Poly acc;
  const auto& gt = ctx.g_tilde.coeffs();
  const int nk = static_cast<int>(ctx.theta_bar.size());
  for (int j : ctx.theta_bar) {
    const Fe zj = z[static_cast<std::size_t>(j)];
    if (zj == 0) continue;
    const Fe aj = code.locators()[static_cast<std::size_t>(j)];
    // g_tilde / (x - alpha_j) by synthetic division.
    std::vector<Fe> nj(static_cast<std::size_t>(nk), 0);
    Fe carry = 0;
    for (std::size_t i = static_cast<std::size_t>(nk); i-- > 0;) {
      carry = static_cast<Fe>(gt[i + 1] ^ gf.mul(carry, aj));
      nj[i] = carry;
    }
    const Fe c = gf.div(zj, code.lagrange_denoms()[static_cast<std::size_t>(j)]);
    add_scaled_shifted(gf, acc, Poly(std::move(nj)), c, 0);
  }
  return acc;
}

// Generators of the transformed module: G~^{m-t}(y - R~)^t for t <= m and
// (yV)^{t-m}(y - R~)^m above.
ModuleBasis build_acd_re_basis(const Gf& gf, const RsCode& code,
                               const ReencodingContext& ctx, const Poly& rt,
                               int m, int l) {
  StageGuard stage(gf.counter(), Stage::Formulation);
  std::vector<Poly> rpow(static_cast<std::size_t>(m) + 1);
  rpow[0] = Poly::constant(1);
  for (int i = 1; i <= m; ++i)
    rpow[static_cast<std::size_t>(i)] = mul(gf, rpow[static_cast<std::size_t>(i - 1)], rt);
  std::vector<Poly> gpow(static_cast<std::size_t>(m) + 1);
  gpow[0] = Poly::constant(1);
  for (int i = 1; i <= m; ++i)
    gpow[static_cast<std::size_t>(i)] =
        mul(gf, gpow[static_cast<std::size_t>(i - 1)], ctx.g_tilde);
  std::vector<Poly> vpow(static_cast<std::size_t>(std::max(l - m, 0)) + 1);
  vpow[0] = Poly::constant(1);
  for (int i = 1; i <= l - m; ++i)
    vpow[static_cast<std::size_t>(i)] =
        mul(gf, vpow[static_cast<std::size_t>(i - 1)], ctx.v);

  auto binom_odd = [](int nn, int kk) { return (kk & nn) == kk; };

  ModuleBasis basis;
  basis.kind = BasisKind::AcdRe;
  basis.polys.resize(static_cast<std::size_t>(l) + 1);
  for (int t = 0; t <= l; ++t) {
    Bivar p;
    p.yc.resize(static_cast<std::size_t>(t) + 1);
    if (t <= m) {
      for (int tau = 0; tau <= t; ++tau) {
        if (!binom_odd(t, tau)) continue;
        p.yc[static_cast<std::size_t>(tau)] =
            mul(gf, gpow[static_cast<std::size_t>(m - t)],
                rpow[static_cast<std::size_t>(t - tau)]);
      }
    } else {
      const Poly& vp = vpow[static_cast<std::size_t>(t - m)];
      for (int tau = t - m; tau <= t; ++tau) {
        if (!binom_odd(m, tau - (t - m))) continue;
        p.yc[static_cast<std::size_t>(tau)] =
            mul(gf, vp, rpow[static_cast<std::size_t>(t - tau)]);
      }
    }
    basis.polys[static_cast<std::size_t>(t)] = std::move(p);
  }
  return basis;
}

// Q(x, y) = V^m Q~(x, y/V): multiply the low y-coefficients, divide the
// high ones; divisibility is guaranteed by the module isomorphism.
Bivar restore_q(const Gf& gf, const Bivar& qt, const Poly& v, int m) {
  StageGuard stage(gf.counter(), Stage::Extraction);
  Bivar q;
  q.yc.resize(qt.yc.size());
  for (int tau = 0; tau < static_cast<int>(qt.yc.size()); ++tau) {
    const Poly& c = qt.yc[static_cast<std::size_t>(tau)];
    if (c.is_zero()) continue;
    if (tau <= m) {
      Poly vp = Poly::constant(1);
      for (int i = 0; i < m - tau; ++i) vp = mul(gf, vp, v);
      q.yc[static_cast<std::size_t>(tau)] = mul(gf, c, vp);
    } else {
      Poly vp = Poly::constant(1);
      for (int i = 0; i < tau - m; ++i) vp = mul(gf, vp, v);
      q.yc[static_cast<std::size_t>(tau)] = div_exact(gf, c, vp);
    }
  }
  q.trim();
  return q;
}

AcdResult merge_traces(const Gf& gf, const RsCode& code,
                       const ReliabilityMatrix& pi,
                       std::vector<GsTrace> traces, MulCounter ops) {
  AcdResult res;
  res.vectors = std::move(traces);
  std::set<Message> all;
  for (const auto& tr : res.vectors)
    all.insert(tr.roots.begin(), tr.roots.end());
  res.candidates.assign(all.begin(), all.end());
  if (!res.candidates.empty()) {
    const Gf sel(gf.table(), &ops);
    res.best = pick_best_soft(sel, code, res.candidates,
                              pi.log_floored(kProbFloor));
  }
  res.ops = ops;
  return res;
}

}  // namespace

AcdResult acd_mm_decode(const RsCode& code, const ReliabilityMatrix& pi,
                        int eta, int m, int l, bool parallel) {
  if (m > l) throw std::invalid_argument("require m <= l");
  const ReliabilityOrder ord = reliability_order(pi);
  const std::vector<TestVector> tvs = build_test_vectors(ord, eta);

  // One private counter per vector; merged in slot order so the outcome is
  // identical however the vector jobs are scheduled.
  std::vector<GsTrace> traces(tvs.size());
  std::vector<MulCounter> counters(tvs.size());
  auto job = [&](std::size_t u) {
    const Gf gf(code.field(), &counters[u]);
    traces[u] = gs_decode_word(gf, code, tvs[u], m, l);
  };
  if (parallel) {
    std::vector<std::future<void>> futs;
    futs.reserve(tvs.size());
    for (std::size_t u = 0; u < tvs.size(); ++u)
      futs.push_back(std::async(std::launch::async, job, u));
    for (auto& f : futs) f.get();
  } else {
    for (std::size_t u = 0; u < tvs.size(); ++u) job(u);
  }

  MulCounter ops;
  for (const auto& c : counters) ops.merge(c);
  return merge_traces(Gf(code.field()), code, pi, std::move(traces), ops);
}

AcdResult acd_mm_re_decode(const RsCode& code, const ReliabilityMatrix& pi,
                           int eta, int m, int l, bool parallel) {
  if (m > l) throw std::invalid_argument("require m <= l");
  const ReliabilityOrder ord = reliability_order(pi);
  const std::vector<TestVector> tvs = build_test_vectors(ord, eta);

  MulCounter shared_ops;
  const Gf gf(code.field(), &shared_ops);
  const ReencodingContext ctx = reencode_context(gf, code, ord, eta);

  std::vector<GsTrace> traces(tvs.size());
  std::vector<MulCounter> counters(tvs.size());
  auto job = [&](std::size_t u) {
    const Gf vgf(code.field(), &counters[u]);
    // Transformed test-vector z = r_u - H(alpha_j); zero on theta.
    std::vector<Fe> z(tvs[u].symbols.size());
    for (std::size_t j = 0; j < z.size(); ++j)
      z[j] = static_cast<Fe>(tvs[u].symbols[j] ^ ctx.h_at[j]);
    Poly rt;
    {
      StageGuard stage(&counters[u], Stage::Formulation);
      rt = reduced_interpolant(vgf, code, ctx, z);
    }
    const ModuleBasis basis = build_acd_re_basis(vgf, code, ctx, rt, m, l);
    const InterpResult ir =
        interpolate(vgf, basis, WeightKind::Descending, 1);
    const Bivar q = restore_q(vgf, ir.q, ctx.v, m);

    GsTrace trace;
    trace.vector = tvs[u];
    trace.wdeg_q = weighted_degree(q, code.k() - 1);
    for (const Message& f1 : rr_factor(vgf, q, code.k())) {
      // message estimate = f' + H
      Message f(static_cast<std::size_t>(code.k()), 0);
      for (int i = 0; i < code.k(); ++i)
        f[static_cast<std::size_t>(i)] =
            static_cast<Fe>(f1[static_cast<std::size_t>(i)] ^ ctx.h.coeff(i));
      trace.roots.push_back(std::move(f));
    }
    std::sort(trace.roots.begin(), trace.roots.end());
    traces[u] = std::move(trace);
  };
  if (parallel) {
    std::vector<std::future<void>> futs;
    futs.reserve(tvs.size());
    for (std::size_t u = 0; u < tvs.size(); ++u)
      futs.push_back(std::async(std::launch::async, job, u));
    for (auto& f : futs) f.get();
  } else {
    for (std::size_t u = 0; u < tvs.size(); ++u) job(u);
  }

  for (const auto& c : counters) shared_ops.merge(c);
  return merge_traces(gf, code, pi, std::move(traces), shared_ops);
}

}  // namespace rsmm
