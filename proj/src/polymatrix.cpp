#include "rsmm/polymatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rsmm {

RowProfile PolyMatrix::row_profile(int t) const {
  RowProfile p;
  for (int tau = 0; tau < size_; ++tau) {
    const int d = at(t, tau).deg();
    if (d >= p.degree && d != Poly::kZeroDeg) {
      p.degree = d;
      p.leading_position = tau;  // >= keeps the largest attaining column
    }
  }
  if (p.leading_position < 0)
    throw std::runtime_error("degenerate basis: all-zero row");
  const Poly& lead = at(t, p.leading_position);
  p.lt_coeff = lead.leading();
  p.lt_degree = lead.deg();
  return p;
}

long long PolyMatrix::degree() const {
  long long sum = 0;
  for (int t = 0; t < size_; ++t) sum += row_profile(t).degree;
  return sum;
}

bool PolyMatrix::weak_popov() const {
  std::vector<bool> seen(static_cast<std::size_t>(size_), false);
  for (int t = 0; t < size_; ++t) {
    bool zero_row = true;
    for (int tau = 0; tau < size_ && zero_row; ++tau)
      zero_row = at(t, tau).is_zero();
    if (zero_row) return false;
    const int lp = row_profile(t).leading_position;
    if (seen[static_cast<std::size_t>(lp)]) return false;
    seen[static_cast<std::size_t>(lp)] = true;
  }
  return true;
}

void PolyMatrix::reduce(const Gf& gf) {
  StageGuard stage(gf.counter(), Stage::Reduction);

  std::vector<RowProfile> prof(static_cast<std::size_t>(size_));
  for (int t = 0; t < size_; ++t) prof[static_cast<std::size_t>(t)] = row_profile(t);

  while (true) {
    // Lowest leading position shared by at least two rows.
    int reducer = -1, reduced = -1;
    for (int lp = 0; lp < size_ && reducer < 0; ++lp) {
      int best = -1, second = -1;
      for (int t = 0; t < size_; ++t) {
        if (prof[static_cast<std::size_t>(t)].leading_position != lp) continue;
        auto better = [&](int a, int b) {
          if (b < 0) return true;
          const auto &pa = prof[static_cast<std::size_t>(a)],
                     &pb = prof[static_cast<std::size_t>(b)];
          if (pa.degree != pb.degree) return pa.degree < pb.degree;
          return a < b;
        };
        if (better(t, best)) {
          second = best;
          best = t;
        } else if (better(t, second)) {
          second = t;
        }
      }
      if (second >= 0) {
        reducer = best;
        reduced = second;
      }
    }
    if (reducer < 0) break;  // weak Popov form reached

    const auto& pr = prof[static_cast<std::size_t>(reducer)];
    const auto& px = prof[static_cast<std::size_t>(reduced)];
    const Fe c = gf.mul(px.lt_coeff, gf.inv(pr.lt_coeff));
    const int s = px.lt_degree - pr.lt_degree;
    for (int tau = 0; tau < size_; ++tau)
      add_scaled_shifted(gf, at(reduced, tau), at(reducer, tau), c, s);
    ++row_ops_;

    bool zero_row = true;
    for (int tau = 0; tau < size_ && zero_row; ++tau)
      zero_row = at(reduced, tau).is_zero();
    if (zero_row) throw std::runtime_error("singular basis: zero row produced");
    prof[static_cast<std::size_t>(reduced)] = row_profile(reduced);
  }
}

int PolyMatrix::minimal_row() const {
  int best = 0;
  RowProfile bp = row_profile(0);
  for (int t = 1; t < size_; ++t) {
    const RowProfile p = row_profile(t);
    if (p.degree < bp.degree ||
        (p.degree == bp.degree &&
         p.leading_position < bp.leading_position)) {
      best = t;
      bp = p;
    }
  }
  return best;
}

Poly PolyMatrix::determinant(const Gf& gf) const {
  // Triangular fast paths: product of the diagonal.
  auto triangular = [&](bool lower) {
    for (int t = 0; t < size_; ++t)
      for (int tau = lower ? t + 1 : 0; tau < (lower ? size_ : t); ++tau)
        if (!at(t, tau).is_zero()) return false;
    return true;
  };
  if (triangular(true) || triangular(false)) {
    Poly det = Poly::constant(1);
    for (int t = 0; t < size_; ++t) {
      det = mul(gf, det, at(t, t));
      if (det.is_zero()) return det;
    }
    return det;
  }

  // Bareiss fraction-free elimination; divisions are exact. Row swaps do
  // not flip signs in characteristic 2.
  PolyMatrix w = *this;
  Poly prev = Poly::constant(1);
  for (int k = 0; k + 1 < size_; ++k) {
    if (w.at(k, k).is_zero()) {
      int swap = -1;
      for (int t = k + 1; t < size_ && swap < 0; ++t)
        if (!w.at(t, k).is_zero()) swap = t;
      if (swap < 0) return Poly();  // singular
      for (int tau = 0; tau < size_; ++tau)
        std::swap(w.at(k, tau), w.at(swap, tau));
    }
    for (int t = k + 1; t < size_; ++t) {
      for (int tau = k + 1; tau < size_; ++tau) {
        Poly num = add(mul(gf, w.at(t, tau), w.at(k, k)),
                       mul(gf, w.at(t, k), w.at(k, tau)));
        w.at(t, tau) = num.is_zero() ? Poly() : div_exact(gf, num, prev);
      }
      w.at(t, k) = Poly();
    }
    prev = w.at(k, k);
  }
  return w.at(size_ - 1, size_ - 1);
}

std::string PolyMatrix::debug_dump() const {
  std::ostringstream os;
  for (int t = 0; t < size_; ++t) {
    for (int tau = 0; tau < size_; ++tau) {
      if (tau) os << ',';
      const auto& c = at(t, tau).coeffs();
      if (c.empty()) {
        os << '0';
        continue;
      }
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ' ';
        os << std::hex << static_cast<unsigned>(c[i]) << std::dec;
      }
    }
    os << '\n';
  }
  return os.str();
}

PolyMatrix weight_map(const PolyMatrix& m, WeightKind kind, int beta) {
  if (beta < 0) throw std::invalid_argument("weight exponent must be >= 0");
  const int l = m.size() - 1;
  PolyMatrix out = m;
  for (int t = 0; t <= l; ++t)
    for (int tau = 0; tau <= l; ++tau) {
      const int s = (kind == WeightKind::Ascending ? tau : l - tau) * beta;
      out.at(t, tau) = shift_up(m.at(t, tau), s);
    }
  return out;
}

PolyMatrix weight_demap(const PolyMatrix& m, WeightKind kind, int beta) {
  if (beta < 0) throw std::invalid_argument("weight exponent must be >= 0");
  const int l = m.size() - 1;
  PolyMatrix out = m;
  for (int t = 0; t <= l; ++t)
    for (int tau = 0; tau <= l; ++tau) {
      const int s = (kind == WeightKind::Ascending ? tau : l - tau) * beta;
      try {
        out.at(t, tau) = shift_down_exact(m.at(t, tau), s);
      } catch (const std::runtime_error&) {
        throw std::runtime_error("corrupted basis: entry not divisible by weight power");
      }
    }
  return out;
}

}  // namespace rsmm
