#pragma once

#include <random>

#include "rsmm/interp.hpp"
#include "rsmm/reliability.hpp"
#include "rsmm/rscode.hpp"

namespace rsmm::test {

// Deterministic generator for randomized tests.
class Rand {
 public:
  explicit Rand(std::uint64_t seed) : gen_(seed) {}
  Fe symbol(int q) { return static_cast<Fe>(gen_() % static_cast<std::uint64_t>(q)); }
  int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }
  double unit() { return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53; }

  Poly poly(const Gf& gf, int max_deg) {
    std::vector<Fe> c(static_cast<std::size_t>(below(max_deg + 1)) + 1);
    for (auto& v : c) v = symbol(gf.q());
    return Poly(std::move(c));
  }
  Poly nonzero_poly(const Gf& gf, int max_deg) {
    while (true) {
      Poly p = poly(gf, max_deg);
      if (!p.is_zero()) return p;
    }
  }
  Message message(const RsCode& code) {
    Message m(static_cast<std::size_t>(code.k()));
    for (auto& s : m) s = symbol(code.field().size());
    return m;
  }
  // Word at exact Hamming distance nerr from cw.
  Word corrupt(const RsCode& code, const Word& cw, int nerr) {
    Word w = cw;
    std::vector<int> pos(static_cast<std::size_t>(code.n()));
    for (int j = 0; j < code.n(); ++j) pos[static_cast<std::size_t>(j)] = j;
    for (int e = 0; e < nerr; ++e) {
      const int pick = e + below(code.n() - e);
      std::swap(pos[static_cast<std::size_t>(e)], pos[static_cast<std::size_t>(pick)]);
      const int j = pos[static_cast<std::size_t>(e)];
      Fe delta = 0;
      while (delta == 0) delta = symbol(code.field().size());
      w[static_cast<std::size_t>(j)] = static_cast<Fe>(w[static_cast<std::size_t>(j)] ^ delta);
    }
    return w;
  }
  // Random column-normalized reliability matrix biased toward the word.
  ReliabilityMatrix soft_matrix(const RsCode& code, const Word& word,
                                double noise) {
    const int q = code.field().size();
    ReliabilityMatrix pi(q, code.n());
    for (int j = 0; j < code.n(); ++j) {
      double sum = 0;
      for (int i = 0; i < q; ++i) {
        double v = unit() * noise;
        if (i == word[static_cast<std::size_t>(j)]) v += 1.0;
        pi.at(i, j) = v;
        sum += v;
      }
      for (int i = 0; i < q; ++i) pi.at(i, j) /= sum;
    }
    return pi;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace rsmm::test
