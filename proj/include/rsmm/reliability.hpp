#pragma once

#include <vector>

#include "rsmm/galois.hpp"

namespace rsmm {

// Channel a-posteriori probabilities, q rows (symbols) by n columns
// (positions); each column sums to 1.
class ReliabilityMatrix {
 public:
  ReliabilityMatrix(int q, int n)
      : q_(q), n_(n),
        p_(static_cast<std::size_t>(q) * static_cast<std::size_t>(n), 0.0) {}

  int q() const { return q_; }
  int n() const { return n_; }
  double& at(int i, int j) {
    return p_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
  }
  double at(int i, int j) const {
    return p_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
  }

  double column_sum(int j) const {
    double s = 0;
    for (int i = 0; i < q_; ++i) s += at(i, j);
    return s;
  }

  // Column argmax; ties resolved to the smallest symbol index.
  Fe hard_decision(int j) const {
    int best = 0;
    for (int i = 1; i < q_; ++i)
      if (at(i, j) > at(best, j)) best = i;
    return static_cast<Fe>(best);
  }
  std::vector<Fe> hard_word() const {
    std::vector<Fe> w(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) w[static_cast<std::size_t>(j)] = hard_decision(j);
    return w;
  }

  // Degenerate matrix putting probability 1 on the given word.
  static ReliabilityMatrix from_hard_word(int q, const std::vector<Fe>& word);

  // log(max(pi, floor)) for every entry, row-major; used by the maximum
  // likelihood candidate ranking.
  std::vector<double> log_floored(double floor_value) const;

 private:
  int q_, n_;
  std::vector<double> p_;
};

// Probabilities below this are clamped before ratios are formed, so
// saturated columns never divide by zero.
inline constexpr double kProbFloor = 1e-12;

}  // namespace rsmm
