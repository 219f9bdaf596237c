#pragma once

#include <cstdint>
#include <optional>

#include "rsmm/interp.hpp"
#include "rsmm/reliability.hpp"

namespace rsmm {

// Interpolation multiplicities, q rows by n columns.
class MultiplicityMatrix {
 public:
  MultiplicityMatrix(int q, int n)
      : q_(q), n_(n),
        m_(static_cast<std::size_t>(q) * static_cast<std::size_t>(n), 0) {}

  int q() const { return q_; }
  int n() const { return n_; }
  int& at(int i, int j) {
    return m_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
  }
  int at(int i, int j) const {
    return m_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
  }
  int column_sum(int j) const {
    int s = 0;
    for (int i = 0; i < q_; ++i) s += at(i, j);
    return s;
  }
  int max_column_sum() const {
    int s = 0;
    for (int j = 0; j < n_; ++j) s = std::max(s, column_sum(j));
    return s;
  }

 private:
  int q_, n_;
  std::vector<int> m_;
};

// Greedy proportional multiplicity assignment: repeatedly bump the entry
// maximizing pi_ij / (m_ij + 1); an assignment into a column already
// holding l points ends the transform, so column sums never exceed l and
// the maximum reaches l. Score ties go to the smallest (j, i).
MultiplicityMatrix pi_to_multiplicity(const ReliabilityMatrix& pi, int l);

// S_M(c) = sum_j m_{i_j, j} with i_j the row of symbol c_j.
long long codeword_score(const MultiplicityMatrix& m, std::span<const Fe> c);

// Per-column balanced point lists and the tail multiplicities m_j(t).
struct BalancedLists {
  std::vector<std::vector<Fe>> list;  // list[j][e] = y_j^(e), length m_j
  std::vector<std::vector<int>> mjt;  // mjt[j][t] for t = 0..l
  int l = 0;

  int list_len(int j) const { return static_cast<int>(list[static_cast<std::size_t>(j)].size()); }
  // y_j^(e), with the convention that exhausted positions read 0.
  Fe point(int j, int e) const {
    const auto& lj = list[static_cast<std::size_t>(j)];
    return e < static_cast<int>(lj.size()) ? lj[static_cast<std::size_t>(e)] : 0;
  }
  int mj(int j, int t) const {
    const auto& mj_ = mjt[static_cast<std::size_t>(j)];
    return t < static_cast<int>(mj_.size()) ? mj_[static_cast<std::size_t>(t)] : 0;
  }
};

// Repeatedly moves a most-frequent point of each column list (ties to the
// smallest symbol) and records the tail maxima of the result.
BalancedLists balance_lists(const MultiplicityMatrix& m, int l);

// Generators prod_j (x-alpha_j)^{m_j(t)} prod_{e<t} (y - F_e).
ModuleBasis build_kv_basis(const Gf& gf, const RsCode& code,
                           const BalancedLists& b, int l);

struct KvResult {
  std::vector<Message> candidates;
  std::optional<Message> best;
  MulCounter ops;
  MultiplicityMatrix mult{1, 1};
  int wdeg_q = 0;  // deg_{1,k-1} Q
};

KvResult kv_mm_decode(const RsCode& code, const ReliabilityMatrix& pi, int l);
KvResult kv_mm_re_decode(const RsCode& code, const ReliabilityMatrix& pi, int l);

// Re-encoding internals, exposed for the identity checks.
struct KvReencoding {
  std::vector<int> upsilon;      // k columns with the largest m_j(0)
  std::vector<int> upsilon_bar;  // complement, ascending
  Poly h;                        // interpolates y_j^(0) on upsilon
  Poly phi;                      // prod_{j in upsilon} (x-alpha_j)^{m_j(0)}
  Poly psi;                      // prod_{j in upsilon} (x-alpha_j)
  std::vector<Fe> h_at;          // H(alpha_j) for all j
  // w_j^(e) = y_j^(e) - H(alpha_j) for real positions, 0 beyond the list.
  std::vector<std::vector<Fe>> w;        // w[e][j], e = 0..l-1
  std::vector<std::vector<int>> lambda_bar;  // j in upsilon with w_j^(e) != 0
};
KvReencoding kv_reencoding(const Gf& gf, const RsCode& code,
                           const BalancedLists& b, int l);
Poly kv_t_poly(const Gf& gf, const RsCode& code, const KvReencoding& re,
               int epsilon);
ModuleBasis build_kv_re_basis(const Gf& gf, const RsCode& code,
                              const BalancedLists& b, const KvReencoding& re,
                              int l);

}  // namespace rsmm
