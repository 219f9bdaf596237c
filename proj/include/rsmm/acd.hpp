#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "rsmm/interp.hpp"
#include "rsmm/reliability.hpp"

namespace rsmm {

// Per-position reliability metric gamma_j = pi(2nd best)/pi(best) and the
// permutation sorting it ascending (most reliable first); gamma ties keep
// position order.
struct ReliabilityOrder {
  std::vector<double> gamma;  // indexed by position
  std::vector<int> order;     // order[0] = most reliable position
  std::vector<Fe> best;       // r^I per position
  std::vector<Fe> second;     // r^II per position
};
ReliabilityOrder reliability_order(const ReliabilityMatrix& pi);

struct TestVector {
  std::vector<Fe> symbols;
  std::uint32_t flip_mask = 0;  // bit b set: flipped position order[n-eta+b]
};

// All 2^eta flip combinations over the eta least reliable positions;
// vector 0 is the plain hard decision.
std::vector<TestVector> build_test_vectors(const ReliabilityMatrix& pi, int eta);
std::vector<TestVector> build_test_vectors(const ReliabilityOrder& ord, int eta);

// Shared re-encoding data: the k most reliable positions and the
// interpolant through their hard decisions.
struct ReencodingContext {
  std::vector<int> theta;      // k most reliable positions
  std::vector<int> theta_bar;  // the rest, ascending
  Poly h;                      // H(alpha_j) = r_j^I on theta
  Poly v;                      // prod_{j in theta} (x - alpha_j)
  Poly g_tilde;                // G / V
  std::vector<Fe> h_at;        // H(alpha_j) for all j
};
ReencodingContext reencode_context(const Gf& gf, const RsCode& code,
                                   const ReliabilityOrder& ord, int eta);

// One interpolation trial: the test vector it decoded, the weighted degree
// of the extracted Q and the message roots found.
struct GsTrace {
  TestVector vector;
  int wdeg_q = 0;  // deg_{1,k-1} Q
  std::vector<Message> roots;
};

struct AcdResult {
  std::vector<Message> candidates;  // union over vectors, sorted, deduped
  std::optional<Message> best;
  MulCounter ops;
  std::vector<GsTrace> vectors;
};

// Guruswami-Sudan decoding of a single word, the per-vector work both ACD
// variants loop over.
GsTrace gs_decode_word(const Gf& gf, const RsCode& code,
                       const TestVector& tv, int m, int l);

AcdResult acd_mm_decode(const RsCode& code, const ReliabilityMatrix& pi,
                        int eta, int m, int l, bool parallel = false);

AcdResult acd_mm_re_decode(const RsCode& code, const ReliabilityMatrix& pi,
                           int eta, int m, int l, bool parallel = false);

}  // namespace rsmm
