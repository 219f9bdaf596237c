#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace rsmm {

// Field element of GF(2^p) in polynomial-basis bit representation.
using Fe = std::uint16_t;

// Pipeline stages used to bucket finite-field multiplication counts.
enum class Stage : int {
  Formulation = 0,  // module basis construction: R(x), F_e(x), generator products
  Reduction,        // Mulders-Storjohann row operations
  Reencoding,       // re-encoding polynomial and point transform
  Extraction,       // demapping and Q restoration
  Factorization,    // recursive coefficient search
  Selection,        // candidate re-encoding and likelihood ranking
  Other,
};
inline constexpr int kStageCount = 7;

// Multiplication tally for one decoding job. A generic multiplication
// (neither operand 0 nor 1) adds one to the bucket of the active stage;
// multiplications by 0 or 1 and all additions are never counted.
class MulCounter {
 public:
  void bump() { buckets_[cur_] += 1; }
  void set_stage(Stage s) { cur_ = static_cast<int>(s); }
  Stage stage() const { return static_cast<Stage>(cur_); }

  void merge(const MulCounter& o) {
    for (int i = 0; i < kStageCount; ++i) buckets_[i] += o.buckets_[i];
  }

  std::uint64_t at(Stage s) const { return buckets_[static_cast<int>(s)]; }
  std::uint64_t total() const {
    std::uint64_t n = 0;
    for (auto b : buckets_) n += b;
    return n;
  }
  // Scope modelled by the complexity analysis: formulation + reduction.
  std::uint64_t interpolation() const {
    return at(Stage::Formulation) + at(Stage::Reduction);
  }
  void reset() { buckets_.fill(0); }

 private:
  std::array<std::uint64_t, kStageCount> buckets_{};
  int cur_ = static_cast<int>(Stage::Other);
};

// RAII stage switch; restores the previous stage on scope exit.
class StageGuard {
 public:
  StageGuard(MulCounter* c, Stage s) : c_(c) {
    if (c_) {
      prev_ = c_->stage();
      c_->set_stage(s);
    }
  }
  ~StageGuard() {
    if (c_) c_->set_stage(prev_);
  }
  StageGuard(const StageGuard&) = delete;
  StageGuard& operator=(const StageGuard&) = delete;

 private:
  MulCounter* c_;
  Stage prev_ = Stage::Other;
};

// Immutable exp/log tables for GF(2^p), 2 <= p <= 12. exp_[0] = 1 and
// exp_ enumerates all q-1 nonzero elements; log_ is its inverse. Safe to
// share across threads; per-job mutable state lives in Gf's counter.
class FieldTable {
 public:
  explicit FieldTable(int exponent);

  // Process-wide cache, one table per exponent.
  static const FieldTable& of(int exponent);

  int exponent() const { return p_; }
  int size() const { return q_; }  // q = 2^p
  std::uint32_t primitive_poly() const { return poly_; }

  // exp(i) = alpha^i, alpha the residue x; index taken mod q-1.
  Fe exp(int i) const { return exp_[i % (q_ - 1)]; }
  int log(Fe a) const { return log_[a]; }  // requires a != 0

 private:
  int p_ = 0;
  int q_ = 0;
  std::uint32_t poly_ = 0;
  std::vector<Fe> exp_;   // length 2(q-1), doubled to skip the mod in mul
  std::vector<int> log_;  // length q, log_[0] = -1
};

// Per-decode-context field handle: shared immutable table plus an optional
// private multiplication counter. Copying the handle shares the counter.
class Gf {
 public:
  explicit Gf(const FieldTable& table, MulCounter* counter = nullptr)
      : tab_(&table), cnt_(counter) {}

  const FieldTable& table() const { return *tab_; }
  MulCounter* counter() const { return cnt_; }
  int p() const { return tab_->exponent(); }
  int q() const { return tab_->size(); }

  // Characteristic 2: subtraction and addition coincide.
  static Fe add(Fe a, Fe b) { return static_cast<Fe>(a ^ b); }

  Fe mul(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    if (a == 1) return b;
    if (b == 1) return a;
    if (cnt_) cnt_->bump();
    return tab_->exp(tab_->log(a) + tab_->log(b));
  }

  Fe inv(Fe a) const;           // throws on a == 0
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, int e) const;    // e >= 0

 private:
  const FieldTable* tab_;
  MulCounter* cnt_;
};

}  // namespace rsmm
