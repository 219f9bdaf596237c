#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsmm/unipoly.hpp"

namespace rsmm {

// Degree, leading position and leading term of one matrix row. The leading
// position is the largest column index attaining the row degree.
struct RowProfile {
  int degree = Poly::kZeroDeg;
  int leading_position = -1;
  Fe lt_coeff = 0;
  int lt_degree = Poly::kZeroDeg;
};

enum class WeightKind {
  Ascending,   // diag(1, x^b, ..., x^{lb})
  Descending,  // diag(x^{lb}, ..., x^b, 1)
};

// Square matrix over GF(q)[x]; row t column tau holds the y^tau coefficient
// of the t-th module generator once a basis has been flattened.
class PolyMatrix {
 public:
  explicit PolyMatrix(int size)
      : size_(size),
        rows_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {}

  int size() const { return size_; }
  Poly& at(int t, int tau) {
    return rows_[static_cast<std::size_t>(t) * size_ + tau];
  }
  const Poly& at(int t, int tau) const {
    return rows_[static_cast<std::size_t>(t) * size_ + tau];
  }

  RowProfile row_profile(int t) const;  // throws on an all-zero row
  long long degree() const;             // sum of row degrees
  bool weak_popov() const;              // false if any row is zero

  // Mulders-Storjohann reduction to weak Popov form, in place. Collisions
  // are scanned in ascending leading-position order; the reducer is the
  // colliding row minimizing (degree, index). Throws if a zero row appears.
  void reduce(const Gf& gf);
  std::uint64_t row_ops() const { return row_ops_; }

  // Row of minimum degree; ties by smaller leading position, then index,
  // matching the weighted revlex order on the flattened polynomials.
  int minimal_row() const;

  // Fraction-free (Bareiss) determinant with a triangular fast path.
  Poly determinant(const Gf& gf) const;

  // One row per line, entries comma-separated, each entry its coefficient
  // list in hex (low to high), "0" for the zero polynomial.
  std::string debug_dump() const;

 private:
  int size_;
  std::vector<Poly> rows_;
  std::uint64_t row_ops_ = 0;
};

// Column scaling by powers of x (the weighted diagonal mapping); beta >= 0.
PolyMatrix weight_map(const PolyMatrix& m, WeightKind kind, int beta);

// Inverse mapping; throws if any entry is not divisible by its x-power.
PolyMatrix weight_demap(const PolyMatrix& m, WeightKind kind, int beta);

}  // namespace rsmm
