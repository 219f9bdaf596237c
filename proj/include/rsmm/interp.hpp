#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsmm/polymatrix.hpp"
#include "rsmm/rscode.hpp"

namespace rsmm {

// Bivariate polynomial Q(x, y) = sum_tau yc[tau](x) y^tau.
struct Bivar {
  std::vector<Poly> yc;

  bool is_zero() const;
  int ydeg() const;  // -1 for the zero polynomial
  const Poly& coeff(int tau) const;
  void trim();

  bool operator==(const Bivar& o) const;
};

Bivar bivar_mul(const Gf& gf, const Bivar& a, const Bivar& b);
Bivar bivar_add(const Bivar& a, const Bivar& b);
Fe bivar_eval(const Gf& gf, const Bivar& q, Fe a, Fe b);

// Q(x, f(x)) as a univariate polynomial.
Poly eval_at_poly(const Gf& gf, const Bivar& q, const Poly& f);

// Q(x, y*v(x)): coefficient tau gains a factor v^tau.
Bivar substitute_y_scaled(const Gf& gf, const Bivar& q, const Poly& v);

// Q(x, y/v(x)) when every coefficient is divisible by the needed power.
Bivar substitute_y_scaled_inverse(const Gf& gf, const Bivar& q, const Poly& v);

// Weighted degree under deg_{1,nu} x^a y^b = a + nu*b; throws on zero input.
int weighted_degree(const Bivar& q, int nu);
// y-degree of the (1,nu)-revlex leading monomial (ties take the larger b).
int leading_y_degree(const Bivar& q, int nu);

// True iff Q vanishes at (a, b) with multiplicity at least m: all shifted
// coefficients of total degree below m are zero.
bool verify_multiplicity(const Gf& gf, const Bivar& q, Fe a, Fe b, int m);

enum class BasisKind { Gs, AcdRe, Kv, KvRe };

// l+1 module generators; generator t has y-degree exactly t.
struct ModuleBasis {
  std::vector<Bivar> polys;
  BasisKind kind = BasisKind::Gs;
  int l() const { return static_cast<int>(polys.size()) - 1; }
};

// Generators G^{m-t}(y-R)^t for t <= m and y^{t-m}(y-R)^m above, with R
// interpolating the word at the code locators. Requires 1 <= m <= l.
ModuleBasis build_gs_basis(const Gf& gf, const RsCode& code,
                           std::span<const Fe> word, int m, int l);

PolyMatrix flatten(const ModuleBasis& basis);
ModuleBasis unflatten(const PolyMatrix& m, BasisKind kind);

struct InterpResult {
  Bivar q;
  int weighted_row_degree = 0;  // degree of the extracted row, matrix domain
  int minimal_row = 0;
  std::uint64_t row_ops = 0;
};

// Flatten, apply the weighted mapping, reduce to weak Popov form, demap and
// extract the minimal row.
InterpResult interpolate(const Gf& gf, const ModuleBasis& basis,
                         WeightKind kind, int beta);

// All f with deg f < k and Q(x, f(x)) = 0, sorted; at most deg_y Q results.
std::vector<Message> rr_factor(const Gf& gf, const Bivar& q, int k);

// Candidate ranking helpers shared by the decoders.
struct SoftScore {
  double log_prob;
  Message message;
};
Message pick_best_soft(const Gf& gf, const RsCode& code,
                       std::span<const Message> candidates,
                       const std::vector<double>& log_pi);  // q*n, row-major
Message pick_best_hard(const Gf& gf, const RsCode& code,
                       std::span<const Message> candidates,
                       std::span<const Fe> hard_word);

}  // namespace rsmm
