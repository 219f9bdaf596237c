#pragma once

#include <string>

namespace rsmm {

enum class BoundVariant { Acd, Kv, AcdRe, KvRe };

BoundVariant parse_bound_variant(const std::string& name);

// Closed-form upper bounds on the finite-field multiplications spent by
// the module formulation plus basis reduction:
//   acd    : 2^eta ( n^2((m+1)^4 + 24)/24 + n(n-k)(l+1)^5/2 )
//   kv     : n^2((l+1)^4 + 24l)/24 + n(n-k)(l+1)^5/2
//   acd-re : 2^eta ( (n-k)^2((m+1)^4 + 12(n-k))/24 + (n-k)^2(l+1)^5/2 )
//   kv-re  : (n-k)^2((l+1)^4 + 12(n-k))/24 + (n-k)^2(l+1)^5/2
double eval_bounds(int n, int k, int m, int l, int eta, BoundVariant variant);

}  // namespace rsmm
