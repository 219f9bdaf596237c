#include "rsmm/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace rsmm {

BoundVariant parse_bound_variant(const std::string& name) {
  if (name == "acd") return BoundVariant::Acd;
  if (name == "kv") return BoundVariant::Kv;
  if (name == "acd-re") return BoundVariant::AcdRe;
  if (name == "kv-re") return BoundVariant::KvRe;
  throw std::invalid_argument("unknown bound variant: " + name);
}

double eval_bounds(int n, int k, int m, int l, int eta, BoundVariant variant) {
  if (n <= 0 || k <= 0 || k >= n || m < 0 || l < 0 || eta < 0)
    throw std::invalid_argument("invalid bound parameters");
  const double nn = n, nk = n - k;
  const double m1 = std::pow(m + 1.0, 4.0);
  const double l1 = std::pow(l + 1.0, 4.0);
  const double l5 = std::pow(l + 1.0, 5.0);
  const double vecs = std::pow(2.0, eta);
  switch (variant) {
    case BoundVariant::Acd:
      return vecs * (nn * nn * (m1 + 24.0) / 24.0 + 0.5 * nn * nk * l5);
    case BoundVariant::Kv:
      return nn * nn * (l1 + 24.0 * l) / 24.0 + 0.5 * nn * nk * l5;
    case BoundVariant::AcdRe:
      return vecs * (nk * nk * (m1 + 12.0 * nk) / 24.0 + 0.5 * nk * nk * l5);
    case BoundVariant::KvRe:
      return nk * nk * (l1 + 12.0 * nk) / 24.0 + 0.5 * nk * nk * l5;
  }
  return 0.0;
}

}  // namespace rsmm
