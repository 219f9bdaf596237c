#include <doctest.h>

#include "rsmm/unipoly.hpp"
#include "test_support.hpp"

using namespace rsmm;

TEST_CASE("degree and normalization") {
  CHECK(Poly().deg() == Poly::kZeroDeg);
  CHECK(Poly({std::vector<Fe>{0, 0}}).is_zero());
  CHECK(Poly({std::vector<Fe>{5, 0, 0}}).deg() == 0);
  CHECK(Poly::x_power(3).deg() == 3);
  CHECK(Poly::kZeroDeg < 0);
}

TEST_CASE("evaluation") {
  const Gf gf(FieldTable::of(3));
  const Poly f{std::vector<Fe>{1, 1}};  // x + 1
  CHECK(eval(gf, f, 2) == 3);
  CHECK(eval(gf, Poly(), 5) == 0);
  CHECK(eval(gf, Poly::constant(6), 4) == 6);
}

TEST_CASE("products over gf8") {
  const Gf gf(FieldTable::of(3));
  const Poly f{std::vector<Fe>{1, 1}};
  const Poly sq = mul(gf, f, f);
  CHECK(sq == Poly{std::vector<Fe>{1, 0, 1}});  // cross terms cancel in char 2
  CHECK(mul(gf, f, Poly()).is_zero());
  CHECK(mul(gf, f, Poly::constant(1)) == f);
}

TEST_CASE("divmod") {
  const Gf gf(FieldTable::of(3));
  const Poly f{std::vector<Fe>{1, 0, 1}};  // x^2 + 1
  const Poly g{std::vector<Fe>{1, 1}};     // x + 1
  auto [q, r] = divmod(gf, f, g);
  CHECK(q == g);
  CHECK(r.is_zero());

  auto [q2, r2] = divmod(gf, g, g);
  CHECK(q2 == Poly::constant(1));
  CHECK(r2.is_zero());

  auto [q3, r3] = divmod(gf, g, f);
  CHECK(q3.is_zero());
  CHECK(r3 == g);

  CHECK_THROWS_AS(divmod(gf, f, Poly()), std::domain_error);
}

TEST_CASE("divmod round trip on random pairs") {
  test::Rand rnd(7);
  for (int p : {3, 4, 6}) {
    const Gf gf(FieldTable::of(p));
    for (int trial = 0; trial < 200; ++trial) {
      const Poly f = rnd.poly(gf, 20);
      const Poly g = rnd.nonzero_poly(gf, 10);
      auto [q, r] = divmod(gf, f, g);
      CHECK(add(mul(gf, q, g), r) == f);
      CHECK(r.deg() < g.deg());
    }
  }
}

TEST_CASE("ring laws on random triples") {
  test::Rand rnd(8);
  const Gf gf(FieldTable::of(4));
  for (int trial = 0; trial < 200; ++trial) {
    const Poly f = rnd.poly(gf, 12), g = rnd.poly(gf, 12), h = rnd.poly(gf, 12);
    CHECK(mul(gf, add(f, g), h) == add(mul(gf, f, h), mul(gf, g, h)));
    if (!f.is_zero() && !g.is_zero())
      CHECK(mul(gf, f, g).deg() == f.deg() + g.deg());
  }
}

TEST_CASE("lagrange basis properties") {
  const Gf gf(FieldTable::of(3));
  const std::vector<Fe> two{1, 2};
  const Poly phi0 = lagrange_basis(gf, two, 0);
  CHECK(eval(gf, phi0, 1) == 1);
  CHECK(eval(gf, phi0, 2) == 0);

  std::vector<Fe> locs(7);
  for (int j = 0; j < 7; ++j) locs[static_cast<std::size_t>(j)] = FieldTable::of(3).exp(j);
  Poly sum;
  for (int j = 0; j < 7; ++j) {
    const Poly phi = lagrange_basis(gf, locs, j);
    CHECK(phi.deg() == 6);
    for (int j2 = 0; j2 < 7; ++j2)
      CHECK(eval(gf, phi, locs[static_cast<std::size_t>(j2)]) == (j2 == j ? 1 : 0));
    sum = add(sum, phi);
  }
  CHECK(sum == Poly::constant(1));  // interpolant of the all-ones function

  const std::vector<Fe> repeated{1, 1};
  CHECK_THROWS_AS(lagrange_basis(gf, repeated, 0), std::invalid_argument);
}

TEST_CASE("interpolation") {
  const Gf gf(FieldTable::of(3));
  std::vector<Fe> xs{1, 2, 4};
  std::vector<Fe> ys{5, 5, 5};
  CHECK(lagrange_interpolate(gf, xs, ys) == Poly::constant(5));

  test::Rand rnd(9);
  for (int p : {3, 4, 6}) {
    const Gf g(FieldTable::of(p));
    const FieldTable& tab = FieldTable::of(p);
    const int n = tab.size() - 1;
    std::vector<Fe> locs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) locs[static_cast<std::size_t>(j)] = tab.exp(j);
    for (int trial = 0; trial < 20; ++trial) {
      const Poly f = rnd.poly(g, n - 1);
      std::vector<Fe> vals(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j)
        vals[static_cast<std::size_t>(j)] = eval(g, f, locs[static_cast<std::size_t>(j)]);
      CHECK(lagrange_interpolate(g, locs, vals) == f);
    }
  }

  std::vector<Fe> bad_x{1, 1};
  std::vector<Fe> bad_y{0, 1};
  CHECK_THROWS_AS(lagrange_interpolate(gf, bad_x, bad_y), std::invalid_argument);
}

TEST_CASE("golden first list row interpolates exactly") {
  // y^(0) row of the worked balanced-list example for the (7,3) code.
  const Gf gf(FieldTable::of(3));
  const FieldTable& tab = FieldTable::of(3);
  std::vector<Fe> locs(7), ys{1, 2, 0, 4, 7, 3, 2};
  for (int j = 0; j < 7; ++j) locs[static_cast<std::size_t>(j)] = tab.exp(j);
  const Poly f0 = lagrange_interpolate(gf, locs, ys);
  for (int j = 0; j < 7; ++j)
    CHECK(eval(gf, f0, locs[static_cast<std::size_t>(j)]) ==
          ys[static_cast<std::size_t>(j)]);
}
