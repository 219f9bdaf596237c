#include <doctest.h>

#include "rsmm/polymatrix.hpp"
#include "test_support.hpp"

using namespace rsmm;

namespace {

PolyMatrix two_by_two(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
  PolyMatrix m(2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

PolyMatrix identity(int s) {
  PolyMatrix m(s);
  for (int t = 0; t < s; ++t) m.at(t, t) = Poly::constant(1);
  return m;
}

PolyMatrix random_nonsingular(const Gf& gf, test::Rand& rnd, int s, int max_deg) {
  while (true) {
    PolyMatrix m(s);
    for (int t = 0; t < s; ++t)
      for (int tau = 0; tau < s; ++tau) m.at(t, tau) = rnd.poly(gf, max_deg);
    try {
      if (!m.determinant(gf).is_zero()) return m;
    } catch (const std::exception&) {
    }
  }
}

}  // namespace

TEST_CASE("row profiles") {
  const Poly x = Poly::x_power(1);
  const Poly one = Poly::constant(1);
  PolyMatrix m = two_by_two(x, one, x, x);

  RowProfile p0 = m.row_profile(0);  // (x, 1)
  CHECK(p0.degree == 1);
  CHECK(p0.leading_position == 0);

  RowProfile p1 = m.row_profile(1);  // (x, x): tie broken to the larger column
  CHECK(p1.degree == 1);
  CHECK(p1.leading_position == 1);

  PolyMatrix z = two_by_two(Poly(), Poly::constant(5), one, one);
  RowProfile pz = z.row_profile(0);  // (0, c)
  CHECK(pz.degree == 0);
  CHECK(pz.leading_position == 1);

  PolyMatrix dead = two_by_two(Poly(), Poly(), one, one);
  CHECK_THROWS_AS(dead.row_profile(0), std::runtime_error);
}

TEST_CASE("matrix degree") {
  CHECK(identity(2).degree() == 0);

  const int k = 3, l = 2;
  PolyMatrix diag(l + 1);
  for (int t = 0; t <= l; ++t) diag.at(t, t) = Poly::x_power((k - 1) * t);
  CHECK(diag.degree() == (k - 1) * l * (l + 1) / 2);

  PolyMatrix m = two_by_two(Poly::x_power(1), Poly::constant(1),
                            Poly{std::vector<Fe>{1, 0, 1}}, Poly::x_power(1));
  CHECK(m.degree() == 3);
}

TEST_CASE("weak popov predicate") {
  CHECK(identity(3).weak_popov());
  PolyMatrix m = two_by_two(Poly::x_power(1), Poly::constant(1),
                            Poly{std::vector<Fe>{1, 0, 1}}, Poly::x_power(1));
  CHECK(!m.weak_popov());  // both leading positions are 0
  PolyMatrix single(1);
  single.at(0, 0) = Poly::x_power(4);
  CHECK(single.weak_popov());
}

TEST_CASE("weight mapping round trips") {
  const Gf gf(FieldTable::of(3));
  test::Rand rnd(11);
  PolyMatrix m(3);
  for (int t = 0; t < 3; ++t)
    for (int tau = 0; tau < 3; ++tau) m.at(t, tau) = rnd.poly(gf, 5);

  for (WeightKind kind : {WeightKind::Ascending, WeightKind::Descending}) {
    const PolyMatrix mapped0 = weight_map(m, kind, 0);
    for (int t = 0; t < 3; ++t)
      for (int tau = 0; tau < 3; ++tau) CHECK(mapped0.at(t, tau) == m.at(t, tau));

    const PolyMatrix mapped = weight_map(m, kind, 2);
    const PolyMatrix back = weight_demap(mapped, kind, 2);
    for (int t = 0; t < 3; ++t)
      for (int tau = 0; tau < 3; ++tau) CHECK(back.at(t, tau) == m.at(t, tau));
  }

  PolyMatrix bad(2);
  bad.at(0, 0) = Poly::constant(1);
  bad.at(0, 1) = Poly::constant(1);  // not divisible by x
  bad.at(1, 0) = Poly::constant(1);
  bad.at(1, 1) = Poly::x_power(1);
  CHECK_THROWS_WITH_AS(weight_demap(bad, WeightKind::Ascending, 1),
                       doctest::Contains("corrupted basis"), std::runtime_error);
}

TEST_CASE("ms reduction of the worked 2x2 example") {
  const Gf gf(FieldTable::of(3));
  PolyMatrix m = two_by_two(Poly::x_power(1), Poly::constant(1),
                            Poly{std::vector<Fe>{1, 0, 1}}, Poly::x_power(1));
  const Poly det_before = m.determinant(gf);
  m.reduce(gf);
  CHECK(m.weak_popov());
  CHECK(m.row_ops() == 2);
  CHECK(m.at(0, 0).is_zero());
  CHECK(m.at(0, 1) == Poly::constant(1));
  CHECK(m.at(1, 0) == Poly::constant(1));
  CHECK(m.at(1, 1).is_zero());
  CHECK(m.determinant(gf).deg() == det_before.deg());
}

TEST_CASE("already reduced input is untouched") {
  const Gf gf(FieldTable::of(3));
  PolyMatrix m = identity(3);
  m.reduce(gf);
  CHECK(m.row_ops() == 0);
  CHECK(m.weak_popov());
}

TEST_CASE("reduction on random nonsingular matrices") {
  test::Rand rnd(12);
  const Gf gf(FieldTable::of(4));
  for (int trial = 0; trial < 200; ++trial) {
    const int s = 2 + rnd.below(3);
    PolyMatrix m = random_nonsingular(gf, rnd, s, 6);
    const int det_deg = m.determinant(gf).deg();
    const long long deg_before = m.degree();

    PolyMatrix r = m;
    r.reduce(gf);
    CHECK(r.weak_popov());
    CHECK(r.determinant(gf).deg() == det_deg);
    // Row-reduced matrices satisfy deg det = sum of row degrees.
    CHECK(r.degree() == det_deg);
    CHECK(r.row_ops() <=
          static_cast<std::uint64_t>(s) *
              static_cast<std::uint64_t>(deg_before - det_deg + s - 1));
  }
}

TEST_CASE("singular input is reported") {
  const Gf gf(FieldTable::of(3));
  PolyMatrix m = two_by_two(Poly::x_power(1), Poly::constant(1),
                            Poly::x_power(1), Poly::constant(1));
  CHECK_THROWS_WITH_AS(m.reduce(gf), doctest::Contains("singular"),
                       std::runtime_error);
}

TEST_CASE("minimal row selection") {
  CHECK(identity(3).minimal_row() == 0);

  PolyMatrix m(3);
  m.at(0, 0) = Poly::x_power(5);
  m.at(1, 1) = Poly::x_power(3);
  m.at(2, 2) = Poly::x_power(4);
  CHECK(m.minimal_row() == 1);
}

TEST_CASE("determinant bareiss matches cofactor on small cases") {
  const Gf gf(FieldTable::of(3));
  test::Rand rnd(13);
  for (int trial = 0; trial < 100; ++trial) {
    PolyMatrix m(2);
    for (int t = 0; t < 2; ++t)
      for (int tau = 0; tau < 2; ++tau) m.at(t, tau) = rnd.poly(gf, 4);
    const Poly det = m.determinant(gf);
    const Poly ref = add(mul(gf, m.at(0, 0), m.at(1, 1)),
                         mul(gf, m.at(0, 1), m.at(1, 0)));
    CHECK(det == ref);
  }
}

TEST_CASE("debug dump shape") {
  PolyMatrix m = two_by_two(Poly::x_power(1), Poly(), Poly::constant(1),
                            Poly{std::vector<Fe>{3, 15}});
  CHECK(m.debug_dump() == "0 1,0\n1,3 f\n");
}
