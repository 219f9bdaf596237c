#include <doctest.h>

#include "rsmm/galois.hpp"

using namespace rsmm;

TEST_CASE("gf8 table layout") {
  const FieldTable& t = FieldTable::of(3);
  CHECK(t.size() == 8);
  // x^3 + x + 1: alpha^3 = alpha + 1
  CHECK(t.exp(0) == 1);
  CHECK(t.exp(1) == 2);
  CHECK(t.exp(2) == 4);
  CHECK(t.exp(3) == 3);
}

TEST_CASE("exp table is a permutation of the nonzero elements") {
  for (int p : {3, 4, 6, 8}) {
    const FieldTable& t = FieldTable::of(p);
    std::vector<bool> seen(static_cast<std::size_t>(t.size()), false);
    for (int i = 0; i < t.size() - 1; ++i) {
      CHECK(!seen[t.exp(i)]);
      seen[t.exp(i)] = true;
    }
    CHECK(!seen[0]);
    for (int i = 0; i < t.size() - 1; ++i) CHECK(t.log(t.exp(i)) == i);
  }
}

TEST_CASE("basic products in gf8") {
  const Gf gf(FieldTable::of(3));
  CHECK(gf.mul(2, 4) == 3);  // alpha * alpha^2 = alpha + 1
  for (Fe a = 0; a < 8; ++a) {
    CHECK(gf.mul(a, 0) == 0);
    CHECK(gf.mul(a, 1) == a);
  }
}

TEST_CASE("inverses") {
  const Gf gf8(FieldTable::of(3));
  CHECK(gf8.inv(1) == 1);
  CHECK(gf8.inv(2) == FieldTable::of(3).exp(6));
  CHECK(gf8.mul(2, gf8.inv(2)) == 1);
  CHECK_THROWS_AS((void)gf8.inv(0), std::domain_error);

  const Gf gf16(FieldTable::of(4));
  for (Fe a = 1; a < 16; ++a) CHECK(gf16.mul(a, gf16.inv(a)) == 1);
}

TEST_CASE("field axioms exhaustively for q <= 64") {
  for (int p : {2, 3, 4, 5, 6}) {
    const Gf gf(FieldTable::of(p));
    const int q = gf.q();
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(gf.mul(static_cast<Fe>(a), static_cast<Fe>(b)) ==
              gf.mul(static_cast<Fe>(b), static_cast<Fe>(a)));
        for (int c = 0; c < q; ++c) {
          const Fe ab_c = gf.mul(gf.mul(static_cast<Fe>(a), static_cast<Fe>(b)),
                                 static_cast<Fe>(c));
          const Fe a_bc = gf.mul(static_cast<Fe>(a),
                                 gf.mul(static_cast<Fe>(b), static_cast<Fe>(c)));
          REQUIRE(ab_c == a_bc);
          const Fe lhs = gf.mul(static_cast<Fe>(a),
                                Gf::add(static_cast<Fe>(b), static_cast<Fe>(c)));
          const Fe rhs = Gf::add(gf.mul(static_cast<Fe>(a), static_cast<Fe>(b)),
                                 gf.mul(static_cast<Fe>(a), static_cast<Fe>(c)));
          REQUIRE(lhs == rhs);
        }
      }
  }
}

TEST_CASE("multiplication counting policy") {
  MulCounter cnt;
  const Gf gf(FieldTable::of(4), &cnt);
  gf.mul(0, 5);
  gf.mul(5, 1);
  CHECK(cnt.total() == 0);  // trivial scalings are free
  gf.mul(3, 7);
  CHECK(cnt.total() == 1);
  gf.mul(3, 7);
  CHECK(cnt.total() == 2);
  cnt.reset();
  CHECK(cnt.total() == 0);

  cnt.set_stage(Stage::Reduction);
  gf.mul(3, 7);
  CHECK(cnt.at(Stage::Reduction) == 1);
  CHECK(cnt.at(Stage::Formulation) == 0);
  {
    StageGuard guard(&cnt, Stage::Factorization);
    gf.mul(2, 2);
  }
  CHECK(cnt.at(Stage::Factorization) == 1);
  CHECK(cnt.stage() == Stage::Reduction);
  CHECK(cnt.interpolation() == 1);
  CHECK(cnt.total() == 2);
}

TEST_CASE("unsupported exponents are rejected") {
  CHECK_THROWS_AS(FieldTable(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldTable(13), std::invalid_argument);
}
