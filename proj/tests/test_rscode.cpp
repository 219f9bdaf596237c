#include <doctest.h>

#include "rsmm/rscode.hpp"
#include "test_support.hpp"

using namespace rsmm;

TEST_CASE("encoding basics") {
  const FieldTable& tab = FieldTable::of(3);
  const RsCode code(tab, 3);
  const Gf gf(tab);
  CHECK(code.n() == 7);

  const Message ones{1, 0, 0};
  CHECK(code.encode(gf, ones) == Word(7, 1));
  CHECK(code.encode(gf, Message{0, 0, 0}) == Word(7, 0));

  const Message f{1, 1, 0};  // 1 + x
  const Word cw = code.encode(gf, f);
  for (int j = 0; j < 7; ++j)
    CHECK(cw[static_cast<std::size_t>(j)] ==
          (1 ^ code.locators()[static_cast<std::size_t>(j)]));

  CHECK_THROWS_AS(code.encode(gf, Message{1}), std::invalid_argument);
}

TEST_CASE("encoding is linear") {
  const FieldTable& tab = FieldTable::of(4);
  const RsCode code(tab, 5);
  const Gf gf(tab);
  test::Rand rnd(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Message m1 = rnd.message(code), m2 = rnd.message(code);
    Message sum(m1.size());
    for (std::size_t i = 0; i < m1.size(); ++i)
      sum[i] = static_cast<Fe>(m1[i] ^ m2[i]);
    const Word c1 = code.encode(gf, m1), c2 = code.encode(gf, m2);
    const Word cs = code.encode(gf, sum);
    for (std::size_t j = 0; j < cs.size(); ++j)
      CHECK(cs[j] == (c1[j] ^ c2[j]));
  }
}

TEST_CASE("hamming distance") {
  const Word a{1, 2, 3}, b{1, 2, 3}, c{1, 2, 4};
  CHECK(hamming_distance(a, b) == 0);
  CHECK(hamming_distance(a, c) == 1);
  CHECK(hamming_distance(Word(7, 1), Word(7, 0)) == 7);
  const Word shorter{1, 2};
  CHECK_THROWS_AS(hamming_distance(a, shorter), std::invalid_argument);
}

TEST_CASE("minimum distance of the (7,3) code") {
  const FieldTable& tab = FieldTable::of(3);
  const RsCode code(tab, 3);
  const Gf gf(tab);
  const Word zero(7, 0);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        if (!a && !b && !c) continue;
        const Word cw = code.encode(
            gf, Message{static_cast<Fe>(a), static_cast<Fe>(b), static_cast<Fe>(c)});
        CHECK(hamming_distance(cw, zero) >= 5);
      }
}

TEST_CASE("bm decoding within half the distance") {
  const FieldTable& tab = FieldTable::of(3);
  const RsCode code(tab, 3);
  const Gf gf(tab);
  test::Rand rnd(22);

  const Message msg = rnd.message(code);
  const Word cw = code.encode(gf, msg);
  CHECK(bm_decode(gf, code, cw) == msg);

  // Exhaustive two-error patterns for the (7,3) code.
  for (int j1 = 0; j1 < 7; ++j1)
    for (int j2 = j1 + 1; j2 < 7; ++j2)
      for (Fe e1 = 1; e1 < 8; ++e1)
        for (Fe e2 = 1; e2 < 8; ++e2) {
          Word w = cw;
          w[static_cast<std::size_t>(j1)] =
              static_cast<Fe>(w[static_cast<std::size_t>(j1)] ^ e1);
          w[static_cast<std::size_t>(j2)] =
              static_cast<Fe>(w[static_cast<std::size_t>(j2)] ^ e2);
          REQUIRE(bm_decode(gf, code, w) == msg);
        }

  // Single errors too.
  for (int j = 0; j < 7; ++j)
    for (Fe e = 1; e < 8; ++e) {
      Word w = cw;
      w[static_cast<std::size_t>(j)] =
          static_cast<Fe>(w[static_cast<std::size_t>(j)] ^ e);
      REQUIRE(bm_decode(gf, code, w) == msg);
    }
}

TEST_CASE("bm accepts random correctable patterns across codes") {
  test::Rand rnd(23);
  for (int p : {3, 4, 5}) {
    const FieldTable& tab = FieldTable::of(p);
    const int n = tab.size() - 1;
    const int k = (p == 3) ? 3 : (p == 4 ? 11 : 25);
    const RsCode code(tab, k);
    const Gf gf(tab);
    const int t = (n - k) / 2;
    for (int trial = 0; trial < 1000; ++trial) {
      const Message msg = rnd.message(code);
      const Word cw = code.encode(gf, msg);
      const Word w = rnd.corrupt(code, cw, rnd.below(t + 1));
      REQUIRE(bm_decode(gf, code, w) == msg);
    }
  }
}

TEST_CASE("bm beyond half the distance never fabricates the message silently") {
  // A three-error pattern on the (7,3) code either fails or lands on some
  // other codeword; it is never guaranteed to return the transmitted one.
  const FieldTable& tab = FieldTable::of(3);
  const RsCode code(tab, 3);
  const Gf gf(tab);
  const Message msg{1, 2, 3};
  const Word cw = code.encode(gf, msg);
  test::Rand rnd(24);
  int failures = 0, miscorrections = 0, lucky = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = rnd.corrupt(code, cw, 3);
    const auto dec = bm_decode(gf, code, w);
    if (!dec) ++failures;
    else if (*dec != msg) {
      ++miscorrections;
      // Any returned message must re-encode within distance t of the input.
      CHECK(hamming_distance(code.encode(gf, *dec), w) <= 2);
    } else {
      ++lucky;
    }
  }
  CHECK(failures + miscorrections + lucky == 300);
  CHECK(failures + miscorrections > 0);
}
