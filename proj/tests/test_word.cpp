#include <catch2/catch_amalgamated.hpp>

#include "cayley/abelian.hpp"
#include "cayley/houghton.hpp"
#include "cayley/word.hpp"
#include "oracles.hpp"

using namespace cayley;

TEST_CASE("free reduction cancels adjacent inverse pairs", "[word]") {
  HoughtonH2 h2;
  auto labels = h2.labels();

  CHECK(free_reduce(parse_word("s S", labels), labels).length() == 0);
  CHECK(free_reduce(parse_word("S s", labels), labels).length() == 0);
  CHECK(free_reduce(parse_word("x x", labels), labels).length() == 0);

  // Inner cancellation exposes an outer one.
  CHECK(free_reduce(parse_word("s x x S", labels), labels).length() == 0);
  CHECK(free_reduce(parse_word("s x x S x s S x", labels), labels).length() == 0);

  auto stable = parse_word("s x S x", labels);
  CHECK(free_reduce(stable, labels) == stable);
}

TEST_CASE("free reduction preserves evaluation and is idempotent", "[word]") {
  HoughtonH2 h2;
  AbelianGroup z23(1, {{2}, {3}});
  std::mt19937 rng(7001);

  for (int i = 0; i < 2000; ++i) {
    auto w = oracle::random_word(rng, 3, 20);
    auto r = free_reduce(w, h2.labels());
    CHECK(evaluate(h2, w) == evaluate(h2, r));
    CHECK(free_reduce(r, h2.labels()) == r);
    for (std::size_t j = 0; j + 1 < r.letters.size(); ++j)
      CHECK(h2.labels()[r.letters[j]].inverse_index != r.letters[j + 1]);
  }
  for (int i = 0; i < 2000; ++i) {
    auto w = oracle::random_word(rng, 4, 20);
    auto r = free_reduce(w, z23.labels());
    CHECK(evaluate(z23, w) == evaluate(z23, r));
  }
}

TEST_CASE("invert_word reverses and inverts letterwise", "[word]") {
  HoughtonH2 h2;
  AbelianGroup z2(2, {{1, 0}, {0, 1}, {1, 1}});
  std::mt19937 rng(7002);

  auto w = parse_word("s s x", h2.labels());
  CHECK(invert_word(w, h2.labels()) == parse_word("x S S", h2.labels()));

  for (int i = 0; i < 1000; ++i) {
    auto u = oracle::random_word(rng, 3, 16);
    CHECK(evaluate(h2, invert_word(u, h2.labels())) == h2.invert(evaluate(h2, u)));
    CHECK(invert_word(invert_word(u, h2.labels()), h2.labels()) == u);
  }
  for (int i = 0; i < 1000; ++i) {
    auto u = oracle::random_word(rng, 6, 16);
    CHECK(evaluate(z2, invert_word(u, z2.labels())) == z2.invert(evaluate(z2, u)));
  }
}

TEST_CASE("word parsing handles plain and tuple-valued symbols", "[word]") {
  HoughtonH2 h2;
  CHECK(parse_word("s S x", h2.labels()).letters == std::vector<int>{0, 1, 2});
  CHECK(parse_word("  s,S\tx ", h2.labels()).letters == std::vector<int>{0, 1, 2});
  CHECK(parse_word("", h2.labels()).length() == 0);

  AbelianGroup z2(2, {{1, 0}, {0, 1}});
  CHECK(parse_word("(1,0) (0,1), (1,0)", z2.labels()).letters ==
        std::vector<int>{0, 1, 0});
  CHECK(parse_word("(-1,0) (0,-1)", z2.labels()).letters == std::vector<int>{2, 3});

  std::mt19937 rng(7003);
  for (int i = 0; i < 500; ++i) {
    auto w = oracle::random_word(rng, 4, 12);
    CHECK(parse_word(format_word(w, z2.labels()), z2.labels()) == w);
  }
}

TEST_CASE("word parsing rejects malformed input", "[word]") {
  HoughtonH2 h2;
  AbelianGroup z2(2, {{1, 0}, {0, 1}});
  CHECK_THROWS_AS(parse_word("q", h2.labels()), ParseError);
  CHECK_THROWS_AS(parse_word("s t", h2.labels()), ParseError);
  CHECK_THROWS_AS(parse_word("(1,0", z2.labels()), ParseError);
  CHECK_THROWS_AS(parse_word("1,0)", z2.labels()), ParseError);
  CHECK_THROWS_AS(parse_word("(2,0)", z2.labels()), ParseError);

  Word bad{{0, 7}};
  CHECK_THROWS_AS(evaluate(h2, bad), MalformedWordError);
  CHECK_THROWS_AS(free_reduce(bad, h2.labels()), MalformedWordError);
  Word negative{{-1}};
  CHECK_THROWS_AS(check_word(negative, h2.labels()), MalformedWordError);
}

TEST_CASE("evaluate is a monoid homomorphism into the group", "[word]") {
  HoughtonH2 h2;
  AbelianGroup z23(1, {{2}, {3}});
  std::mt19937 rng(7004);

  CHECK(evaluate(h2, Word{}) == h2.identity());
  CHECK(evaluate(z23, Word{}) == z23.identity());

  for (int i = 0; i < 1000; ++i) {
    auto u = oracle::random_word(rng, 3, 12);
    auto v = oracle::random_word(rng, 3, 12);
    CHECK(evaluate(h2, concat(u, v)) ==
          h2.multiply(evaluate(h2, u), evaluate(h2, v)));
  }
  for (int i = 0; i < 1000; ++i) {
    auto u = oracle::random_word(rng, 4, 12);
    auto v = oracle::random_word(rng, 4, 12);
    CHECK(evaluate(z23, concat(u, v)) ==
          z23.multiply(evaluate(z23, u), evaluate(z23, v)));
  }
}

TEST_CASE("neighbors lists one entry per generator in label order", "[word]") {
  AbelianGroup z23(1, {{2}, {3}});
  auto nb = neighbors(z23, z23.identity());
  REQUIRE(nb.size() == 4);
  CHECK(nb[0].second == AbelianGroup::element_type{2});
  CHECK(nb[1].second == AbelianGroup::element_type{3});
  CHECK(nb[2].second == AbelianGroup::element_type{-2});
  CHECK(nb[3].second == AbelianGroup::element_type{-3});
  CHECK(nb[0].first.symbol == "2");
  CHECK(nb[3].first.symbol == "-3");

  auto nb1 = neighbors(z23, AbelianGroup::element_type{1});
  REQUIRE(nb1.size() == 4);
  CHECK(nb1[0].second == AbelianGroup::element_type{3});
  CHECK(nb1[1].second == AbelianGroup::element_type{4});
  CHECK(nb1[2].second == AbelianGroup::element_type{-1});
  CHECK(nb1[3].second == AbelianGroup::element_type{-2});

  HoughtonH2 h2;
  auto hb = neighbors(h2, h2.identity());
  REQUIRE(hb.size() == 3);
  CHECK(hb[0].second == H2Element{{}, 1});
  CHECK(hb[1].second == H2Element{{}, -1});
  CHECK(hb[2].second == HoughtonH2::sigma_t(0));
}
