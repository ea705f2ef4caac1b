#include <doctest.h>

#include <random>

#include "cutset/binom.hpp"
#include "cutset/errors.hpp"
#include "oracles.hpp"

using cutset::Nat;

TEST_CASE("binomial values") {
  CHECK(cutset::binomial(100, 4) == 3921225);
  CHECK(cutset::binomial(5, 0) == 1);
  CHECK(cutset::binomial(3, 5) == 0);
  CHECK(cutset::binomial(7, -1) == 0);
  CHECK(cutset::binomial(-2, 1) == 0);
  CHECK(cutset::binomial(300, 150).str() ==
        "93759702772827452793193754439064084879232655700081358920472352712975170021839591675861424");
  // Both sides of the triangle threshold agree with Pascal's rule.
  for (int b = 0; b <= 40; ++b)
    CHECK(cutset::binomial(301, b + 1) == cutset::binomial(300, b) + cutset::binomial(300, b + 1));
  CHECK(cutset::binomial(400, 3) == Nat(400) * 399 * 398 / 6);
}

TEST_CASE("cascade representation") {
  auto rep = cutset::cascade(13, 2);
  CHECK(rep.terms == std::vector<cutset::CascadeTerm>{{5, 2}, {3, 1}});
  CHECK(cutset::eval(rep) == 13);

  auto exact = cutset::cascade(cutset::binomial(20, 7), 7);
  REQUIRE(exact.terms.size() == 1);
  CHECK(exact.terms[0] == cutset::CascadeTerm{20, 7});

  auto big = cutset::cascade(3759525, 4);
  CHECK(cutset::to_string(big) == "C(98,4)+C(96,3)+C(93,2)+C(87,1)");
  CHECK(cutset::eval(big) == 3759525);
  CHECK(cutset::eval(cutset::CascadeRep{3, {{7, 3}}}) == 35);

  CHECK_THROWS_AS(cutset::cascade(0, 3), cutset::PreconditionError);
  CHECK_THROWS_AS(cutset::cascade(5, 0), cutset::PreconditionError);
}

TEST_CASE("cascade text round trip and validation") {
  auto rep = cutset::parse_cascade("C(98,4)+C(96,3)+C(93,2)+C(87,1)");
  CHECK(rep.m == 4);
  CHECK(cutset::eval(rep) == 3759525);
  CHECK_THROWS_AS(cutset::parse_cascade("C(5,2)+C(6,1)"), cutset::ParseError);
  CHECK_THROWS_AS(cutset::parse_cascade("C(5,2)+C(3,0)"), cutset::ParseError);
  CHECK_THROWS_AS(cutset::parse_cascade("C(5,2)C(3,1)"), cutset::ParseError);
  CHECK_THROWS_AS(cutset::parse_cascade(""), cutset::ParseError);
}

TEST_CASE("boundary operator") {
  CHECK(cutset::boundary(-3, 4) == 0);
  CHECK(cutset::boundary(0, 4) == 0);
  CHECK(cutset::boundary(cutset::binomial(12, 5), 5) == cutset::binomial(12, 4));

  // Oracle: first 13 two-subsets of [7] in squashed order, size of the union
  // of their one-element subsets.
  auto first = oracle::level(7, 2);
  first.resize(13);
  const auto expected = oracle::shadow(first).size();
  CHECK(expected == 6);
  CHECK(cutset::boundary(13, 2) == expected);
  // A term C(a_t, 0) contributes one.
  CHECK(cutset::boundary(4, 1) == 1);
  CHECK_THROWS_AS(cutset::boundary(4, 0), cutset::PreconditionError);
  CHECK_THROWS_AS(cutset::cascade(Nat(1) << 70, 1), cutset::PreconditionError);
}

TEST_CASE("cascade round trip on random inputs") {
  std::mt19937_64 rng(20240611);
  const Nat top = cutset::binomial(24, 12);
  for (int trial = 0; trial < 3000; ++trial) {
    int m = 1 + static_cast<int>(rng() % 12);
    Nat K = 1 + Nat(rng()) % top;
    auto rep = cutset::cascade(K, m);
    REQUIRE(cutset::is_well_formed(rep));
    REQUIRE(rep.m == m);
    REQUIRE(cutset::eval(rep) == K);
    REQUIRE(cutset::parse_cascade(cutset::to_string(rep)) == rep);
  }
}

TEST_CASE("boundary is weakly increasing") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    int m = 1 + static_cast<int>(rng() % 10);
    Nat a = Nat(rng() % 200000) - 100;
    Nat b = a + Nat(rng() % 5000);
    REQUIRE(cutset::boundary(a, m) <= cutset::boundary(b, m));
  }
  // Exhaustively on a small window, consecutive values.
  for (int m = 1; m <= 6; ++m)
    for (int K = -2; K < 600; ++K) REQUIRE(cutset::boundary(K, m) <= cutset::boundary(K + 1, m));
}

TEST_CASE("formatting helpers") {
  CHECK(cutset::with_separators(3759525) == "3,759,525");
  CHECK(cutset::with_separators(0) == "0");
  CHECK(cutset::with_separators(999) == "999");
  CHECK(cutset::with_separators(-1000) == "-1,000");
  CHECK(cutset::parse_nat("-17") == -17);
  CHECK_THROWS_AS(cutset::parse_nat("12a"), cutset::ParseError);
  CHECK_THROWS_AS(cutset::parse_nat("-"), cutset::ParseError);
}
