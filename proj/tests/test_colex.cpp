#include <doctest.h>

#include <random>
#include <sstream>

#include "cutset/colex.hpp"
#include "cutset/errors.hpp"
#include "cutset/io.hpp"
#include "oracles.hpp"

using cutset::Family;
using cutset::Nat;
using cutset::Subset;

namespace {

Subset S(std::initializer_list<int> xs) { return Subset{std::vector<int>(xs)}; }

std::vector<Subset> subsets_of(const Family& f) { return f.members; }

std::vector<Subset> from_masks(const std::vector<oracle::Mask>& masks) {
  std::vector<Subset> out;
  for (auto m : masks) out.push_back(cutset::from_mask(m));
  return out;
}

}  // namespace

TEST_CASE("squashed comparison") {
  CHECK(cutset::compare_squashed(S({1, 3}), S({2, 3})) == std::strong_ordering::less);
  CHECK(cutset::compare_squashed(S({2, 4}), S({2, 4})) == std::strong_ordering::equal);
  CHECK(cutset::compare_squashed(S({3, 4}), S({1, 5})) == std::strong_ordering::less);
  CHECK(cutset::compare_squashed(S({1, 5}), S({3, 4})) == std::strong_ordering::greater);
  CHECK_THROWS_AS(cutset::compare_squashed(S({1}), S({1, 2})), cutset::PreconditionError);
}

TEST_CASE("rank and unrank examples") {
  CHECK(cutset::rank(S({1, 2, 3, 4})) == 1);
  CHECK(cutset::rank(S({2, 3})) == 3);
  CHECK(cutset::rank(S({6, 7, 8, 9})) == cutset::binomial(9, 4));
  CHECK(cutset::unrank(1, 3, 9) == S({1, 2, 3}));
  CHECK(cutset::unrank(3, 2, 5) == S({2, 3}));
  CHECK(cutset::unrank(cutset::binomial(9, 4), 4, 9) == S({6, 7, 8, 9}));
  CHECK(cutset::unrank(1, 0, 4) == S({}));
  CHECK_THROWS_AS(cutset::unrank(0, 2, 5), cutset::PreconditionError);
  CHECK_THROWS_AS(cutset::unrank(11, 2, 5), cutset::PreconditionError);
}

TEST_CASE("rank/unrank agree with brute-force squashed enumeration for n <= 14") {
  for (int n = 0; n <= 14; ++n) {
    for (int m = 0; m <= n; ++m) {
      auto order = oracle::level(n, m);
      for (std::size_t i = 0; i < order.size(); ++i) {
        Subset s = cutset::from_mask(order[i]);
        REQUIRE(cutset::rank(s) == i + 1);
        REQUIRE(cutset::unrank(i + 1, m, n) == s);
      }
    }
  }
}

TEST_CASE("rank/unrank round trip at large n") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 15 + static_cast<int>(rng() % 150);
    int m = static_cast<int>(rng() % (n + 1));
    Nat size = cutset::binomial(n, m);
    Nat K = 1 + (Nat(rng()) * Nat(rng()) * Nat(rng())) % size;
    Subset s = cutset::unrank(K, m, n);
    cutset::validate_subset(s, n);
    REQUIRE(static_cast<int>(s.size()) == m);
    REQUIRE(cutset::rank(s) == K);
  }
}

TEST_CASE("initial and last collections") {
  CHECK(subsets_of(cutset::initial(3, 2, 4)) == std::vector<Subset>{S({1, 2}), S({1, 3}), S({2, 3})});
  CHECK(subsets_of(cutset::last(2, 2, 4)) == std::vector<Subset>{S({2, 4}), S({3, 4})});
  CHECK(cutset::initial(0, 2, 4).empty());
  CHECK(cutset::last(-5, 2, 4).empty());
  CHECK_THROWS_AS(cutset::initial(7, 2, 4), cutset::PreconditionError);
  CHECK_THROWS_AS(cutset::last(7, 2, 4), cutset::PreconditionError);
}

TEST_CASE("shadow and shade of explicit families") {
  auto tri = cutset::make_family(3, 3, {S({1, 2, 3})});
  CHECK(subsets_of(cutset::shadow(tri)) == std::vector<Subset>{S({1, 2}), S({1, 3}), S({2, 3})});

  auto pair = cutset::make_family(5, 2, {S({3, 4})});
  CHECK(subsets_of(cutset::shade(pair)) == std::vector<Subset>{S({1, 3, 4}), S({2, 3, 4}), S({3, 4, 5})});

  CHECK(cutset::shadow(cutset::initial(13, 2, 7)) == cutset::initial(6, 1, 7));

  CHECK_THROWS_AS(cutset::shadow(cutset::make_family(4, 0, {S({})})), cutset::PreconditionError);
  CHECK_THROWS_AS(cutset::shade(cutset::make_family(4, 4, {S({1, 2, 3, 4})})), cutset::PreconditionError);
}

TEST_CASE("materialize segments") {
  CHECK(cutset::materialize({4, 2, 1, 3}) == cutset::initial(3, 2, 4));
  CHECK(cutset::materialize({4, 2, 5, 4}).empty());
  auto full = cutset::materialize({6, 3, 1, cutset::binomial(6, 3)});
  CHECK(full.members == from_masks(oracle::level(6, 3)));
}

TEST_CASE("make_family validation") {
  CHECK_THROWS_AS(cutset::make_family(4, 2, {S({1, 2}), S({1, 2})}), cutset::PreconditionError);
  CHECK_THROWS_AS(cutset::make_family(4, 2, {S({1, 5})}), cutset::PreconditionError);
  CHECK_THROWS_AS(cutset::make_family(4, 2, {S({2, 1})}), cutset::PreconditionError);
  CHECK_THROWS_AS(cutset::make_family(4, 2, {S({1})}), cutset::PreconditionError);
  auto f = cutset::make_family(4, 2, {S({3, 4}), S({1, 2})});
  CHECK(f.members.front() == S({1, 2}));
}

TEST_CASE("shadow of an initial collection has size boundary(K), for n <= 14") {
  // Incremental brute force: add the members of a level one by one in
  // squashed order and track the size of the accumulated shadow.
  for (int n = 1; n <= 14; ++n) {
    for (int m = 1; m <= n; ++m) {
      auto order = oracle::level(n, m);
      std::set<oracle::Mask> acc;
      for (std::size_t k = 0; k < order.size(); ++k) {
        for (oracle::Mask b = order[k]; b != 0; b &= b - 1) acc.insert(order[k] ^ (b & -b));
        REQUIRE(cutset::boundary(Nat(k + 1), m) == acc.size());
      }
    }
  }
}

TEST_CASE("complement maps last collections onto initial collections (n <= 10)") {
  for (int n = 0; n <= 10; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (int K = 0; K <= cutset::binomial(n, m); ++K) {
        auto tail = cutset::last(K, m, n);
        std::vector<Subset> comp;
        for (const auto& s : tail.members) comp.push_back(cutset::complement(s, n));
        REQUIRE(cutset::make_family(n, n - m, comp) == cutset::initial(K, n - m, n));
      }
    }
  }
}

TEST_CASE("family text format") {
  std::istringstream in("[1,3,5]\n\n[]\n[2]\n");
  auto members = cutset::read_subsets(in);
  CHECK(members == std::vector<Subset>{S({1, 3, 5}), S({}), S({2})});
  std::ostringstream out;
  cutset::write_subsets(out, members);
  CHECK(out.str() == "[1,3,5]\n[]\n[2]\n");

  std::istringstream dup("[1,2]\n[1,2]\n");
  CHECK_THROWS_WITH_AS(cutset::read_subsets(dup), doctest::Contains("line 2"), cutset::ParseError);
  std::istringstream bad("[1,2]\n[3,1]\n");
  CHECK_THROWS_WITH_AS(cutset::read_subsets(bad), doctest::Contains("line 2"), cutset::ParseError);
  CHECK_THROWS_AS(cutset::parse_subset("[0]"), cutset::ParseError);
  CHECK_THROWS_AS(cutset::parse_subset("{\"a\":1}"), cutset::ParseError);
  CHECK_THROWS_AS(cutset::parse_subset("[[1]]"), cutset::ParseError);
  CHECK_THROWS_AS(cutset::parse_subset("[1.5]"), cutset::ParseError);
  CHECK_THROWS_AS(cutset::parse_subset("3"), cutset::ParseError);
}

TEST_CASE("profile arrays keep arbitrary-precision values") {
  auto v = cutset::parse_nat_array(" [0, 12, 100891344545564193334812497256]");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == cutset::binomial(100, 50));
  CHECK(cutset::format_nat_array(v) == "[0,12,100891344545564193334812497256]");
  CHECK_THROWS_AS(cutset::parse_nat_array("[1,"), cutset::ParseError);
  CHECK_THROWS_AS(cutset::parse_nat_array("[1e5]"), cutset::ParseError);
}
