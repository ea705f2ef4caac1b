#include <doctest.h>

#include <random>

#include "cutset/constructions.hpp"
#include "cutset/errors.hpp"
#include "cutset/io.hpp"
#include "cutset/profiles.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using cutset::binomial;
using cutset::MultiFamily;
using cutset::Nat;
using cutset::Subset;

namespace {

Subset S(std::initializer_list<int> xs) { return Subset{std::vector<int>(xs)}; }

std::set<oracle::Mask> masks_of(const MultiFamily& c) {
  std::set<oracle::Mask> out;
  for (const auto& s : c.members) out.insert(static_cast<oracle::Mask>(cutset::to_mask(s)));
  return out;
}

std::vector<Subset> at_level(const MultiFamily& c, std::size_t level) {
  std::vector<Subset> out;
  for (const auto& s : c.members)
    if (s.size() == level) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("chain DP agrees with chain enumeration on random collections") {
  std::mt19937_64 rng(31);
  int cutsets = 0;
  for (int t = 0; t < 600; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<Subset> members;
    const unsigned density = 1 + rng() % 6;
    for (oracle::Mask s = 0; s < (oracle::Mask{1} << n); ++s)
      if (rng() % 16 < density) members.push_back(cutset::from_mask(s));
    const auto c = cutset::make_multifamily(n, members);
    const bool dp = cutset::is_cutset(c);
    cutsets += dp;
    REQUIRE(dp == oracle::meets_every_chain(n, masks_of(c)));
  }
  CHECK(cutsets > 50);
  CHECK(cutsets < 550);
}

TEST_CASE("chain DP basics") {
  for (int n = 1; n <= 12; ++n) {
    auto level = cutset::materialize({n, n / 2, 1, binomial(n, n / 2)});
    CHECK(cutset::is_cutset(cutset::make_multifamily(n, level.members)));
  }
  CHECK(cutset::is_cutset(cutset::make_multifamily(3, {S({})})));
  CHECK_FALSE(cutset::is_cutset(cutset::make_multifamily(3, {})));
  CHECK(cutset::is_cutset(cutset::make_multifamily(0, {S({})})));
  CHECK_THROWS_AS(cutset::is_cutset(MultiFamily{26, {}}), cutset::BudgetExceeded);
}

TEST_CASE("profile_of") {
  CHECK(cutset::profile_of(cutset::two_level(3, 1)).f == std::vector<Nat>{0, 2, 2, 0});
  CHECK(cutset::profile_of(MultiFamily{4, {}}).f == std::vector<Nat>(5, 0));
  CHECK(cutset::profile_of(cutset::qrs(6, 1).united()).f == std::vector<Nat>{0, 5, 4, 4, 0, 0, 0});
}

TEST_CASE("two-level cutset") {
  CHECK(cutset::two_level(3, 1).members == std::vector<Subset>{S({1}), S({2}), S({1, 3}), S({2, 3})});
  CHECK_THROWS_AS(cutset::two_level(3, 3), cutset::PreconditionError);
  CHECK_THROWS_AS(cutset::two_level(3, -1), cutset::PreconditionError);

  for (int n = 1; n <= 12; ++n) {
    for (int m = 0; m <= n - 1; ++m) {
      const auto c = cutset::two_level(n, m);
      auto expected = std::vector<Nat>(static_cast<std::size_t>(n) + 1, 0);
      expected[m] = expected[m + 1] = binomial(n - 1, m);
      REQUIRE(cutset::profile_of(c).f == expected);
      REQUIRE(cutset::is_cutset(c));
    }
  }
}

TEST_CASE("two-level cutset is tight at level m+1 (n <= 10)") {
  for (int n = 2; n <= 10; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      const auto c = cutset::two_level(n, m);
      for (const auto& removed : at_level(c, m + 1)) {
        auto members = c.members;
        std::erase(members, removed);
        REQUIRE_FALSE(cutset::is_cutset(cutset::make_multifamily(n, members)));
      }
      // The chain n, {n-1,n}, ..., {n-m,...,n}, ... misses the collection
      // once {n-m,...,n} is dropped.
      Subset top;
      for (int x = n - m; x <= n; ++x) top.elements.push_back(x);
      auto members = c.members;
      std::erase(members, top);
      auto masks = masks_of(cutset::make_multifamily(n, members));
      oracle::Mask cur = 0;
      bool hit = masks.count(cur) > 0;
      for (int x = n; x >= 1; --x) {
        cur |= oracle::Mask{1} << (x - 1);
        hit = hit || masks.count(cur) > 0;
      }
      REQUIRE_FALSE(hit);
    }
  }
}

TEST_CASE("Q/R/S construction") {
  const auto parts = cutset::qrs(6, 1);
  CHECK(parts.q.members == std::vector<Subset>{S({1}), S({2}), S({3}), S({4}), S({5})});
  CHECK(parts.r.members == std::vector<Subset>{S({1, 6}), S({2, 6}), S({3, 6}), S({4, 6})});
  CHECK(parts.s.members == std::vector<Subset>{S({1, 5, 6}), S({2, 5, 6}), S({3, 5, 6}), S({4, 5, 6})});
  CHECK_THROWS_AS(cutset::qrs(6, 0), cutset::PreconditionError);
  CHECK_THROWS_AS(cutset::qrs(7, 3), cutset::PreconditionError);

  for (int n = 4; n <= 14; ++n) {
    for (int m = 1; 2 * m + 2 <= n; ++m) {
      const auto c = cutset::qrs(n, m);
      Nat f = 0;
      for (int j = 0; j <= m - 1; ++j) f += binomial(n - 2 * j - 2, m - j);
      CAPTURE(n);
      CAPTURE(m);
      REQUIRE(c.q.size() == f + 1);
      REQUIRE(c.r.size() == f);
      REQUIRE(c.s.size() == f);
      REQUIRE(f + 1 == cutset::theorem1_value(n, m, m + 2));
      for (const auto& x : c.q.members) REQUIRE(x.size() == static_cast<std::size_t>(m));
      for (const auto& x : c.r.members) REQUIRE(x.size() == static_cast<std::size_t>(m + 1));
      for (const auto& x : c.s.members) REQUIRE(x.size() == static_cast<std::size_t>(m + 2));
      REQUIRE(cutset::is_cutset(c.united()));
    }
  }
}

TEST_CASE("doubling by complements") {
  const auto out = cutset::double_by_complements(cutset::two_level(5, 1), 6);
  CHECK(out.precondition_verified);
  CHECK(out.family.size() == 16);
  CHECK(cutset::profile_of(out.family).f == std::vector<Nat>{0, 4, 4, 0, 4, 4, 0});
  CHECK(cutset::is_cutset(out.family));

  // Base must sit strictly below n/2 and be a cutset of 2^[n-1].
  CHECK_THROWS_AS(cutset::double_by_complements(cutset::two_level(5, 2), 6), cutset::PreconditionError);
  CHECK_THROWS_AS(cutset::double_by_complements(cutset::make_multifamily(5, {S({1})}), 6),
                  cutset::PreconditionError);
  CHECK_THROWS_AS(cutset::double_by_complements(cutset::two_level(5, 1), 7), cutset::PreconditionError);

  for (int n = 3; n <= 12; ++n) {
    for (int m = 0; 2 * (m + 1) < n; ++m) {
      const auto d = cutset::double_by_complements(cutset::two_level(n - 1, m), n);
      REQUIRE(cutset::is_cutset(d.family));
      const auto p = cutset::profile_of(d.family);
      for (int i = 0; i <= n; ++i) REQUIRE(p.f[i] == p.f[n - i]);
    }
  }
}

TEST_CASE("exhaustive feasibility search") {
  CHECK_FALSE(cutset::exhaustive_feasible(cutset::make_profile({0, 3, 0, 0, 0})));
  CHECK(cutset::exhaustive_feasible(cutset::make_profile({1, 0, 0, 0, 0})));
  CHECK(cutset::exhaustive_feasible(cutset::make_profile({0, 0, 0, 0, 1})));
  CHECK(cutset::exhaustive_feasible(cutset::make_profile({0, 2, 5, 6, 0, 0})));
  CHECK_FALSE(cutset::exhaustive_feasible(cutset::make_profile({0, 2, 6, 5, 0, 0})));
  CHECK_THROWS_AS(cutset::exhaustive_feasible(cutset::make_profile(std::vector<Nat>(7, 0))),
                  cutset::BudgetExceeded);

  for (int n = 0; n <= 3; ++n) {
    auto outcome = props::exhaustive_agreement(n);
    INFO(outcome.first_failure);
    CHECK(outcome.ok());
  }

  std::mt19937_64 rng(5);
  for (int t = 0; t < 400; ++t) {
    const auto p = props::random_profile(5, rng);
    CAPTURE(cutset::format_nat_array(p.f));
    REQUIRE(cutset::exhaustive_feasible(p) == cutset::feasible(p));
  }
}
