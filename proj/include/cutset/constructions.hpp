#pragma once

#include <vector>

#include "cutset/canonical.hpp"
#include "cutset/colex.hpp"

namespace cutset {

/// Duplicate-free subsets of [n] of mixed sizes, ordered by size and then
/// squashed order within a level.
struct MultiFamily {
  int n = 0;
  std::vector<Subset> members;

  std::size_t size() const { return members.size(); }
  friend bool operator==(const MultiFamily&, const MultiFamily&) = default;
};

MultiFamily make_multifamily(int n, std::vector<Subset> members);

/// Union of level families over the same ground set.
MultiFamily union_of(int n, const std::vector<Family>& levels);

Profile profile_of(const MultiFamily& c);

// ---------------------------------------------------------------------------
// Explicit cutsets

/// All m-subsets of [n-1] together with all (m+1)-subsets containing n.
/// Requires 0 <= m <= n-1.
MultiFamily two_level(int n, int m);

/// Cutset with profile (f+1, f, f) on levels m, m+1, m+2 where
/// f = sum_{j=0}^{m-1} C(n-2j-2, m-j). Requires 1 <= m and 2m + 2 <= n.
struct QRS {
  MultiFamily q;  ///< level m
  MultiFamily r;  ///< level m+1
  MultiFamily s;  ///< level m+2

  MultiFamily united() const;
};

QRS qrs(int n, int m);

/// A together with the complements [n] \ X of its members.
struct DoubledFamily {
  MultiFamily family;
  /// False when the input was too large to confirm with is_cutset and was
  /// accepted on trust.
  bool precondition_verified = false;
};

/// `base` must live in 2^[n-1], have every member size s with 2s < n and be a
/// cutset there (checked with is_cutset when n - 1 <= 20).
DoubledFamily double_by_complements(const MultiFamily& base, int n);

// ---------------------------------------------------------------------------
// Brute-force oracles

inline constexpr int kMaxChainDpN = 25;

/// True iff every maximal chain of 2^[n] meets C. Dynamic program over all 2^n
/// subsets; BudgetExceeded for n > kMaxChainDpN.
bool is_cutset(const MultiFamily& c);

inline constexpr int kMaxExhaustiveN = 5;

/// True iff some family with exactly profile p is a cutset, by exhaustive
/// search over member choices (memoized on the set of still-reachable nodes).
/// BudgetExceeded for n > kMaxExhaustiveN.
bool exhaustive_feasible(const Profile& p);

}  // namespace cutset
