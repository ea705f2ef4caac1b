#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cutset/binom.hpp"
#include "cutset/colex.hpp"

namespace cutset {

/// Per-level counts (f_0, ..., f_n) of a collection in 2^[n].
struct Profile {
  int n = 0;
  std::vector<Nat> f;

  friend bool operator==(const Profile&, const Profile&) = default;
};

/// 0 <= f_m <= C(n, m) for every level.
bool in_omega(const Profile& p);

/// Builds a profile over n = f.size() - 1; throws PreconditionError when the
/// vector is empty or outside Omega_n.
Profile make_profile(std::vector<Nat> f);

/// u_m = |E_m up| and v_m = |E_m down|: the sizes of the level-m nodes still
/// reachable from the bottom (resp. top) without meeting the canonical
/// collection.
struct UVVectors {
  std::vector<Nat> u;
  std::vector<Nat> v;
};

/// u_0 = 1, u_{m+1} = boundary(u_m - f_m, n - m);
/// v_n = 1, v_{m-1} = boundary(v_m - f_m, m).
UVVectors uv(const Profile& p);

enum class CheckMode {
  single_level,  ///< check at floor(n/2) only
  all_levels,    ///< check every level and require the verdicts to agree
};

struct Feasibility {
  bool feasible = false;
  int check_level = 0;
  /// (level, C(n,m) + f_m - u_m - v_m) for every level inspected; the
  /// profile is feasible iff the slack is nonnegative.
  std::vector<std::pair<int, Nat>> slack;
};

/// Decides whether some cutset of 2^[n] has profile p.
/// In all_levels mode a level-dependent verdict raises std::logic_error.
Feasibility is_cutset_profile(const Profile& p, CheckMode mode = CheckMode::single_level);

/// Shorthand for is_cutset_profile(p).feasible.
bool feasible(const Profile& p);

/// The canonical collection C(f, m0) in compressed form: last-collection
/// segments C_i up for levels 0..m0 and initial-collection segments C_i down
/// for levels m0+1..n.
struct CanonicalCollection {
  Profile profile;
  int pivot = 0;
  std::vector<Segment> up;    // index i = level i, 0 <= i <= pivot
  std::vector<Segment> down;  // index i = level pivot + 1 + i
  UVVectors uv;

  const Segment& segment(int level) const;
  /// Per-level member counts c_i.
  std::vector<Nat> counts() const;
};

CanonicalCollection canonical(const Profile& p, int pivot);

inline constexpr std::uint64_t kDefaultMaterializationBudget = 1'000'000;

/// One Family per level 0..n. Refuses (BudgetExceeded) when any level of
/// 2^[n] is larger than `budget`.
std::vector<Family> emit_sets(const CanonicalCollection& c,
                              std::uint64_t budget = kDefaultMaterializationBudget);

/// Runs the set-level construction literally (explicit shades, shadows and
/// last/initial collections). Independent check of uv() and canonical().
CanonicalCollection simulate_sets(const Profile& p, int pivot,
                                  std::uint64_t budget = kDefaultMaterializationBudget);

/// Throws BudgetExceeded if some level of 2^[n] holds more than `budget` nodes.
void check_level_budget(int n, std::uint64_t budget);

}  // namespace cutset
