#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cutset/binom.hpp"
#include "cutset/canonical.hpp"

namespace cutset {

/// Profile with value k on levels m..l and zero elsewhere.
Profile constant_profile(int n, int m, int l, const Nat& k);

/// g_n(m, l): the least k for which constant_profile(n, m, l, k) is the
/// profile of a cutset. Queries with l > n - m are answered through
/// g_n(m, l) = g_n(n - l, n - m). Requires 0 <= m <= l <= n.
Nat g(int n, int m, int l);

/// Closed forms for the three narrowest bands:
///   l = m     -> C(n, m)
///   l = m + 1 -> C(n-1, m)
///   l = m + 2 -> sum_{j=0}^{m} C(n-2j-2, m-j)   (requires 0 <= m <= n/2 - 1)
Nat theorem1_value(int n, int m, int l);

struct Bounds {
  Nat lower_exclusive;
  Nat upper_inclusive;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Bounds for n >> m:
///   m+2 <= l <= n-m-1 : C(n-2, m) < g <= sum_{j=0}^{m} C(n-2j-2, m-j)
///   l = n-m           : C(n-3, m) < g <= sum_{j=0}^{m} C(n-2j-3, m-j)
Bounds theorem2_bounds(int n, int m, int l);

/// g_n(1, l) for n > 4: n, n-1 or n-2 depending on l.
Nat corollary3_value(int n, int l);

/// The symmetric profile with f_m = f_{m+1} = f_{n-m-1} = f_{n-m} = C(n-3, m)
/// and f_i = f_{n-i} = C(n+m-i-1, m+1) for m+2 <= i <= floor(n/2); never
/// the profile of a cutset. Requires m >= 1 and m + 2 <= floor(n/2) < n - m - 1.
Profile minusing_profile(int n, int m);

/// Exact check of the column identity
///   sum_{j<m-d} C(n-2j-2, m-j) + sum_{j<m-d} C(n-2j-1, m+2-j) + C(n-2m+2d, d+2) = C(n, m+2)
/// for 1 <= m <= n/2 and 0 <= d <= m-1.
bool vertical_identity_check(int n, int m, int d);

/// Conjectured closed form, or nullopt outside its range:
///   2m <= l <= n-m-1 : C(n, m) - C(n, m-1)
///   l = n-m          : C(n-1, m) - C(n-1, m-1)
std::optional<Nat> conjecture_value(int n, int m, int l);

struct GRow {
  int l = 0;
  Nat g;
  /// m-binomial representation of g; empty when m = 0.
  std::optional<CascadeRep> cascade;
  friend bool operator==(const GRow&, const GRow&) = default;
};

struct GTable {
  int n = 0;
  int m = 0;
  std::vector<GRow> rows;
  friend bool operator==(const GTable&, const GTable&) = default;
};

/// Values already known for some l (a persisted cache, say); nullopt means
/// "compute it".
using KnownG = std::function<std::optional<Nat>(int l)>;

/// Rows for l = from..to. `jobs` > 1 evaluates rows on worker threads.
GTable g_table(int n, int m, int from, int to, unsigned jobs = 1, const KnownG& known = {});

/// Row assembly shared with callers that obtain g from elsewhere.
GRow make_row(int m, int l, Nat value);

}  // namespace cutset
