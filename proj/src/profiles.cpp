#include "cutset/profiles.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "cutset/errors.hpp"

namespace cutset {

namespace {

void require_band(int n, int m, int l, const char* op) {
  if (n < 0 || m < 0 || m > l || l > n)
    throw PreconditionError(std::string(op) + ": requires 0 <= m <= l <= n");
}

// sum_{j=0}^{m} C(top - 2j, m - j)
Nat staircase(int top, int m) {
  Nat sum = 0;
  for (int j = 0; j <= m; ++j) sum += binomial(top - 2 * j, m - j);
  return sum;
}

}  // namespace

Profile constant_profile(int n, int m, int l, const Nat& k) {
  require_band(n, m, l, "constant_profile");
  if (k < 0) throw PreconditionError("constant_profile: k must be >= 0");
  Profile p{n, std::vector<Nat>(static_cast<std::size_t>(n) + 1, 0)};
  for (int i = m; i <= l; ++i) {
    if (k > binomial(n, i))
      throw PreconditionError("constant_profile: k exceeds C(n," + std::to_string(i) + ")");
    p.f[i] = k;
  }
  return p;
}

Nat g(int n, int m, int l) {
  require_band(n, m, l, "g");
  if (l > n - m) return g(n, n - l, n - m);

  // Feasibility is monotone in k, the full level m (k = C(n,m)) is a cutset
  // and C(n,m) <= C(n,i) on the whole band once l <= n - m.
  Nat lo = 0;
  Nat hi = binomial(n, m);
  while (lo < hi) {
    Nat mid = (lo + hi) / 2;
    if (feasible(constant_profile(n, m, l, mid))) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

Nat theorem1_value(int n, int m, int l) {
  require_band(n, m, l, "theorem1_value");
  if (l == m) return binomial(n, m);
  if (l == m + 1) return binomial(n - 1, m);
  if (l == m + 2) {
    if (2 * m + 2 > n) throw PreconditionError("theorem1_value: l = m+2 requires m <= n/2 - 1");
    return staircase(n - 2, m);
  }
  throw PreconditionError("theorem1_value: only l in {m, m+1, m+2} has a closed form");
}

Bounds theorem2_bounds(int n, int m, int l) {
  require_band(n, m, l, "theorem2_bounds");
  if (m + 2 <= l && l <= n - m - 1) return Bounds{binomial(n - 2, m), staircase(n - 2, m)};
  if (l == n - m) return Bounds{binomial(n - 3, m), staircase(n - 3, m)};
  throw PreconditionError("theorem2_bounds: requires m+2 <= l <= n-m-1 or l = n-m");
}

Nat corollary3_value(int n, int l) {
  if (n <= 4) throw PreconditionError("corollary3_value: requires n > 4");
  if (l < 1 || l > n - 1) throw PreconditionError("corollary3_value: requires 1 <= l <= n-1");
  if (l == 1) return n;
  if (l == n - 1) return n - 2;
  return n - 1;
}

Profile minusing_profile(int n, int m) {
  const int half = n / 2;
  // At m = 0 the profile would contain the empty set and the full set.
  if (m < 1 || m + 2 > half || n - m - 1 <= half)
    throw PreconditionError("minusing_profile: requires m >= 1 and m + 2 <= floor(n/2) < n - m - 1");
  std::vector<Nat> f(static_cast<std::size_t>(n) + 1, 0);
  const Nat edge = binomial(n - 3, m);
  for (int i : {m, m + 1, n - m - 1, n - m}) f[i] = edge;
  for (int i = m + 2; i <= half; ++i) f[i] = f[n - i] = binomial(n + m - i - 1, m + 1);
  return make_profile(std::move(f));
}

bool vertical_identity_check(int n, int m, int d) {
  if (n < 1 || m < 1 || 2 * m > n || d < 0 || d > m - 1)
    throw PreconditionError("vertical_identity_check: requires 1 <= m <= n/2 and 0 <= d <= m-1");
  Nat lhs = binomial(n - 2 * m + 2 * d, d + 2);
  for (int j = 0; j <= m - d - 1; ++j)
    lhs += binomial(n - 2 * j - 2, m - j) + binomial(n - 2 * j - 1, m + 2 - j);
  return lhs == binomial(n, m + 2);
}

std::optional<Nat> conjecture_value(int n, int m, int l) {
  if (n < 0 || m < 0 || m > l || l > n) return std::nullopt;
  if (2 * m <= l && l <= n - m - 1) return binomial(n, m) - binomial(n, m - 1);
  if (l == n - m) return binomial(n - 1, m) - binomial(n - 1, m - 1);
  return std::nullopt;
}

GRow make_row(int m, int l, Nat value) {
  GRow row{l, std::move(value), std::nullopt};
  if (m >= 1 && row.g >= 1) row.cascade = cascade(row.g, m);
  return row;
}

GTable g_table(int n, int m, int from, int to, unsigned jobs, const KnownG& known) {
  require_band(n, m, to, "g_table");
  if (from < m || from > to) throw PreconditionError("g_table: requires m <= from <= to <= n");

  GTable table{n, m, std::vector<GRow>(static_cast<std::size_t>(to - from + 1))};
  std::atomic<int> next{from};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (int l = next++; l <= to; l = next++) {
      try {
        std::optional<Nat> value = known ? known(l) : std::nullopt;
        table.rows[l - from] = make_row(m, l, value ? *value : g(n, m, l));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(to - from + 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

}  // namespace cutset
