#include "cutset/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "cutset/errors.hpp"

namespace cutset {

namespace {

bool size_then_squashed(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return SquashedLess{}(a, b);
}

// All k-subsets of [n] in squashed order.
std::vector<Subset> all_subsets(int n, int k) {
  if (k < 0 || k > n) return {};
  return materialize(Segment{n, k, 1, binomial(n, k)}).members;
}

Subset with(Subset s, std::initializer_list<int> extra) {
  for (int x : extra) s.elements.push_back(x);
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

}  // namespace

MultiFamily make_multifamily(int n, std::vector<Subset> members) {
  if (n < 0) throw PreconditionError("ground set size must be >= 0");
  for (const auto& s : members) validate_subset(s, n);
  std::sort(members.begin(), members.end(), size_then_squashed);
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw PreconditionError("collection contains a duplicate member");
  return MultiFamily{n, std::move(members)};
}

MultiFamily union_of(int n, const std::vector<Family>& levels) {
  std::vector<Subset> all;
  for (const auto& fam : levels) {
    if (fam.n != n) throw PreconditionError("union_of: families over different ground sets");
    all.insert(all.end(), fam.members.begin(), fam.members.end());
  }
  return make_multifamily(n, std::move(all));
}

Profile profile_of(const MultiFamily& c) {
  Profile p{c.n, std::vector<Nat>(static_cast<std::size_t>(c.n) + 1, 0)};
  for (const auto& s : c.members) p.f[s.size()] += 1;
  return p;
}

MultiFamily two_level(int n, int m) {
  if (m < 0 || m > n - 1) throw PreconditionError("two_level: requires 0 <= m <= n-1");
  std::vector<Subset> members = all_subsets(n - 1, m);
  for (const auto& s : all_subsets(n - 1, m)) members.push_back(with(s, {n}));
  return make_multifamily(n, std::move(members));
}

MultiFamily QRS::united() const {
  std::vector<Subset> all = q.members;
  all.insert(all.end(), r.members.begin(), r.members.end());
  all.insert(all.end(), s.members.begin(), s.members.end());
  return make_multifamily(q.n, std::move(all));
}

QRS qrs(int n, int m) {
  if (m < 1 || 2 * m + 2 > n) throw PreconditionError("qrs: requires 1 <= m <= n/2 - 1");

  // Q_j = { A + {n-1, n-3, ..., n-2j+1} : A an (m-j)-subset of [n-2j-2] }.
  std::vector<std::vector<Subset>> q_parts(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    for (auto s : all_subsets(n - 2 * j - 2, m - j)) {
      for (int i = 1; i <= j; ++i) s.elements.push_back(n - 2 * i + 1);
      std::sort(s.elements.begin(), s.elements.end());
      q_parts[j].push_back(std::move(s));
    }
  }
  // R_j adds n-2j+2 to Q_{j-1}; S_j adds n-2j+1 to R_j.
  std::vector<Subset> q, r, s;
  for (const auto& part : q_parts) q.insert(q.end(), part.begin(), part.end());
  for (int j = 1; j <= m; ++j) {
    for (const auto& base : q_parts[j - 1]) {
      Subset rj = with(base, {n - 2 * j + 2});
      s.push_back(with(rj, {n - 2 * j + 1}));
      r.push_back(std::move(rj));
    }
  }
  return QRS{make_multifamily(n, std::move(q)), make_multifamily(n, std::move(r)),
             make_multifamily(n, std::move(s))};
}

DoubledFamily double_by_complements(const MultiFamily& base, int n) {
  if (base.n != n - 1) throw PreconditionError("double_by_complements: base must live in 2^[n-1]");
  for (const auto& x : base.members) {
    if (2 * static_cast<int>(x.size()) >= n)
      throw PreconditionError("double_by_complements: base members must have size < n/2");
  }
  DoubledFamily out;
  if (n - 1 <= 20) {
    if (!is_cutset(base)) throw PreconditionError("double_by_complements: base is not a cutset of 2^[n-1]");
    out.precondition_verified = true;
  }
  std::vector<Subset> members;
  for (const auto& x : base.members) {
    members.push_back(x);
    members.push_back(complement(x, n));
  }
  out.family = make_multifamily(n, std::move(members));
  return out;
}

bool is_cutset(const MultiFamily& c) {
  const int n = c.n;
  if (n > kMaxChainDpN)
    throw BudgetExceeded("is_cutset: n = " + std::to_string(n) + " exceeds the 2^n budget (n <= " +
                         std::to_string(kMaxChainDpN) + ")");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  constexpr std::uint8_t kMember = 1, kReach = 2;
  std::vector<std::uint8_t> state(std::size_t{1} << n, 0);
  for (const auto& s : c.members) state[to_mask(s)] |= kMember;

  // Every S \ {s} is numerically smaller than S, so one ascending pass
  // settles each node after all of its lower covers.
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (state[s] & kMember) continue;
    bool reach = (s == 0);
    for (std::uint32_t bits = s; bits != 0 && !reach; bits &= bits - 1) {
      if (state[s ^ (bits & -bits)] & kReach) reach = true;
    }
    if (reach) state[s] |= kReach;
  }
  return (state[full] & kReach) == 0;
}

namespace {

class ExhaustiveSearch {
 public:
  explicit ExhaustiveSearch(const Profile& p) : n_(p.n) {
    for (const auto& x : p.f) f_.push_back(x.convert_to<int>());
    std::vector<int> index(std::size_t{1} << n_, -1);
    nodes_.resize(n_ + 1);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n_); ++mask) {
      auto& level = nodes_[std::popcount(mask)];
      index[mask] = static_cast<int>(level.size());
      level.push_back(mask);
    }
    covers_.resize(n_ + 1);
    for (int i = 0; i < n_; ++i) {
      for (std::uint32_t node : nodes_[i]) {
        std::uint64_t up = 0;
        for (int x = 0; x < n_; ++x)
          if (!(node >> x & 1)) up |= std::uint64_t{1} << index[node | (1u << x)];
        covers_[i].push_back(up);
      }
    }
  }

  bool run() { return solve(0, 1); }

 private:
  // `reach`: level-i nodes joined to the empty set by a chain that avoids
  // every member chosen so far. Members outside `reach` cannot block a chain,
  // so only the number and identity of the members inside it matter.
  bool solve(int level, std::uint64_t reach) {
    auto key = std::make_pair(level, reach);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int total = static_cast<int>(nodes_[level].size());
    const int open = std::popcount(reach);
    const int want = f_[level];
    const int k_min = std::max(0, want - (total - open));
    const int k_max = std::min(want, open);

    bool found = false;
    for (std::uint64_t chosen = reach;; chosen = (chosen - 1) & reach) {
      int k = std::popcount(chosen);
      if (k >= k_min && k <= k_max) {
        std::uint64_t rest = reach & ~chosen;
        if (rest == 0) {
          found = true;
        } else if (level < n_) {
          found = solve(level + 1, shade(level, rest));
        }
        if (found) break;
      }
      if (chosen == 0) break;
    }
    memo_.emplace(key, found);
    return found;
  }

  std::uint64_t shade(int level, std::uint64_t set) const {
    std::uint64_t out = 0;
    for (; set != 0; set &= set - 1) out |= covers_[level][std::countr_zero(set)];
    return out;
  }

  int n_;
  std::vector<int> f_;
  std::vector<std::vector<std::uint32_t>> nodes_;
  std::vector<std::vector<std::uint64_t>> covers_;
  std::map<std::pair<int, std::uint64_t>, bool> memo_;
};

}  // namespace

bool exhaustive_feasible(const Profile& p) {
  if (!in_omega(p)) throw PreconditionError("exhaustive_feasible: profile is outside Omega_n");
  if (p.n > kMaxExhaustiveN)
    throw BudgetExceeded("exhaustive_feasible: n = " + std::to_string(p.n) + " exceeds the search budget (n <= " +
                         std::to_string(kMaxExhaustiveN) + ")");
  return ExhaustiveSearch(p).run();
}

}  // namespace cutset
