#include "cutset/colex.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "cutset/errors.hpp"

namespace cutset {

bool Subset::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

void validate_subset(const Subset& s, int n) {
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    int x = s.elements[i];
    if (x < 1 || x > n)
      throw PreconditionError("subset element " + std::to_string(x) + " outside 1.." + std::to_string(n));
    if (i > 0 && s.elements[i - 1] >= x)
      throw PreconditionError("subset elements must be strictly increasing");
  }
}

std::uint64_t to_mask(const Subset& s) {
  std::uint64_t mask = 0;
  for (int x : s.elements) {
    if (x < 1 || x > 64) throw PreconditionError("to_mask: element outside 1..64");
    mask |= std::uint64_t{1} << (x - 1);
  }
  return mask;
}

Subset from_mask(std::uint64_t mask) {
  Subset s;
  s.elements.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    s.elements.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return s;
}

Subset complement(const Subset& s, int n) {
  Subset out;
  out.elements.reserve(static_cast<std::size_t>(n) - s.size());
  for (int x = 1; x <= n; ++x)
    if (!s.contains(x)) out.elements.push_back(x);
  return out;
}

Family make_family(int n, int level, std::vector<Subset> members) {
  if (n < 0 || level < 0 || level > n) throw PreconditionError("family level outside 0..n");
  for (const auto& s : members) {
    validate_subset(s, n);
    if (static_cast<int>(s.size()) != level)
      throw PreconditionError("family member size differs from the family level");
  }
  std::sort(members.begin(), members.end(), SquashedLess{});
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw PreconditionError("family contains a duplicate member");
  return Family{n, level, std::move(members)};
}

std::strong_ordering compare_squashed(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) throw PreconditionError("compare_squashed: subsets differ in size");
  // Walking from the top, the first mismatch is max(A xor B); it belongs to
  // whichever side holds the larger value there.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a.elements[i] != b.elements[i])
      return a.elements[i] < b.elements[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Nat rank(const Subset& s) {
  Nat r = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    r += binomial(s.elements[i] - 1, static_cast<int>(i) + 1);
  return r;
}

Subset unrank(const Nat& K, int m, int n) {
  if (m < 0 || m > n) throw PreconditionError("unrank: level outside 0..n");
  if (K < 1 || K > binomial(n, m)) throw PreconditionError("unrank: rank out of range");
  // Combinatorial number system of K-1: greedily take the largest c with
  // C(c, i) <= rest for i = m..1; element i is c + 1.
  Subset s;
  s.elements.resize(static_cast<std::size_t>(m));
  Nat rest = K - 1;
  int cap = n - 1;
  for (int i = m; i >= 1; --i) {
    int lo = i - 1, hi = cap;
    while (lo < hi) {
      int mid = lo + (hi - lo + 1) / 2;
      if (binomial(mid, i) <= rest) lo = mid;
      else hi = mid - 1;
    }
    s.elements[static_cast<std::size_t>(i - 1)] = lo + 1;
    rest -= binomial(lo, i);
    cap = lo - 1;
  }
  return s;
}

bool next_squashed(Subset& s, int n) {
  auto& e = s.elements;
  const std::size_t m = e.size();
  for (std::size_t i = 0; i < m; ++i) {
    int limit = (i + 1 < m) ? e[i + 1] : n + 1;
    if (e[i] + 1 < limit) {
      ++e[i];
      for (std::size_t j = 0; j < i; ++j) e[j] = static_cast<int>(j) + 1;
      return true;
    }
  }
  return false;
}

Family materialize(const Segment& segment) {
  Family out{segment.n, segment.level, {}};
  if (segment.empty()) return out;
  if (segment.start < 1 || segment.end > binomial(segment.n, segment.level))
    throw PreconditionError("materialize: segment outside the level");
  const auto count = segment.size().convert_to<std::size_t>();
  out.members.reserve(count);
  Subset cur = unrank(segment.start, segment.level, segment.n);
  out.members.push_back(cur);
  for (std::size_t k = 1; k < count; ++k) {
    next_squashed(cur, segment.n);
    out.members.push_back(cur);
  }
  return out;
}

Family initial(const Nat& K, int m, int n) {
  if (m < 0 || m > n) throw PreconditionError("initial: level outside 0..n");
  if (K > binomial(n, m)) throw PreconditionError("initial: K exceeds the level size");
  if (K <= 0) return Family{n, m, {}};
  return materialize(Segment{n, m, 1, K});
}

Family last(const Nat& K, int m, int n) {
  if (m < 0 || m > n) throw PreconditionError("last: level outside 0..n");
  const Nat size = binomial(n, m);
  if (K > size) throw PreconditionError("last: K exceeds the level size");
  if (K <= 0) return Family{n, m, {}};
  return materialize(Segment{n, m, size - K + 1, size});
}

Family shadow(const Family& family) {
  if (family.level < 1) throw PreconditionError("shadow: level must be >= 1");
  std::set<Subset, SquashedLess> out;
  for (const auto& s : family.members) {
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      Subset t;
      t.elements.reserve(s.size() - 1);
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) t.elements.push_back(s.elements[i]);
      out.insert(std::move(t));
    }
  }
  return Family{family.n, family.level - 1, {out.begin(), out.end()}};
}

Family shade(const Family& family) {
  if (family.level > family.n - 1) throw PreconditionError("shade: level must be <= n-1");
  std::set<Subset, SquashedLess> out;
  for (const auto& s : family.members) {
    for (int x = 1; x <= family.n; ++x) {
      if (s.contains(x)) continue;
      Subset t = s;
      t.elements.insert(std::upper_bound(t.elements.begin(), t.elements.end(), x), x);
      out.insert(std::move(t));
    }
  }
  return Family{family.n, family.level + 1, {out.begin(), out.end()}};
}

}  // namespace cutset
