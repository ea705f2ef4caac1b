#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cutset/binom.hpp"

namespace cutset {

/// A node of 2^[n]: strictly increasing elements drawn from 1..n.
struct Subset {
  std::vector<int> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(int x) const;

  // Lexicographic on the element list; only used for container keys.
  friend auto operator<=>(const Subset&, const Subset&) = default;
};

/// Throws PreconditionError unless `s` is strictly increasing within 1..n.
void validate_subset(const Subset& s, int n);

/// Bit i-1 set iff i is an element. Requires every element <= 64.
std::uint64_t to_mask(const Subset& s);
Subset from_mask(std::uint64_t mask);

/// [n] \ s.
Subset complement(const Subset& s, int n);

/// A duplicate-free set of subsets of [n], all of size `level`, kept in
/// squashed order. Build through make_family().
struct Family {
  int n = 0;
  int level = 0;
  std::vector<Subset> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  friend bool operator==(const Family&, const Family&) = default;
};

/// Validates sizes and ranges, sorts into squashed order and rejects
/// duplicates (PreconditionError).
Family make_family(int n, int level, std::vector<Subset> members);

/// A contiguous range of 1-based squashed-order ranks at one level.
/// Empty iff start == end + 1.
struct Segment {
  int n = 0;
  int level = 0;
  Nat start = 1;
  Nat end = 0;

  bool empty() const { return start > end; }
  Nat size() const { return empty() ? Nat(0) : Nat(end - start + 1); }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Squashed (colex) order: A < B iff the largest element of A xor B lies in B.
/// Throws PreconditionError when |A| != |B|.
std::strong_ordering compare_squashed(const Subset& a, const Subset& b);

struct SquashedLess {
  bool operator()(const Subset& a, const Subset& b) const {
    return compare_squashed(a, b) == std::strong_ordering::less;
  }
};

/// 1-based position of `s` among the |s|-subsets in squashed order:
/// 1 + sum_i C(c_i - 1, i) over the sorted elements c_1 < ... < c_m.
/// Independent of the ground set size.
Nat rank(const Subset& s);

/// The m-subset of [n] at 1-based rank K. Throws PreconditionError unless
/// 1 <= K <= C(n, m).
Subset unrank(const Nat& K, int m, int n);

/// Colex successor in place; returns false when `s` is the last m-subset of [n].
bool next_squashed(Subset& s, int n);

/// First K m-subsets of [n] in squashed order; empty for K <= 0.
Family initial(const Nat& K, int m, int n);
/// Last K m-subsets of [n] in squashed order; empty for K <= 0.
Family last(const Nat& K, int m, int n);

/// All (level-1)-subsets contained in a member.
Family shadow(const Family& family);
/// All (level+1)-subsets of [n] containing a member.
Family shade(const Family& family);

/// The subsets at ranks start..end, in squashed order.
Family materialize(const Segment& segment);

}  // namespace cutset
