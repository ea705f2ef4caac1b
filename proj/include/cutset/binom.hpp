#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cutset {

/// Exact integer used for every count (level sizes, profile entries, ranks).
/// Counts are nonnegative; the type is signed so that differences such as
/// u_m - f_m can be formed and handed to boundary() unclamped.
using Nat = boost::multiprecision::cpp_int;

/// C(a, b). Zero when b < 0, b > a or a < 0.
///
/// Values with a below an internal threshold come from a precomputed Pascal
/// triangle built on first use; larger ones use the multiplicative formula
/// with exact division.
Nat binomial(int a, int b);

/// One summand C(top, bottom) of a cascade representation.
struct CascadeTerm {
  int top = 0;
  int bottom = 0;

  friend bool operator==(const CascadeTerm&, const CascadeTerm&) = default;
};

/// The m-binomial representation K = C(a_m, m) + C(a_{m-1}, m-1) + ... + C(a_t, t)
/// with a_m > a_{m-1} > ... > a_t >= t >= 1. Terms are stored with the bottom
/// index descending from m.
struct CascadeRep {
  int m = 0;
  std::vector<CascadeTerm> terms;

  friend bool operator==(const CascadeRep&, const CascadeRep&) = default;
};

/// Greedy m-binomial representation of K. Throws PreconditionError when
/// K < 1 or m < 1.
CascadeRep cascade(const Nat& K, int m);

/// Sum of the terms of a representation.
Nat eval(const CascadeRep& rep);

/// True when the terms satisfy the strict-decrease constraints of a
/// cascade representation (nonempty, bottoms m, m-1, ..., t >= 1, tops
/// strictly decreasing, top >= bottom).
bool is_well_formed(const CascadeRep& rep);

/// The boundary operator: lowers every bottom index of cascade(K, m) by one.
/// Returns 0 for K <= 0. Requires m >= 1.
Nat boundary(const Nat& K, int m);

/// Renders "C(98,4)+C(96,3)+C(93,2)+C(87,1)".
std::string to_string(const CascadeRep& rep);

/// Inverse of to_string. Throws ParseError on malformed text.
CascadeRep parse_cascade(std::string_view text);

/// Decimal with thousands separators ("3,759,525"), for human-facing text.
std::string with_separators(const Nat& value);

/// Parses a nonnegative or negative decimal integer. Throws ParseError.
Nat parse_nat(std::string_view text);

}  // namespace cutset
