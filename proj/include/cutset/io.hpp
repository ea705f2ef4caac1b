#pragma once

// Text formats shared by the library and the command-line tool.
//
//  * Subset / family: one JSON integer array per line, e.g. "[1,3,5]"; the
//    empty set is "[]". Elements strictly increasing, no duplicate lines.
//  * Profile: one JSON array of nonnegative integers indexed by level. Values
//    of any size are accepted.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cutset/binom.hpp"
#include "cutset/colex.hpp"

namespace cutset {

Subset parse_subset(std::string_view text);
std::string format_subset(const Subset& s);

/// Reads one subset per nonblank line. Throws ParseError naming the line on
/// malformed or duplicate input.
std::vector<Subset> read_subsets(std::istream& in);
void write_subsets(std::ostream& out, const std::vector<Subset>& members);

/// JSON array of integers with exact big-integer values.
std::vector<Nat> parse_nat_array(std::string_view text);
std::string format_nat_array(const std::vector<Nat>& values);

/// JSON number when the value fits in 64 bits, otherwise a decimal string.
nlohmann::json nat_to_json(const Nat& value);
/// Accepts either encoding produced by nat_to_json.
Nat nat_from_json(const nlohmann::json& j);

}  // namespace cutset
