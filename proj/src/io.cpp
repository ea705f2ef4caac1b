#include "cutset/io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <string>

#include "cutset/errors.hpp"

namespace cutset {

namespace {

using json = nlohmann::json;

// SAX consumer for a flat array of integers. Integers too wide for 64 bits
// reach number_float together with their source text, which is kept verbatim.
class IntegerArrayReader : public json::json_sax_t {
 public:
  std::vector<Nat> values;

  bool null() override { return reject("null"); }
  bool boolean(bool) override { return reject("boolean"); }
  bool number_integer(number_integer_t v) override {
    if (depth_ != 1) return reject("nested value");
    values.emplace_back(v);
    return true;
  }
  bool number_unsigned(number_unsigned_t v) override {
    if (depth_ != 1) return reject("nested value");
    values.emplace_back(v);
    return true;
  }
  bool number_float(number_float_t, const string_t& text) override {
    if (depth_ != 1) return reject("nested value");
    if (text.find_first_not_of("-0123456789") != string_t::npos) return reject("non-integer number");
    values.push_back(parse_nat(text));
    return true;
  }
  bool string(string_t&) override { return reject("string"); }
  bool binary(binary_t&) override { return reject("binary"); }
  bool start_object(std::size_t) override { return reject("object"); }
  bool key(string_t&) override { return reject("object"); }
  bool end_object() override { return reject("object"); }
  bool start_array(std::size_t) override {
    if (depth_++ != 0) return reject("nested array");
    return true;
  }
  bool end_array() override {
    --depth_;
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const json::exception& ex) override {
    error = ex.what();
    return false;
  }

  std::string error;

 private:
  bool reject(const char* what) {
    error = std::string("unexpected ") + what;
    return false;
  }
  int depth_ = 0;
};

}  // namespace

std::vector<Nat> parse_nat_array(std::string_view text) {
  IntegerArrayReader reader;
  const bool ok = json::sax_parse(text.begin(), text.end(), &reader);
  if (!ok) throw ParseError("expected a JSON integer array, got '" + std::string(text) + "': " + reader.error);
  // A bare scalar never opens the array.
  std::string_view trimmed = text.substr(std::min(text.find_first_not_of(" \t\r\n"), text.size()));
  if (trimmed.empty() || trimmed.front() != '[')
    throw ParseError("expected a JSON integer array, got '" + std::string(text) + "'");
  return std::move(reader.values);
}

std::string format_nat_array(const std::vector<Nat>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += values[i].str();
  }
  return out + "]";
}

Subset parse_subset(std::string_view text) {
  Subset s;
  for (const auto& v : parse_nat_array(text)) {
    if (v < 1 || v > std::numeric_limits<int>::max())
      throw ParseError("subset element out of range in '" + std::string(text) + "'");
    s.elements.push_back(v.convert_to<int>());
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s.elements[i - 1] >= s.elements[i])
      throw ParseError("subset elements must be strictly increasing: '" + std::string(text) + "'");
  }
  return s;
}

std::string format_subset(const Subset& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.elements[i]);
  }
  return out + "]";
}

std::vector<Subset> read_subsets(std::istream& in) {
  std::vector<Subset> out;
  std::set<Subset> seen;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Subset s = parse_subset(line);
      if (!seen.insert(s).second) throw ParseError("duplicate subset");
      out.push_back(std::move(s));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

void write_subsets(std::ostream& out, const std::vector<Subset>& members) {
  for (const auto& s : members) out << format_subset(s) << '\n';
}

json nat_to_json(const Nat& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
    return value.convert_to<std::uint64_t>();
  if (value < 0 && value >= std::numeric_limits<std::int64_t>::min())
    return value.convert_to<std::int64_t>();
  return value.str();
}

Nat nat_from_json(const json& j) {
  if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Nat(j.get<std::int64_t>());
  if (j.is_string()) return parse_nat(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

}  // namespace cutset
