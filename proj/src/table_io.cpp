#include "cutset/table_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cutset/errors.hpp"
#include "cutset/io.hpp"

namespace cutset {

namespace {

std::vector<std::string> split(const std::string& line, char sep, std::size_t max_fields) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (out.size() + 1 < max_fields) {
    auto pos = line.find(sep, start);
    if (pos == std::string::npos) break;
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  out.push_back(line.substr(start));
  return out;
}

int parse_int(const std::string& text) {
  Nat v = parse_nat(text);
  if (v < -1'000'000 || v > 1'000'000) throw ParseError("integer out of range: " + text);
  return v.convert_to<int>();
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

GRow checked_row(int m, int l, Nat g, const std::string& rendered) {
  GRow row{l, std::move(g), std::nullopt};
  if (!rendered.empty()) {
    row.cascade = parse_cascade(rendered);
    if (row.cascade->m != m || eval(*row.cascade) != row.g)
      throw ParseError("cascade " + rendered + " does not represent " + row.g.str());
  }
  return row;
}

}  // namespace

void write_table_csv(std::ostream& out, const GTable& table) {
  out << "l,g,cascade\n";
  for (const auto& row : table.rows)
    out << row.l << ',' << row.g << ",\"" << (row.cascade ? to_string(*row.cascade) : "") << "\"\n";
}

GTable read_table_csv(std::istream& in, int n, int m) {
  GTable table{n, m, {}};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("table: missing header");
  strip_cr(line);
  if (line != "l,g,cascade") throw ParseError("table: unexpected header '" + line + "'");
  for (int number = 2; std::getline(in, line); ++number) {
    strip_cr(line);
    if (line.empty()) continue;
    try {
      auto fields = split(line, ',', 3);
      if (fields.size() != 3) throw ParseError("expected 3 fields");
      std::string rendered = fields[2];
      if (rendered.size() < 2 || rendered.front() != '"' || rendered.back() != '"')
        throw ParseError("cascade column must be quoted");
      rendered = rendered.substr(1, rendered.size() - 2);
      table.rows.push_back(checked_row(m, parse_int(fields[0]), parse_nat(fields[1]), rendered));
    } catch (const ParseError& e) {
      throw ParseError("table line " + std::to_string(number) + ": " + e.what());
    }
  }
  return table;
}

nlohmann::json table_to_json(const GTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"l", row.l},
                    {"g", nat_to_json(row.g)},
                    {"cascade", row.cascade ? to_string(*row.cascade) : ""}});
  }
  return {{"n", table.n}, {"m", table.m}, {"rows", rows}};
}

GTable table_from_json(const nlohmann::json& j) {
  try {
    GTable table{j.at("n").get<int>(), j.at("m").get<int>(), {}};
    for (const auto& r : j.at("rows")) {
      table.rows.push_back(
          checked_row(table.m, r.at("l").get<int>(), nat_from_json(r.at("g")), r.at("cascade").get<std::string>()));
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table json: ") + e.what());
  }
}

GCache GCache::load(const std::filesystem::path& path) {
  GCache cache(path);
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    strip_cr(line);
    if (number == 1 && line == "n,m,l,g") continue;
    if (line.empty()) continue;
    try {
      auto fields = split(line, ',', 5);
      if (fields.size() != 4) throw ParseError("expected 4 fields");
      int n = parse_int(fields[0]), m = parse_int(fields[1]), l = parse_int(fields[2]);
      Nat g = parse_nat(fields[3]);
      if (n < 0 || m < 0 || m > l || l > n || g < 0) throw ParseError("values out of range");
      cache.entries_[{n, m, l}] = std::move(g);
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return cache;
}

std::optional<Nat> GCache::find(int n, int m, int l) const {
  auto it = entries_.find({n, m, l});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void GCache::insert(int n, int m, int l, const Nat& g) {
  auto [it, inserted] = entries_.try_emplace({n, m, l}, g);
  if (inserted) dirty_ = true;
}

void GCache::save() {
  if (!dirty_) return;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  auto tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << "n,m,l,g\n";
    for (const auto& [key, g] : entries_)
      out << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key) << ',' << g << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path_);
  dirty_ = false;
}

}  // namespace cutset
