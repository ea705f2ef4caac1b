#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <tuple>

#include <json.hpp>

#include "cutset/profiles.hpp"

namespace cutset {

/// CSV with header "l,g,cascade"; the cascade column is always quoted since
/// it contains commas.
void write_table_csv(std::ostream& out, const GTable& table);
GTable read_table_csv(std::istream& in, int n, int m);

/// {"n":..,"m":..,"rows":[{"l":..,"g":..,"cascade":"C(..)+.."}]}
nlohmann::json table_to_json(const GTable& table);
GTable table_from_json(const nlohmann::json& j);

/// Persisted g values keyed by (n, m, l), stored as CSV "n,m,l,g".
/// Saving writes a sibling temporary file and renames it over the cache so a
/// failed write leaves the previous contents intact.
class GCache {
 public:
  GCache() = default;
  explicit GCache(std::filesystem::path path) : path_(std::move(path)) {}

  /// A missing file yields an empty cache. Malformed lines raise ParseError
  /// with the line number.
  static GCache load(const std::filesystem::path& path);

  std::optional<Nat> find(int n, int m, int l) const;
  void insert(int n, int m, int l, const Nat& g);
  bool dirty() const { return dirty_; }
  std::size_t size() const { return entries_.size(); }

  /// Throws std::runtime_error on I/O failure.
  void save();

 private:
  std::filesystem::path path_;
  std::map<std::tuple<int, int, int>, Nat> entries_;
  bool dirty_ = false;
};

}  // namespace cutset
