// cutset: command-line front end for cutset profiles of the Boolean lattice.
//
// Exit status: 0 success, 1 internal assertion failure, 2 usage error,
// 3 precondition / budget / I/O failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutset/binom.hpp"
#include "cutset/canonical.hpp"
#include "cutset/colex.hpp"
#include "cutset/constructions.hpp"
#include "cutset/errors.hpp"
#include "cutset/io.hpp"
#include "cutset/profiles.hpp"
#include "cutset/table_io.hpp"

namespace {

using cutset::Nat;
using json = nlohmann::json;

enum class Format { text, json, csv };

struct RunConfig {
  Format format = Format::text;
  std::string input;
  std::string output;
  std::string cache_path;
  bool no_cache = false;
  std::uint64_t budget = cutset::kDefaultMaterializationBudget;
  unsigned jobs = 1;
  bool validate_all_levels = false;
  bool emit_sets = false;

  int n = -1, m = -1, l = -1, d = -1, pivot = -1;
  std::string K, set, profile, construction;
  int from = -1, to = -1;
  int extra_l = -1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output sink: stdout or the --output file.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<cutset::Subset> read_family(const RunConfig& cfg) {
  if (cfg.input.empty()) return cutset::read_subsets(std::cin);
  std::ifstream in(cfg.input);
  if (!in) throw std::runtime_error("cannot open " + cfg.input);
  return cutset::read_subsets(in);
}

cutset::Profile read_profile(const RunConfig& cfg) {
  auto values = cutset::parse_nat_array(cfg.profile);
  if (values.size() != static_cast<std::size_t>(cfg.n) + 1)
    throw UsageError("--profile must have n+1 = " + std::to_string(cfg.n + 1) + " entries");
  return cutset::make_profile(std::move(values));
}

std::string g_label(int n, int m, int l) {
  return "g_" + std::to_string(n) + "(" + std::to_string(m) + "," + std::to_string(l) + ")";
}

json members_json(const std::vector<cutset::Subset>& members) {
  json arr = json::array();
  for (const auto& s : members) arr.push_back(s.elements);
  return arr;
}

void emit_family(std::ostream& out, Format format, int n, const std::vector<cutset::Subset>& members) {
  if (format == Format::json) {
    std::vector<Nat> counts(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& s : members) counts[s.size()] += 1;
    json profile = json::array();
    for (const auto& c : counts) profile.push_back(cutset::nat_to_json(c));
    out << json{{"n", n}, {"members", members_json(members)}, {"profile", profile}}.dump() << '\n';
  } else {
    cutset::write_subsets(out, members);
  }
}

void emit_bool(std::ostream& out, Format format, const char* key, bool value) {
  if (format == Format::json) out << json{{key, value}}.dump() << '\n';
  else out << (value ? "true" : "false") << '\n';
}

// ---------------------------------------------------------------------------
// g cache

std::filesystem::path cache_location(const RunConfig& cfg) {
  if (cfg.no_cache) return {};
  if (!cfg.cache_path.empty()) return cfg.cache_path;
  if (const char* env = std::getenv("CUTSET_CACHE"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "cutset" / "g.csv";
  return {};
}

class CachedG {
 public:
  explicit CachedG(const RunConfig& cfg) : path_(cache_location(cfg)) {
    if (path_.empty()) return;
    try {
      cache_ = cutset::GCache::load(path_);
    } catch (const std::exception& e) {
      throw CacheError(e.what());
    }
  }

  const cutset::GCache& cache() const { return cache_; }
  bool enabled() const { return !path_.empty(); }

  Nat get(int n, int m, int l) {
    if (enabled()) {
      if (auto hit = cache_.find(n, m, l)) return *hit;
    }
    Nat value = cutset::g(n, m, l);
    remember(n, m, l, value);
    return value;
  }

  void remember(int n, int m, int l, const Nat& value) {
    if (enabled()) cache_.insert(n, m, l, value);
  }

  void flush() {
    if (!enabled()) return;
    try {
      cache_.save();
    } catch (const std::exception& e) {
      throw CacheError(e.what());
    }
  }

 private:
  std::filesystem::path path_;
  cutset::GCache cache_;
};

// ---------------------------------------------------------------------------
// Commands

void cmd_repr(const RunConfig& cfg, std::ostream& out) {
  const Nat K = cutset::parse_nat(cfg.K);
  const auto rep = cutset::cascade(K, cfg.m);
  const auto text = cutset::to_string(rep);
  switch (cfg.format) {
    case Format::json: {
      json terms = json::array();
      for (const auto& t : rep.terms) terms.push_back({t.top, t.bottom});
      out << json{{"K", cutset::nat_to_json(K)}, {"m", cfg.m}, {"cascade", text}, {"terms", terms}}.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "K,m,cascade\n" << K << ',' << cfg.m << ",\"" << text << "\"\n";
      break;
    case Format::text:
      out << cutset::with_separators(K) << " = " << text << '\n';
  }
}

void cmd_boundary(const RunConfig& cfg, std::ostream& out) {
  const Nat K = cutset::parse_nat(cfg.K);
  const Nat value = cutset::boundary(K, cfg.m);
  if (cfg.format == Format::json)
    out << json{{"K", cutset::nat_to_json(K)}, {"m", cfg.m}, {"boundary", cutset::nat_to_json(value)}}.dump() << '\n';
  else
    out << value << '\n';
}

void cmd_rank(const RunConfig& cfg, std::ostream& out) {
  const auto s = cutset::parse_subset(cfg.set);
  const Nat r = cutset::rank(s);
  if (cfg.format == Format::json)
    out << json{{"set", s.elements}, {"rank", cutset::nat_to_json(r)}}.dump() << '\n';
  else
    out << r << '\n';
}

void cmd_unrank(const RunConfig& cfg, std::ostream& out) {
  const auto s = cutset::unrank(cutset::parse_nat(cfg.K), cfg.m, cfg.n);
  if (cfg.format == Format::json) out << json{{"set", s.elements}}.dump() << '\n';
  else out << cutset::format_subset(s) << '\n';
}

cutset::Family family_from_input(const RunConfig& cfg, int n_hint) {
  auto members = read_family(cfg);
  if (members.empty()) throw UsageError("empty family on input");
  int n = n_hint;
  if (n < 0) {
    n = 0;
    for (const auto& s : members)
      if (!s.elements.empty()) n = std::max(n, s.elements.back());
  }
  const int level = static_cast<int>(members.front().size());
  return cutset::make_family(n, level, std::move(members));
}

void cmd_shadow(const RunConfig& cfg, std::ostream& out, bool up) {
  const auto fam = family_from_input(cfg, cfg.n);
  const auto result = up ? cutset::shade(fam) : cutset::shadow(fam);
  emit_family(out, cfg.format, result.n, result.members);
}

void cmd_feasible(const RunConfig& cfg, std::ostream& out) {
  const auto p = read_profile(cfg);
  const auto verdict = cutset::is_cutset_profile(
      p, cfg.validate_all_levels ? cutset::CheckMode::all_levels : cutset::CheckMode::single_level);
  if (cfg.format == Format::json) {
    json slack = json::array();
    for (const auto& [level, s] : verdict.slack) slack.push_back({{"level", level}, {"slack", cutset::nat_to_json(s)}});
    out << json{{"n", p.n},
                {"profile", json::parse(cutset::format_nat_array(p.f))},
                {"feasible", verdict.feasible},
                {"check_level", verdict.check_level},
                {"slack", slack}}
               .dump()
        << '\n';
  } else {
    out << (verdict.feasible ? "true" : "false") << '\n';
  }
}

void cmd_canonical(const RunConfig& cfg, std::ostream& out) {
  const auto p = read_profile(cfg);
  const auto c = cutset::canonical(p, cfg.pivot);
  std::vector<cutset::Family> sets;
  if (cfg.emit_sets) sets = cutset::emit_sets(c, cfg.budget);

  if (cfg.format == Format::json) {
    json segments = json::array(), u = json::array(), v = json::array();
    for (int i = 0; i <= p.n; ++i) {
      const auto& s = c.segment(i);
      segments.push_back({{"level", i},
                          {"kind", i <= c.pivot ? "up" : "down"},
                          {"start", cutset::nat_to_json(s.start)},
                          {"end", cutset::nat_to_json(s.end)}});
      u.push_back(cutset::nat_to_json(c.uv.u[i]));
      v.push_back(cutset::nat_to_json(c.uv.v[i]));
    }
    json doc{{"n", p.n}, {"pivot", c.pivot}, {"u", u}, {"v", v}, {"segments", segments}};
    if (cfg.emit_sets) {
      std::vector<cutset::Subset> all;
      for (const auto& fam : sets) all.insert(all.end(), fam.members.begin(), fam.members.end());
      doc["sets"] = members_json(all);
    }
    out << doc.dump() << '\n';
    return;
  }
  if (cfg.emit_sets) {
    for (const auto& fam : sets) cutset::write_subsets(out, fam.members);
    return;
  }
  if (cfg.format == Format::csv) {
    out << "level,kind,start,end,u,v\n";
    for (int i = 0; i <= p.n; ++i) {
      const auto& s = c.segment(i);
      out << i << ',' << (i <= c.pivot ? "up" : "down") << ',' << s.start << ',' << s.end << ',' << c.uv.u[i] << ','
          << c.uv.v[i] << '\n';
    }
    return;
  }
  out << "u = " << cutset::format_nat_array(c.uv.u) << '\n' << "v = " << cutset::format_nat_array(c.uv.v) << '\n';
  for (int i = 0; i <= p.n; ++i) {
    const auto& s = c.segment(i);
    out << "level " << i << (i <= c.pivot ? " up  " : " down") << "  ";
    if (s.empty()) out << "(empty)\n";
    else out << "ranks " << s.start << ".." << s.end << "  (" << s.size() << ")\n";
  }
}

void cmd_g(const RunConfig& cfg, std::ostream& out) {
  CachedG cached(cfg);
  const Nat value = cached.get(cfg.n, cfg.m, cfg.l);
  const auto row = cutset::make_row(cfg.m, cfg.l, value);
  const std::string rendered = row.cascade ? cutset::to_string(*row.cascade) : "";
  switch (cfg.format) {
    case Format::json:
      out << json{{"n", cfg.n}, {"m", cfg.m}, {"l", cfg.l}, {"g", cutset::nat_to_json(value)}, {"cascade", rendered}}.dump()
          << '\n';
      break;
    case Format::csv:
      out << "n,m,l,g,cascade\n" << cfg.n << ',' << cfg.m << ',' << cfg.l << ',' << value << ",\"" << rendered << "\"\n";
      break;
    case Format::text:
      out << g_label(cfg.n, cfg.m, cfg.l) << " = " << cutset::with_separators(value);
      if (!rendered.empty()) out << " = " << rendered;
      out << '\n';
  }
  cached.flush();
}

void cmd_table(const RunConfig& cfg, std::ostream& out) {
  const int from = cfg.from >= 0 ? cfg.from : cfg.m;
  const int to = cfg.to >= 0 ? cfg.to : std::max(cfg.n - cfg.m, from);
  CachedG cached(cfg);
  const auto& cache = cached.cache();
  cutset::KnownG known;
  if (cached.enabled()) known = [&](int l) { return cache.find(cfg.n, cfg.m, l); };
  const auto table = cutset::g_table(cfg.n, cfg.m, from, to, cfg.jobs, known);
  for (const auto& row : table.rows) cached.remember(cfg.n, cfg.m, row.l, row.g);

  switch (cfg.format) {
    case Format::csv:
      cutset::write_table_csv(out, table);
      break;
    case Format::json:
      out << cutset::table_to_json(table).dump() << '\n';
      break;
    case Format::text: {
      std::size_t width = 1;
      for (const auto& row : table.rows) width = std::max(width, cutset::with_separators(row.g).size());
      out << std::setw(5) << "l" << "  " << std::setw(static_cast<int>(width)) << "g" << "  " << cfg.m
          << "-binomial representation\n";
      for (const auto& row : table.rows) {
        out << std::setw(5) << row.l << "  " << std::setw(static_cast<int>(width)) << cutset::with_separators(row.g)
            << "  " << (row.cascade ? cutset::to_string(*row.cascade) : "") << '\n';
      }
    }
  }
  cached.flush();
}

void cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const auto b = cutset::theorem2_bounds(cfg.n, cfg.m, cfg.l);
  if (cfg.format == Format::json) {
    out << json{{"n", cfg.n},
                {"m", cfg.m},
                {"l", cfg.l},
                {"lower_exclusive", cutset::nat_to_json(b.lower_exclusive)},
                {"upper_inclusive", cutset::nat_to_json(b.upper_inclusive)}}
               .dump()
        << '\n';
  } else if (cfg.format == Format::csv) {
    out << "n,m,l,lower_exclusive,upper_inclusive\n"
        << cfg.n << ',' << cfg.m << ',' << cfg.l << ',' << b.lower_exclusive << ',' << b.upper_inclusive << '\n';
  } else {
    out << cutset::with_separators(b.lower_exclusive) << " < " << g_label(cfg.n, cfg.m, cfg.l)
        << " <= " << cutset::with_separators(b.upper_inclusive) << '\n';
  }
}

void cmd_construct(const RunConfig& cfg, std::ostream& out) {
  cutset::MultiFamily result;
  if (cfg.construction == "two-level") {
    result = cutset::two_level(cfg.n, cfg.m);
  } else if (cfg.construction == "qrs") {
    result = cutset::qrs(cfg.n, cfg.m).united();
  } else {
    // Base collection over [n-1]: two-level (band m..m+1, default) or Q/R/S (band m..m+2).
    const int top = cfg.extra_l >= 0 ? cfg.extra_l : cfg.m + 1;
    cutset::MultiFamily base;
    if (top == cfg.m + 1) base = cutset::two_level(cfg.n - 1, cfg.m);
    else if (top == cfg.m + 2) base = cutset::qrs(cfg.n - 1, cfg.m).united();
    else throw cutset::PreconditionError("construct double: l must be m+1 or m+2");
    auto doubled = cutset::double_by_complements(base, cfg.n);
    if (!doubled.precondition_verified)
      std::cerr << "warning: base collection was not verified as a cutset (n too large)\n";
    result = std::move(doubled.family);
  }
  emit_family(out, cfg.format, result.n, result.members);
}

void cmd_verify(const RunConfig& cfg, std::ostream& out) {
  auto members = read_family(cfg);
  emit_bool(out, cfg.format, "cutset", cutset::is_cutset(cutset::make_multifamily(cfg.n, std::move(members))));
}

void cmd_conjecture(const RunConfig& cfg, std::ostream& out) {
  const auto value = cutset::conjecture_value(cfg.n, cfg.m, cfg.l);
  if (cfg.format == Format::json) {
    out << json{{"n", cfg.n},
                {"m", cfg.m},
                {"l", cfg.l},
                {"conjectured", value ? cutset::nat_to_json(*value) : json(nullptr)}}
               .dump()
        << '\n';
  } else if (value) {
    out << "conjectured " << g_label(cfg.n, cfg.m, cfg.l) << " = " << cutset::with_separators(*value) << '\n';
  } else {
    out << "no conjectured value for " << g_label(cfg.n, cfg.m, cfg.l) << '\n';
  }
}

void cmd_identity(const RunConfig& cfg, std::ostream& out) {
  emit_bool(out, cfg.format, "holds", cutset::vertical_identity_check(cfg.n, cfg.m, cfg.d));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cutset profiles in the Boolean lattice 2^[n]"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("-i,--input", cfg.input, "Read families from this file instead of stdin");
  app.add_option("-o,--output", cfg.output, "Write the report to this file instead of stdout");
  app.add_option("--budget", cfg.budget, "Largest level size that may be materialized")->capture_default_str();
  app.add_option("--cache", cfg.cache_path, "g cache file (default: $CUTSET_CACHE or ~/.cache/cutset/g.csv)");
  app.add_flag("--no-cache", cfg.no_cache, "Do not read or write the g cache");

  auto positive = CLI::NonNegativeNumber;

  auto* repr = app.add_subcommand("repr", "m-binomial representation of K");
  repr->add_option("K", cfg.K)->required();
  repr->add_option("m", cfg.m)->required();

  auto* boundary = app.add_subcommand("boundary", "boundary operator applied to K");
  boundary->add_option("K", cfg.K)->required();
  boundary->add_option("m", cfg.m)->required();

  auto* rank = app.add_subcommand("rank", "squashed-order rank of a subset given as [a,b,...]");
  rank->add_option("SET", cfg.set)->required();

  auto* unrank = app.add_subcommand("unrank", "subset at rank K on level m of 2^[n]");
  unrank->add_option("K", cfg.K)->required();
  unrank->add_option("m", cfg.m)->required()->check(positive);
  unrank->add_option("n", cfg.n)->required()->check(positive);

  auto* shadow = app.add_subcommand("shadow", "shadow of a family read from input");
  shadow->add_option("--n", cfg.n, "ground set size (default: largest element)")->check(positive);

  auto* shade = app.add_subcommand("shade", "shade of a family read from input");
  shade->add_option("--n", cfg.n)->required()->check(positive);

  auto* feasible = app.add_subcommand("feasible", "is the profile the f-vector of a cutset?");
  feasible->add_option("--n", cfg.n)->required()->check(positive);
  feasible->add_option("--profile", cfg.profile, "JSON array f_0..f_n")->required();
  feasible->add_flag("--validate-all-levels", cfg.validate_all_levels);

  auto* canonical = app.add_subcommand("canonical", "canonical collection for a profile and pivot");
  canonical->add_option("--n", cfg.n)->required()->check(positive);
  canonical->add_option("--profile", cfg.profile)->required();
  canonical->add_option("--pivot", cfg.pivot)->required()->check(positive);
  canonical->add_flag("--emit-sets", cfg.emit_sets, "materialize the collection");

  auto* g = app.add_subcommand("g", "g_n(m,l)");
  g->add_option("n", cfg.n)->required()->check(positive);
  g->add_option("m", cfg.m)->required()->check(positive);
  g->add_option("l", cfg.l)->required()->check(positive);

  auto* table = app.add_subcommand("table", "g_n(m,l) for a range of l");
  table->add_option("n", cfg.n)->required()->check(positive);
  table->add_option("m", cfg.m)->required()->check(positive);
  table->add_option("--from", cfg.from)->check(positive);
  table->add_option("--to", cfg.to)->check(positive);
  table->add_option("--jobs", cfg.jobs, "worker threads across l")->check(CLI::Range(1u, 256u));

  auto* bounds = app.add_subcommand("bounds", "asymptotic bounds on g_n(m,l)");
  bounds->add_option("n", cfg.n)->required()->check(positive);
  bounds->add_option("m", cfg.m)->required()->check(positive);
  bounds->add_option("l", cfg.l)->required()->check(positive);

  auto* construct = app.add_subcommand("construct", "explicit cutsets");
  construct->add_option("kind", cfg.construction)->required()->check(CLI::IsMember({"two-level", "qrs", "double"}));
  construct->add_option("n", cfg.n)->required()->check(positive);
  construct->add_option("m", cfg.m)->required()->check(positive);
  construct->add_option("l", cfg.extra_l, "top level of the base band for 'double' (m+1 or m+2)")->check(positive);

  auto* verify = app.add_subcommand("verify", "chain check of a collection read from input");
  verify->add_option("--n", cfg.n)->required()->check(positive);

  auto* conjecture = app.add_subcommand("conjecture", "conjectured closed form of g_n(m,l)");
  conjecture->add_option("n", cfg.n)->required()->check(positive);
  conjecture->add_option("m", cfg.m)->required()->check(positive);
  conjecture->add_option("l", cfg.l)->required()->check(positive);

  auto* identity = app.add_subcommand("identity", "binomial column identity");
  identity->add_option("n", cfg.n)->required()->check(positive);
  identity->add_option("m", cfg.m)->required()->check(positive);
  identity->add_option("d", cfg.d)->required()->check(positive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Sink sink(cfg.output);
    std::ostream& out = sink.out();
    auto* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "repr") cmd_repr(cfg, out);
    else if (name == "boundary") cmd_boundary(cfg, out);
    else if (name == "rank") cmd_rank(cfg, out);
    else if (name == "unrank") cmd_unrank(cfg, out);
    else if (name == "shadow") cmd_shadow(cfg, out, false);
    else if (name == "shade") cmd_shadow(cfg, out, true);
    else if (name == "feasible") cmd_feasible(cfg, out);
    else if (name == "canonical") cmd_canonical(cfg, out);
    else if (name == "g") cmd_g(cfg, out);
    else if (name == "table") cmd_table(cfg, out);
    else if (name == "bounds") cmd_bounds(cfg, out);
    else if (name == "construct") cmd_construct(cfg, out);
    else if (name == "verify") cmd_verify(cfg, out);
    else if (name == "conjecture") cmd_conjecture(cfg, out);
    else if (name == "identity") cmd_identity(cfg, out);
    out.flush();
    if (!out) throw std::runtime_error("failed to write output");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const CacheError& e) {
    std::cerr << "cache error: " << e.what() << '\n';
    return 3;
  } catch (const cutset::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const cutset::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return 3;
  } catch (const cutset::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
