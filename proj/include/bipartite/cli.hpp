#pragma once

// Command-line front end: count, bounds, table, verify, dump-classes.
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <bipartite/bounds.hpp>
#include <bipartite/core.hpp>
#include <bipartite/formulas.hpp>
#include <bipartite/oracle.hpp>
#include <bipartite/verify.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace bipartite::cli {

using json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;

enum class MethodFlag { Auto, Formula, Burnside, Brute };

inline MethodFlag parse_method(const std::string& s) {
  if (s == "auto") return MethodFlag::Auto;
  if (s == "formula") return MethodFlag::Formula;
  if (s == "burnside") return MethodFlag::Burnside;
  if (s == "brute") return MethodFlag::Brute;
  throw DomainError("unknown method '" + s + "' (expected auto|formula|burnside|brute)");
}

struct InclusiveRange {
  int first;
  int last;
};

/// "a" or "a..b".
inline InclusiveRange parse_range(const std::string& s) {
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || part.empty() || v < 0)
      throw DomainError("bad range '" + s + "' (expected a or a..b with a, b >= 0)");
    return v;
  };
  const auto dots = s.find("..");
  InclusiveRange range{};
  if (dots == std::string::npos) {
    range.first = range.last = to_int(s);
  } else {
    range.first = to_int(s.substr(0, dots));
    range.last = to_int(s.substr(dots + 2));
  }
  if (range.first > range.last) throw DomainError("empty range '" + s + "'");
  return range;
}

struct TableSpec {
  Family family = Family::U;
  InclusiveRange n_range{0, 0};
  InclusiveRange r_range{0, 0};
  std::string format = "csv";
  MethodFlag method = MethodFlag::Auto;
};

/// Result of one cell: a count and the route that produced it, or an error.
struct CellOutcome {
  std::optional<CountResult> result;
  std::string error;
};

inline CellOutcome evaluate(Family f, int n, int r, MethodFlag method, const OracleLimits& limits) {
  try {
    switch (method) {
      case MethodFlag::Auto: return {count(f, n, r), {}};
      case MethodFlag::Formula: {
        auto c = closed_form_count(f, n, r);
        if (!c) throw DomainError("no closed form covers " + format_cell(f, n, r));
        return {CountResult{*c, Method::ClosedForm}, {}};
      }
      case MethodFlag::Burnside:
        return {CountResult{count_via_burnside(f, n, r), Method::Burnside}, {}};
      case MethodFlag::Brute:
        return {CountResult{enumerate_counts(n, r, f, limits), Method::BruteForce}, {}};
    }
  } catch (const error& e) {
    return {std::nullopt, e.what()};
  }
  return {std::nullopt, "unknown method"};
}

inline std::string method_label(MethodFlag m) {
  switch (m) {
    case MethodFlag::Auto: return "auto";
    case MethodFlag::Formula: return std::string(to_string(Method::ClosedForm));
    case MethodFlag::Burnside: return std::string(to_string(Method::Burnside));
    case MethodFlag::Brute: return std::string(to_string(Method::BruteForce));
  }
  return "?";
}

inline json count_record(Family f, int n, int r, const CountResult& res) {
  json j;
  j["family"] = to_string(f);
  j["n"] = n;
  j["r"] = r;
  j["count"] = res.count.str();
  j["method"] = to_string(res.method);
  return j;
}

inline json optional_rational(const std::optional<ExactRational>& v) {
  return v ? json(to_string(*v)) : json(nullptr);
}

inline json bound_record(const BoundReport& report) {
  json j;
  j["family"] = to_string(report.family);
  j["n"] = report.n;
  j["r"] = report.r;
  j["exact"] = report.exact ? json(report.exact->str()) : json(nullptr);
  json entries = json::array();
  for (const BoundEntry& b : report.bounds) {
    json e;
    e["id"] = b.id;
    e["lower"] = optional_rational(b.lower);
    e["upper"] = optional_rational(b.upper);
    entries.push_back(std::move(e));
  }
  j["bounds"] = std::move(entries);
  return j;
}

inline json representative_record(const ClassRepresentative& rep) {
  json j;
  j["family"] = to_string(rep.family);
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["supportRows"] = rep.support_rows ? json(*rep.support_rows) : json(nullptr);
  j["supportCols"] = rep.support_cols ? json(*rep.support_cols) : json(nullptr);
  j["bits"] = rep.bits;
  return j;
}

/// Writes the table; returns the exit code (0 if any cell succeeded).
inline int write_table(const TableSpec& spec, const OracleLimits& limits, std::ostream& out) {
  if (spec.format != "csv" && spec.format != "json")
    throw DomainError("unknown format '" + spec.format + "' (expected csv|json)");
  bool any_ok = false;
  json rows = json::array();
  if (spec.format == "csv") out << "family,n,r,count,method\n";
  for (int n = spec.n_range.first; n <= spec.n_range.last; ++n)
    for (int r = spec.r_range.first; r <= spec.r_range.last; ++r) {
      const CellOutcome cell = evaluate(spec.family, n, r, spec.method, limits);
      any_ok = any_ok || cell.result.has_value();
      std::string count_text;
      std::string method_text;
      if (cell.result) {
        count_text = cell.result->count.str();
        method_text = std::string(to_string(cell.result->method));
      } else {
        std::string reason = cell.error;
        for (char& c : reason)
          if (c == ',' || c == '\n' || c == '"') c = ';';
        count_text = "ERROR:" + reason;
        method_text = method_label(spec.method);
      }
      if (spec.format == "csv") {
        out << to_string(spec.family) << ',' << n << ',' << r << ',' << count_text << ','
            << method_text << '\n';
      } else {
        json j;
        j["family"] = to_string(spec.family);
        j["n"] = n;
        j["r"] = r;
        j["count"] = count_text;
        j["method"] = method_text;
        rows.push_back(std::move(j));
      }
    }
  if (spec.format == "json") out << rows.dump() << '\n';
  return any_ok ? exit_ok : exit_usage;
}

/// Parses "family,n,r" for --perturb.
inline Cell parse_cell(const std::string& s) {
  std::stringstream ss(s);
  std::string fam, n, r;
  if (!std::getline(ss, fam, ',') || !std::getline(ss, n, ',') || !std::getline(ss, r))
    throw DomainError("expected family,n,r but got '" + s + "'");
  return {parse_family(fam), parse_range(n).first, parse_range(r).first};
}

/// Reads key=value lines; blank lines and '#' comments are skipped.
inline std::vector<std::string> config_arguments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DomainError("config line without '=': " + line);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    args.push_back("--" + key + "=" + value);
  }
  return args;
}

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  // Splice --config contents in right after the subcommand name so that flags
  // given on the command line take precedence.
  try {
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::string path;
      std::size_t width = 0;
      if (args[i] == "--config" && i + 1 < args.size()) {
        path = args[i + 1];
        width = 2;
      } else if (args[i].rfind("--config=", 0) == 0) {
        path = args[i].substr(9);
        width = 1;
      } else {
        continue;
      }
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i + width));
      const auto extra = config_arguments(path);
      const std::size_t at = args.empty() ? 0 : 1;
      args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), extra.begin(), extra.end());
      break;
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  CLI::App app{"Exact counts of unlabeled and set-labeled bipartite graphs", "bipcount"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config_path_unused;
  app.add_option("--config", config_path_unused, "key=value file mirroring the flags");

  std::string family_text = "u";
  int n = 0;
  int r = 0;
  std::string method_text = "auto";
  int max_bits = 16;
  int max_side = 6;
  unsigned workers = 0;

  auto add_common = [&](CLI::App* sub, bool with_method) {
    sub->add_option("--family", family_text, "u|x|y|xy")->required();
    if (with_method) sub->add_option("--method", method_text, "auto|formula|burnside|brute");
    sub->add_option("--max-bits", max_bits, "brute force: largest n*r");
    sub->add_option("--max-side", max_side, "brute force: largest permuted side");
    sub->add_option("--workers", workers, "brute force threads (0 = all cores)");
  };

  CLI::App* count_cmd = app.add_subcommand("count", "Count one (family, n, r) cell");
  add_common(count_cmd, true);
  count_cmd->add_option("--n", n, "left vertices")->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--r", r, "right vertices")->required()->check(CLI::NonNegativeNumber);

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "Report bounds and the exact count");
  bounds_cmd->add_option("--family", family_text, "u|x|xy")->required();
  bounds_cmd->add_option("--n", n, "left vertices")->required();
  bounds_cmd->add_option("--r", r, "right vertices")->required();

  std::string n_range_text;
  std::string r_range_text;
  std::string format = "csv";
  std::string output_path;
  CLI::App* table_cmd = app.add_subcommand("table", "Tabulate counts over a grid");
  add_common(table_cmd, true);
  table_cmd->add_option("--n", n_range_text, "n or a..b")->required();
  table_cmd->add_option("--r", r_range_text, "r or a..b")->required();
  table_cmd->add_option("--format", format, "csv|json");
  table_cmd->add_option("--output", output_path, "write to file instead of stdout");

  VerifyOptions vopts;
  std::string perturb_text;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the full cross-check sweep");
  verify_cmd->add_option("--max-bits", vopts.max_bits, "oracle grid: largest n*r");
  verify_cmd->add_option("--max-side", vopts.max_side, "oracle grid: largest min(n, r)");
  verify_cmd->add_option("--workers", vopts.workers, "oracle threads (0 = all cores)");
  verify_cmd->add_option("--cases", vopts.property_cases, "randomized canonical-form cases");
  verify_cmd->add_option("--seed", vopts.seed, "seed for randomized cases");
  verify_cmd->add_option("--perturb", perturb_text,
                         "family,n,r: add one to that recurrence count (harness self-test)");

  CLI::App* dump_cmd = app.add_subcommand("dump-classes", "One representative per class, as JSON lines");
  add_common(dump_cmd, false);
  dump_cmd->add_option("--n", n, "left vertices")->required()->check(CLI::NonNegativeNumber);
  dump_cmd->add_option("--r", r, "right vertices")->required()->check(CLI::NonNegativeNumber);
  dump_cmd->add_option("--output", output_path, "write to file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    const OracleLimits limits{max_bits, max_side, workers};
    if (count_cmd->parsed()) {
      const Family f = parse_family(family_text);
      const MethodFlag m = parse_method(method_text);
      const CellOutcome cell = evaluate(f, n, r, m, limits);
      if (!cell.result) {
        err << "error: " << cell.error << '\n';
        return exit_usage;
      }
      out << count_record(f, n, r, *cell.result).dump() << '\n';
      return exit_ok;
    }
    if (bounds_cmd->parsed()) {
      const Family f = parse_family(family_text);
      out << bound_record(bound_report(f, n, r)).dump() << '\n';
      return exit_ok;
    }
    if (table_cmd->parsed()) {
      TableSpec spec{parse_family(family_text), parse_range(n_range_text),
                     parse_range(r_range_text), format, parse_method(method_text)};
      if (output_path.empty()) return write_table(spec, limits, out);
      std::ofstream file(output_path);
      if (!file) throw DomainError("cannot write '" + output_path + "'");
      return write_table(spec, limits, file);
    }
    if (verify_cmd->parsed()) {
      if (!perturb_text.empty()) vopts.perturb = parse_cell(perturb_text);
      return run_verification(vopts, out) ? exit_ok : exit_verify_failed;
    }
    if (dump_cmd->parsed()) {
      const Family f = parse_family(family_text);
      const auto reps = class_representatives(n, r, f, limits);
      std::ofstream file;
      std::ostream* sink = &out;
      if (!output_path.empty()) {
        file.open(output_path);
        if (!file) throw DomainError("cannot write '" + output_path + "'");
        sink = &file;
      }
      for (const auto& rep : reps) *sink << representative_record(rep).dump() << '\n';
      return exit_ok;
    }
  } catch (const FormulaMismatch& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_verify_failed;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace bipartite::cli
