#include "permlab/cli.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permlab/chi.hpp"
#include "permlab/maps.hpp"
#include "permlab/statistics.hpp"

namespace permlab {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxFailuresShown = 20;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::map<std::string, std::function<Permutation(const Permutation&)>, std::less<>>& map_table() {
  static const std::map<std::string, std::function<Permutation(const Permutation&)>, std::less<>> table = {
      {"runsort", runsort},
      {"reverse", reverse},
      {"sortruns", sort_descending_runs_by_bottom},
      {"chi1", [](const Permutation& p) { return chi(p, ChiVariant::first); }},
      {"chi2", [](const Permutation& p) { return chi(p, ChiVariant::second); }},
      {"chi1-inv", [](const Permutation& p) { return chi_inverse(p, ChiVariant::first); }},
      {"chi2-inv", [](const Permutation& p) { return chi_inverse(p, ChiVariant::second); }},
      {"fundamental", fundamental},
      {"fundamental-inv", fundamental_inverse},
  };
  return table;
}

std::vector<ChiVariant> parse_variants(const std::string& text) {
  if (text == "1") return {ChiVariant::first};
  if (text == "2") return {ChiVariant::second};
  if (text == "both") return {ChiVariant::first, ChiVariant::second};
  throw UsageError("--variant must be 1, 2 or both, got '" + text + "'");
}

std::vector<Check> parse_checks(const std::vector<std::string>& names) {
  std::vector<Check> checks;
  for (const auto& name : names) {
    if (name == "all") return all_checks();
    auto check = parse_check(name);
    if (!check) throw UsageError("unknown check '" + name + "'");
    if (std::find(checks.begin(), checks.end(), *check) == checks.end()) checks.push_back(*check);
  }
  return checks;
}

Statistic require_statistic(const std::string& name) {
  auto statistic = parse_statistic(name);
  if (!statistic) throw UsageError("unknown statistic '" + name + "'");
  return *statistic;
}

json report_to_json(const VerificationReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"permutation", f.permutation}, {"check", f.check}, {"detail", f.detail}});
  }
  json out = {{"n", report.n},
              {"variant", static_cast<int>(report.variant)},
              {"checks", report.checks},
              {"examined", report.examined},
              {"status", report.passed() ? "pass" : "fail"},
              {"failures", failures},
              {"elapsed_seconds", report.elapsed_seconds}};
  if (report.seed) out["seed"] = *report.seed;
  return out;
}

void print_report(const VerificationReport& report, std::ostream& out) {
  std::string checks;
  for (const auto& c : report.checks) checks += (checks.empty() ? "" : ",") + c;
  out << "verify n=" << report.n << " variant=" << static_cast<int>(report.variant) << " checks=" << checks
      << " examined=" << report.examined << " failures=" << report.failures.size() << " "
      << (report.passed() ? "PASS" : "FAIL") << " (" << report.elapsed_seconds << " s)\n";
  for (std::size_t i = 0; i < report.failures.size() && i < kMaxFailuresShown; ++i) {
    const auto& f = report.failures[i];
    out << "  [" << f.check << "] " << f.permutation << ": " << f.detail << "\n";
  }
  if (report.failures.size() > kMaxFailuresShown) {
    out << "  ... " << report.failures.size() - kMaxFailuresShown << " more\n";
  }
}

void print_chi_trace(const ChiTrace& trace, std::ostream& out) {
  for (const auto& step : trace.steps) {
    out << "  t=" << step.top << " ";
    if (step.rule == StepRule::first) {
      out << "first";
    } else {
      out << "after bottom " << step.predecessor_bottom;
    }
    out << " -> sigma(" << step.top << ")=" << step.assigned << "\n";
  }
}

}  // namespace

int exhaustive_cap_from_env() {
  const char* raw = std::getenv("PERMLAB_MAX_N");
  if (raw == nullptr || *raw == '\0') return kDefaultExhaustiveCap;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(raw, &used);
    if (used != std::string_view(raw).size() || cap < 0) throw std::invalid_argument(raw);
    return cap;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("PERMLAB_MAX_N must be a non-negative integer, got '") + raw + "'");
  }
}

std::string permutation_to_json(const Permutation& pi) { return json(pi.word()).dump(); }

Permutation permutation_from_json(std::string_view text) {
  const auto parsed = json::parse(text);
  if (!parsed.is_array()) throw PermutationError("permutation JSON must be an array of integers");
  std::vector<int> word;
  for (const auto& v : parsed) {
    if (!v.is_number_integer()) throw PermutationError("permutation JSON must be an array of integers");
    word.push_back(v.get<int>());
  }
  return Permutation(std::move(word));
}

std::string polynomial_to_json(const QPolynomial& poly) {
  json out = json::array();
  for (auto [e, c] : poly.coefficients()) out.push_back(json::array({e, c}));
  return out.dump();
}

QPolynomial polynomial_from_json(std::string_view text) {
  const auto parsed = json::parse(text);
  if (!parsed.is_array()) throw std::invalid_argument("polynomial JSON must be an array of pairs");
  QPolynomial poly;
  for (const auto& term : parsed) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_number_unsigned()) {
      throw std::invalid_argument("polynomial term must be [exponent, count]");
    }
    poly.add(term[0].get<int>(), term[1].get<std::uint64_t>());
  }
  return poly;
}

std::string polynomial_to_csv(int n, Statistic statistic, const QPolynomial& poly) {
  std::ostringstream out;
  out << "n,statistic,exponent,count\n";
  for (auto [e, c] : poly.coefficients()) out << n << "," << statistic_name(statistic) << "," << e << "," << c << "\n";
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"permlab: permutation statistics and the run-top/weak-deficiency bijections"};
  app.require_subcommand(1);

  std::string perm_text;
  std::string format = "human";
  std::optional<int> max_n;

  auto* stats = app.add_subcommand("stats", "Evaluate statistics on one permutation");
  std::vector<std::string> stat_names;
  stats->add_option("--perm", perm_text, "Permutation, e.g. 5,2,9,6,8,7,3,1,4")->required();
  stats->add_option("--stat", stat_names, "Statistic name (repeatable); default all");
  stats->add_option("--format", format)->check(CLI::IsMember({"human", "json", "csv"}));

  auto* map = app.add_subcommand("map", "Apply a map to one permutation");
  std::string map_name;
  bool trace = false;
  std::vector<std::string> map_names;
  for (const auto& [name, fn] : map_table()) map_names.push_back(name);
  map->add_option("--map", map_name, "Map name")->required()->check(CLI::IsMember(map_names));
  map->add_option("--perm", perm_text, "Permutation")->required();
  map->add_flag("--trace", trace, "Print the construction steps of chi1/chi2");
  map->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

  auto* verify = app.add_subcommand("verify", "Run exhaustive checks over S_n");
  int n = 0;
  std::string variant_text = "both";
  std::vector<std::string> check_names{"all"};
  int jobs = 1;
  std::optional<int> sample;
  std::uint64_t seed = 0;
  verify->add_option("--n", n, "Size")->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--variant", variant_text, "1, 2 or both");
  verify->add_option("--checks", check_names, "Comma-separated checks or 'all'")->delimiter(',');
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--sample", sample, "Sample this many completions per permutation")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for completion sampling");
  verify->add_option("--max-n", max_n, "Override the exhaustive cap");
  verify->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

  auto* dist = app.add_subcommand("dist", "Distribution of a statistic over S_n");
  std::string dist_stat;
  dist->add_option("--stat", dist_stat, "Statistic name")->required();
  dist->add_option("--n", n, "Size")->required()->check(CLI::NonNegativeNumber);
  dist->add_option("--max-n", max_n, "Override the exhaustive cap");
  dist->add_option("--format", format)->check(CLI::IsMember({"human", "json", "csv", "findstat"}));

  auto* rank_cmd = app.add_subcommand("rank", "Lexicographic rank of a permutation");
  rank_cmd->add_option("--perm", perm_text, "Permutation")->required();

  auto* unrank_cmd = app.add_subcommand("unrank", "Permutation of a given lexicographic rank");
  std::uint64_t rank_value = 0;
  unrank_cmd->add_option("--n", n, "Size")->required()->check(CLI::NonNegativeNumber);
  unrank_cmd->add_option("--rank", rank_value, "Rank in [0, n!)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    const int cap = max_n.value_or(exhaustive_cap_from_env());

    if (stats->parsed()) {
      const auto pi = parse_permutation(perm_text);
      std::vector<Statistic> selected;
      for (const auto& name : stat_names) selected.push_back(require_statistic(name));
      if (selected.empty()) selected = all_statistics();
      if (format == "json") {
        json values = json::object();
        for (auto s : selected) values[std::string(statistic_name(s))] = evaluate(s, pi);
        out << json{{"permutation", pi.word()}, {"statistics", values}}.dump() << "\n";
      } else if (format == "csv") {
        out << "statistic,value\n";
        for (auto s : selected) out << statistic_name(s) << "," << evaluate(s, pi) << "\n";
      } else {
        for (auto s : selected) out << statistic_name(s) << ": " << evaluate(s, pi) << "\n";
      }
    } else if (map->parsed()) {
      const auto pi = parse_permutation(perm_text);
      const auto result = map_table().find(map_name)->second(pi);
      out << (format == "json" ? permutation_to_json(result) : to_string(result)) << "\n";
      if (trace && (map_name == "chi1" || map_name == "chi2")) {
        print_chi_trace(chi_with_trace(pi, map_name == "chi1" ? ChiVariant::first : ChiVariant::second).trace, out);
      }
    } else if (verify->parsed()) {
      SuiteConfig config;
      config.n = n;
      config.checks = parse_checks(check_names);
      config.jobs = jobs;
      config.cap = cap;
      if (sample) config.completion_mode = CompletionMode{sample, seed};
      bool passed = true;
      json reports = json::array();
      for (auto variant : parse_variants(variant_text)) {
        config.variant = variant;
        const auto report = verify_suite(config);
        passed = passed && report.passed();
        if (format == "json") {
          reports.push_back(report_to_json(report));
        } else {
          print_report(report, out);
        }
      }
      if (format == "json") out << reports.dump() << "\n";
      out.flush();
      return passed ? kExitSuccess : kExitVerificationFailure;
    } else if (dist->parsed()) {
      const auto statistic = require_statistic(dist_stat);
      if (format == "findstat") {
        for (int v : statistic_values(statistic, n, cap)) out << v << "\n";
      } else {
        const auto poly = distribution(statistic, n, cap);
        if (format == "json") {
          out << json{{"n", n}, {"statistic", statistic_name(statistic)}, {"distribution", json::parse(polynomial_to_json(poly))}}
                     .dump()
              << "\n";
        } else if (format == "csv") {
          out << polynomial_to_csv(n, statistic, poly);
        } else {
          for (auto [e, c] : poly.coefficients()) out << "q^" << e << ": " << c << "\n";
        }
      }
    } else if (rank_cmd->parsed()) {
      out << rank(parse_permutation(perm_text)) << "\n";
    } else if (unrank_cmd->parsed()) {
      out << to_string(unrank(n, rank_value)) << "\n";
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  out.flush();
  return kExitSuccess;
}

}  // namespace permlab
