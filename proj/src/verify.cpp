#include "permlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "permlab/maps.hpp"
#include "permlab/statistics.hpp"

namespace permlab {

std::uint64_t factorial(int n) {
  if (n < 0) throw std::out_of_range("factorial of a negative number");
  std::uint64_t result = 1;
  for (int k = 2; k <= n; ++k) {
    if (result > UINT64_MAX / static_cast<std::uint64_t>(k)) {
      throw std::overflow_error(std::to_string(n) + "! does not fit in 64 bits");
    }
    result *= static_cast<std::uint64_t>(k);
  }
  return result;
}

Permutation unrank(int n, std::uint64_t r) {
  const auto total = factorial(n);
  if (r >= total) {
    throw std::out_of_range("rank " + std::to_string(r) + " is outside [0, " + std::to_string(total) + ")");
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> word;
  word.reserve(pool.size());
  std::uint64_t block = total;
  for (int remaining = n; remaining > 0; --remaining) {
    block /= static_cast<std::uint64_t>(remaining);
    const auto digit = static_cast<std::size_t>(r / block);
    r %= block;
    word.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(word));
}

std::uint64_t rank(const Permutation& pi) {
  const int n = pi.size();
  std::uint64_t r = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j <= n; ++j) smaller_later += pi(j) < pi(i) ? 1 : 0;
    r = r * static_cast<std::uint64_t>(n - i + 1) + static_cast<std::uint64_t>(smaller_later);
  }
  return r;
}

namespace {

struct StatisticInfo {
  Statistic statistic;
  std::string_view name;
  std::vector<std::string_view> aliases;
};

const std::vector<StatisticInfo>& statistic_table() {
  static const std::vector<StatisticInfo> table = {
      {Statistic::invisible_inversions, "invinv", {"St001727"}},
      {Statistic::visible_inversions, "vis-inv", {}},
      {Statistic::inversions, "inv", {}},
      {Statistic::pattern_13_2, "13-2", {"St000356"}},
      {Statistic::pattern_31star2, "31*2", {"31⋆2"}},
      {Statistic::pattern_13_2_after_runsort, "13-2-runsort", {"13-2∘runsort", "13-2*runsort"}},
      {Statistic::descent_view_values, "31*2-views-count", {"31⋆2-views-count"}},
  };
  return table;
}

struct CheckInfo {
  Check check;
  std::string_view name;
};

constexpr CheckInfo kChecks[] = {
    {Check::bijectivity, "bijectivity"}, {Check::theorem1, "theorem1"},       {Check::roundtrip, "roundtrip"},
    {Check::equidist, "equidist"},       {Check::completions, "completions"}, {Check::runclasses, "runclasses"},
    {Check::involutions, "involutions"},
};

template <typename Range>
std::string join(const Range& values) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string multiset_text(const ValueMultiset& m) { return "{" + join(m.elements()) + "}"; }

void require_within_cap(int n, int cap) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > cap) {
    throw CapError("n = " + std::to_string(n) + " exceeds the exhaustive cap of " + std::to_string(cap) +
                   " (raise it with --max-n or PERMLAB_MAX_N)");
  }
  factorial(n);
}

}  // namespace

std::optional<Statistic> parse_statistic(std::string_view name) {
  for (const auto& info : statistic_table()) {
    if (info.name == name) return info.statistic;
    for (auto alias : info.aliases) {
      if (alias == name) return info.statistic;
    }
  }
  return std::nullopt;
}

std::string_view statistic_name(Statistic statistic) {
  for (const auto& info : statistic_table()) {
    if (info.statistic == statistic) return info.name;
  }
  return "?";
}

const std::vector<Statistic>& all_statistics() {
  static const std::vector<Statistic> all = [] {
    std::vector<Statistic> out;
    for (const auto& info : statistic_table()) out.push_back(info.statistic);
    return out;
  }();
  return all;
}

int evaluate(Statistic statistic, const Permutation& pi) {
  switch (statistic) {
    case Statistic::invisible_inversions:
      return invisible_inversions(pi).values.size();
    case Statistic::visible_inversions:
      return static_cast<int>(visible_inversions(pi).size());
    case Statistic::inversions:
      return inversions(pi).values.size();
    case Statistic::pattern_13_2:
      return static_cast<int>(occurrences_13_2(pi).size());
    case Statistic::pattern_31star2:
      return static_cast<int>(occurrences_31star2(pi).pairs.size());
    case Statistic::pattern_13_2_after_runsort:
      return static_cast<int>(occurrences_13_2(runsort(pi)).size());
    case Statistic::descent_view_values:
      return descent_views(pi).distinct();
  }
  return 0;
}

void QPolynomial::add(int exponent, std::uint64_t count) {
  if (count == 0) return;
  coefficients_[exponent] += count;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  for (auto [e, c] : other.coefficients_) add(e, c);
  return *this;
}

std::uint64_t QPolynomial::coefficient(int exponent) const {
  auto it = coefficients_.find(exponent);
  return it == coefficients_.end() ? 0 : it->second;
}

std::uint64_t QPolynomial::total() const {
  std::uint64_t sum = 0;
  for (auto [e, c] : coefficients_) sum += c;
  return sum;
}

QPolynomial distribution(Statistic statistic, int n, int cap) {
  require_within_cap(n, cap);
  QPolynomial poly;
  const auto total = factorial(n);
  for (std::uint64_t r = 0; r < total; ++r) poly.add(evaluate(statistic, unrank(n, r)));
  return poly;
}

std::vector<int> statistic_values(Statistic statistic, int n, int cap) {
  require_within_cap(n, cap);
  std::vector<int> out;
  const auto total = factorial(n);
  out.reserve(total);
  for (std::uint64_t r = 0; r < total; ++r) out.push_back(evaluate(statistic, unrank(n, r)));
  return out;
}

bool VerificationReport::same_outcome(const VerificationReport& other) const {
  return n == other.n && variant == other.variant && checks == other.checks && examined == other.examined &&
         failures == other.failures && seed == other.seed;
}

std::vector<ClauseResult> theorem1_clauses(const Permutation& pi, const Permutation& sigma) {
  std::vector<ClauseResult> out;
  const auto decomposition = runs(pi);
  const auto classes = position_classes(sigma);

  const auto views = descent_views(pi);
  const auto invisible = invisible_inversions(sigma).values;
  out.push_back({"descent-views", views == invisible, multiset_text(views), multiset_text(invisible)});

  auto tops = decomposition.tops;
  std::sort(tops.begin(), tops.end());
  out.push_back({"run-tops", tops == classes.weak_deficiency_positions, join(tops),
                 join(classes.weak_deficiency_positions)});

  auto bottoms = decomposition.bottoms;
  std::sort(bottoms.begin(), bottoms.end());
  out.push_back({"run-bottoms", bottoms == classes.weak_deficiency_values, join(bottoms),
                 join(classes.weak_deficiency_values)});

  const auto ascents_pi = global_ascents(pi);
  const auto ascents_sigma = global_ascents(sigma);
  out.push_back({"global-ascents", ascents_pi == ascents_sigma, join(ascents_pi), join(ascents_sigma)});

  const auto maxima = left_to_right_maxima(pi);
  const auto cycle_maxima = cycle_decomposition(sigma).maxima;
  out.push_back({"cycle-maxima", maxima == cycle_maxima, join(maxima), join(cycle_maxima)});
  return out;
}

namespace {

void append_clause_failures(const Permutation& pi, const Permutation& sigma, std::vector<Failure>& failures) {
  for (const auto& clause : theorem1_clauses(pi, sigma)) {
    if (!clause.holds) {
      failures.push_back({to_string(pi), "theorem1",
                          clause.id + ": " + clause.source_side + " vs " + clause.image_side + " for sigma " +
                              to_string(sigma)});
    }
  }
}

Permutation overlay(const PartialPermutation& sigma_e, const std::vector<int>& tops, const std::vector<int>& values) {
  auto sigma = sigma_e;
  for (std::size_t j = 0; j < tops.size(); ++j) sigma.assign(tops[j], values[j]);
  return sigma.to_permutation();
}

struct CompletionContext {
  const Permutation& pi;
  PartialPermutation sigma_e;
  std::vector<int> tops;
  std::vector<int> bottoms;
  ValueMultiset views;
  std::vector<int> ascents;
};

// Returns a failure message, empty on success.
std::string check_one_completion(const CompletionContext& ctx, const std::vector<int>& values) {
  const auto sigma = overlay(ctx.sigma_e, ctx.tops, values);
  const auto invisible = invisible_inversions(sigma).values;
  if (invisible != ctx.views) {
    return "completion " + to_string(sigma) + ": invisible inversion bottoms " + multiset_text(invisible) +
           " vs descent views " + multiset_text(ctx.views);
  }
  const auto ascents = global_ascents(sigma);
  if (ascents != ctx.ascents) {
    return "completion " + to_string(sigma) + ": global ascents " + join(ascents) + " vs " + join(ctx.ascents);
  }
  return {};
}

CompletionContext completion_context(const Permutation& pi) {
  const auto decomposition = runs(pi);
  CompletionContext ctx{pi, chi_e(pi), decomposition.tops, decomposition.bottoms, descent_views(pi),
                        global_ascents(pi)};
  std::sort(ctx.tops.begin(), ctx.tops.end());
  std::sort(ctx.bottoms.begin(), ctx.bottoms.end());
  return ctx;
}

}  // namespace

VerificationReport check_theorem1(const Permutation& pi, ChiVariant variant) {
  VerificationReport report;
  report.n = pi.size();
  report.variant = variant;
  report.examined = 1;
  const auto sigma = chi(pi, variant);
  for (const auto& clause : theorem1_clauses(pi, sigma)) report.checks.push_back(clause.id);
  append_clause_failures(pi, sigma, report.failures);
  return report;
}

std::uint64_t completion_count(const Permutation& pi) {
  const auto decomposition = runs(pi);
  auto tops = decomposition.tops;
  auto bottoms = decomposition.bottoms;
  std::sort(tops.begin(), tops.end());
  std::sort(bottoms.begin(), bottoms.end());
  std::uint64_t count = 1;
  for (std::size_t j = 0; j < tops.size(); ++j) {
    const auto allowed = static_cast<std::size_t>(std::upper_bound(bottoms.begin(), bottoms.end(), tops[j]) -
                                                  bottoms.begin());
    count *= allowed - j;
  }
  return count;
}

VerificationReport check_completions(const Permutation& pi, CompletionMode mode) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.n = pi.size();
  report.checks = {"completions"};
  const auto ctx = completion_context(pi);
  const std::size_t m = ctx.tops.size();

  std::vector<int> values(m, 0);
  std::vector<bool> used(m, false);
  auto record = [&] {
    ++report.examined;
    if (auto message = check_one_completion(ctx, values); !message.empty()) {
      report.failures.push_back({to_string(pi), "completions", message});
    }
  };

  if (mode.sample_count) {
    // Processing tops in increasing order, every unused bottom not exceeding
    // the current top can be chosen without running into a dead end.
    report.seed = mode.seed;
    std::mt19937_64 rng(mode.seed);
    for (int sample = 0; sample < *mode.sample_count; ++sample) {
      std::fill(used.begin(), used.end(), false);
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::size_t> options;
        for (std::size_t b = 0; b < m && ctx.bottoms[b] <= ctx.tops[j]; ++b) {
          if (!used[b]) options.push_back(b);
        }
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        const auto choice = options[pick(rng)];
        used[choice] = true;
        values[j] = ctx.bottoms[choice];
      }
      record();
    }
  } else {
    auto extend = [&](auto&& self, std::size_t j) -> void {
      if (j == m) {
        record();
        return;
      }
      for (std::size_t b = 0; b < m && ctx.bottoms[b] <= ctx.tops[j]; ++b) {
        if (used[b]) continue;
        used[b] = true;
        values[j] = ctx.bottoms[b];
        self(self, j + 1);
        used[b] = false;
      }
    };
    extend(extend, 0);
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Permutation> brute_force_preimage(const Permutation& sigma, ChiVariant variant, int cap) {
  const int n = sigma.size();
  require_within_cap(n, cap);
  std::vector<Permutation> out;
  const auto total = factorial(n);
  for (std::uint64_t r = 0; r < total; ++r) {
    auto pi = unrank(n, r);
    if (chi(pi, variant) == sigma) out.push_back(std::move(pi));
  }
  return out;
}

std::optional<Check> parse_check(std::string_view name) {
  for (const auto& info : kChecks) {
    if (info.name == name) return info.check;
  }
  return std::nullopt;
}

std::string_view check_name(Check check) {
  for (const auto& info : kChecks) {
    if (info.check == check) return info.name;
  }
  return "?";
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> all = [] {
    std::vector<Check> out;
    for (const auto& info : kChecks) out.push_back(info.check);
    return out;
  }();
  return all;
}

namespace {

using Key = std::vector<int>;

struct ChunkResult {
  std::uint64_t examined = 0;
  std::vector<Failure> failures;
  std::vector<std::uint64_t> image_ranks;
  QPolynomial invisible;
  QPolynomial runsorted;
  std::map<Key, std::set<Key>> chi_e_by_runs;
  std::map<Key, std::set<Key>> runs_by_chi_e;
};

// Element -> bottom of its descending run; determines the set of runs.
Key run_set_key(const Permutation& pi) {
  const auto decomposition = runs(pi);
  Key key(static_cast<std::size_t>(pi.size()), 0);
  for (std::size_t r = 0; r < decomposition.size(); ++r) {
    for (int v : decomposition.runs[r]) key[static_cast<std::size_t>(v - 1)] = decomposition.bottoms[r];
  }
  return key;
}

Key partial_key(const PartialPermutation& f) {
  Key key;
  for (int i = 1; i <= f.size(); ++i) key.push_back(f.get(i).value_or(0));
  return key;
}

bool in_involution_domain(const Permutation& pi) {
  const auto decomposition = runs(pi);
  for (std::size_t r = 0; r < decomposition.size(); ++r) {
    if (decomposition.runs[r].size() > 2) return false;
    if (r > 0 && decomposition.tops[r - 1] > decomposition.tops[r]) return false;
  }
  return true;
}

std::string key_text(const Key& key) { return join(key); }

void run_chunk(const SuiteConfig& config, std::uint64_t begin, std::uint64_t end, ChunkResult& out) {
  auto wants = [&](Check c) { return std::find(config.checks.begin(), config.checks.end(), c) != config.checks.end(); };
  const bool bijectivity = wants(Check::bijectivity);
  const bool theorem1 = wants(Check::theorem1);
  const bool roundtrip = wants(Check::roundtrip);
  const bool equidist = wants(Check::equidist);
  const bool completions = wants(Check::completions);
  const bool runclasses = wants(Check::runclasses);
  const bool involutions = wants(Check::involutions);

  for (std::uint64_t r = begin; r < end; ++r) {
    const auto pi = unrank(config.n, r);
    const auto word = to_string(pi);
    ++out.examined;

    Permutation sigma;
    try {
      sigma = chi(pi, config.variant);
    } catch (const std::exception& e) {
      out.failures.push_back({word, "chi", e.what()});
      continue;
    }

    if (bijectivity) out.image_ranks.push_back(rank(sigma));
    if (theorem1) append_clause_failures(pi, sigma, out.failures);
    if (roundtrip) {
      try {
        if (auto back = chi_inverse(sigma, config.variant); back != pi) {
          out.failures.push_back({word, "roundtrip", "chi_inverse(chi(pi)) = " + to_string(back)});
        }
      } catch (const std::exception& e) {
        out.failures.push_back({word, "roundtrip", std::string("chi_inverse(chi(pi)) failed: ") + e.what()});
      }
      try {
        if (auto forward = chi(chi_inverse(pi, config.variant), config.variant); forward != pi) {
          out.failures.push_back({word, "roundtrip", "chi(chi_inverse(sigma)) = " + to_string(forward)});
        }
      } catch (const std::exception& e) {
        out.failures.push_back({word, "roundtrip", std::string("chi_inverse(sigma) failed: ") + e.what()});
      }
    }
    if (equidist) {
      out.invisible.add(evaluate(Statistic::invisible_inversions, pi));
      out.runsorted.add(evaluate(Statistic::pattern_13_2_after_runsort, pi));
      const auto lhs = occurrences_31star2(pi).pairs.size();
      const auto rhs = occurrences_13_2(runsort(reverse(pi))).size();
      if (lhs != rhs) {
        out.failures.push_back({word, "equidist",
                                "|31*2| = " + std::to_string(lhs) + " but |13-2(runsort(reverse))| = " +
                                    std::to_string(rhs)});
      }
    }
    if (completions) {
      auto report = check_completions(pi, config.completion_mode);
      out.failures.insert(out.failures.end(), report.failures.begin(), report.failures.end());
    }
    if (runclasses) {
      auto by_runs = run_set_key(pi);
      auto by_chi_e = partial_key(chi_e(pi));
      out.chi_e_by_runs[by_runs].insert(by_chi_e);
      out.runs_by_chi_e[std::move(by_chi_e)].insert(std::move(by_runs));
    }
    if (involutions) {
      const bool domain = in_involution_domain(pi);
      if (domain != is_involution(sigma)) {
        out.failures.push_back({word, "involutions",
                                std::string(domain ? "in" : "outside") + " the restricted set but chi(pi) = " +
                                    to_string(sigma) + (domain ? " is not" : " is") + " an involution"});
      }
      if (domain && sigma != fundamental_inverse(pi)) {
        out.failures.push_back({word, "involutions", "chi(pi) = " + to_string(sigma) +
                                                         " differs from fundamental_inverse(pi) = " +
                                                         to_string(fundamental_inverse(pi))});
      }
    }
  }
}

void merge_classes(std::map<Key, std::set<Key>>& into, std::map<Key, std::set<Key>>& from) {
  for (auto& [key, values] : from) into[key].merge(values);
}

}  // namespace

VerificationReport verify_suite(const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  require_within_cap(config.n, config.cap);

  VerificationReport report;
  report.n = config.n;
  report.variant = config.variant;
  for (auto check : config.checks) report.checks.emplace_back(check_name(check));
  if (config.completion_mode.sample_count) report.seed = config.completion_mode.seed;

  const auto total = factorial(config.n);
  const auto jobs = static_cast<std::uint64_t>(std::max(1, config.jobs));
  const auto chunk = config.chunk_size > 0 ? config.chunk_size : std::max<std::uint64_t>(1, total / (jobs * 16));
  const auto chunk_count = static_cast<std::size_t>((total + chunk - 1) / chunk);

  std::vector<ChunkResult> results(chunk_count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < chunk_count; c = next++) {
      const auto begin = static_cast<std::uint64_t>(c) * chunk;
      run_chunk(config, begin, std::min(total, begin + chunk), results[c]);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  ChunkResult merged;
  std::vector<std::uint32_t> image_hits;
  auto wants = [&](Check c) { return std::find(config.checks.begin(), config.checks.end(), c) != config.checks.end(); };
  if (wants(Check::bijectivity)) image_hits.assign(static_cast<std::size_t>(total), 0);
  for (auto& result : results) {
    merged.examined += result.examined;
    merged.failures.insert(merged.failures.end(), result.failures.begin(), result.failures.end());
    for (auto r : result.image_ranks) ++image_hits[static_cast<std::size_t>(r)];
    merged.invisible += result.invisible;
    merged.runsorted += result.runsorted;
    merge_classes(merged.chi_e_by_runs, result.chi_e_by_runs);
    merge_classes(merged.runs_by_chi_e, result.runs_by_chi_e);
  }
  report.examined = merged.examined;
  report.failures = std::move(merged.failures);

  if (wants(Check::bijectivity)) {
    const auto hit = static_cast<std::uint64_t>(std::count_if(image_hits.begin(), image_hits.end(),
                                                              [](std::uint32_t h) { return h > 0; }));
    if (hit != total) {
      std::ostringstream detail;
      detail << "image has " << hit << " of " << total << " permutations";
      for (std::size_t r = 0, shown = 0; r < image_hits.size() && shown < 5; ++r) {
        if (image_hits[r] > 1) {
          detail << "; " << to_string(unrank(config.n, r)) << " hit " << image_hits[r] << " times";
          ++shown;
        }
      }
      report.failures.push_back({"-", "bijectivity", detail.str()});
    }
  }
  if (wants(Check::equidist) && merged.invisible != merged.runsorted) {
    report.failures.push_back({"-", "equidist", "invisible-inversion and 13-2-after-runsort distributions differ"});
  }
  if (wants(Check::runclasses)) {
    for (const auto& [key, values] : merged.chi_e_by_runs) {
      if (values.size() > 1) {
        report.failures.push_back({"-", "runclasses", "run set " + key_text(key) + " yields " +
                                                          std::to_string(values.size()) + " distinct chi_e maps"});
      }
    }
    for (const auto& [key, values] : merged.runs_by_chi_e) {
      if (values.size() > 1) {
        report.failures.push_back({"-", "runclasses", "chi_e map " + key_text(key) + " comes from " +
                                                          std::to_string(values.size()) + " run sets"});
      }
    }
  }

  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace permlab
