// Acceptance suite: every criterion is checked exhaustively at the stated
// size and prints one PASS/FAIL line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "permlab/chi.hpp"
#include "permlab/maps.hpp"
#include "permlab/statistics.hpp"
#include "permlab/verify.hpp"

using namespace permlab;

namespace {

using Clock = std::chrono::steady_clock;

const Permutation kExample({5, 2, 9, 6, 8, 7, 3, 1, 4});

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  if (!outcome.pass) ++failures;
  std::printf("[%s] %s %s (%.2f s)%s%s\n", outcome.pass ? "PASS" : "FAIL", id, title, seconds_since(start),
              outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
  std::fflush(stdout);
}

PartialPermutation make_partial(int n, std::initializer_list<std::pair<int, int>> entries) {
  PartialPermutation f(n);
  for (auto [i, v] : entries) f.assign(i, v);
  return f;
}

VerificationReport suite(int n, ChiVariant variant, std::vector<Check> checks, int jobs = 1) {
  SuiteConfig config;
  config.n = n;
  config.variant = variant;
  config.checks = std::move(checks);
  config.jobs = jobs;
  return verify_suite(config);
}

std::string first_failure(const VerificationReport& report) {
  if (report.passed()) return {};
  const auto& f = report.failures.front();
  return "n=" + std::to_string(report.n) + " variant=" + std::to_string(static_cast<int>(report.variant)) + " " +
         f.permutation + ": " + f.detail;
}

bool restricted_domain(const Permutation& pi) {
  const auto d = runs(pi);
  for (std::size_t r = 0; r < d.size(); ++r) {
    if (d.runs[r].size() > 2 || (r > 0 && d.tops[r - 1] > d.tops[r])) return false;
  }
  return true;
}

}  // namespace

int main() {
  const ChiVariant variants[] = {ChiVariant::first, ChiVariant::second};

  criterion("AC1", "worked example reproduced exactly in < 1 ms", [] {
    Outcome o;
    std::vector<double> timings;
    for (int rep = 0; rep < 5; ++rep) {
      const auto start = Clock::now();
      const auto sigma1 = chi(kExample, ChiVariant::first);
      const auto sigma2 = chi(kExample, ChiVariant::second);
      const auto sigma_e = chi_e(kExample);
      const auto rho_map = rho(runs(kExample));
      const auto tau_initial = tau(sigma_e, {1, 2, 4, 6}, rho_map);
      auto after_first = sigma_e;
      after_first.assign(4, 2);
      const auto tau_second = tau(after_first, {1, 2, 6}, rho_map);
      const auto views = descent_views(kExample);
      std::vector<int> dvs;
      for (int v : {3, 5, 7, 8, 9}) dvs.push_back(dv(kExample, v));
      const int star_preimages[] = {iterated_preimage(sigma_e, 8), iterated_preimage(sigma_e, 5),
                                    iterated_preimage(sigma_e, 4), iterated_preimage(sigma_e, 9)};
      timings.push_back(seconds_since(start));

      o.require(sigma1 == Permutation({3, 7, 5, 2, 1, 8, 9, 4, 6}), "chi variant 1 = " + to_string(sigma1));
      o.require(sigma2 == Permutation({3, 7, 5, 1, 4, 8, 9, 2, 6}), "chi variant 2 = " + to_string(sigma2));
      o.require(sigma_e == make_partial(9, {{1, 3}, {2, 7}, {3, 5}, {6, 8}, {7, 9}}), "sigma_e mismatch");
      o.require(rho_map == make_partial(9, {{1, 8}, {2, 5}, {4, 4}, {6, 9}}), "rho mismatch");
      o.require(star_preimages[0] == 6 && star_preimages[1] == 1 && star_preimages[2] == 4 && star_preimages[3] == 2,
                "sigma_e* mismatch");
      o.require(tau_initial == make_partial(9, {{1, 6}, {2, 1}, {4, 4}, {6, 2}}), "initial tau mismatch");
      o.require(tau_second == make_partial(9, {{1, 6}, {2, 1}, {6, 4}}), "tau after sigma(4)=2 mismatch");
      o.require(dvs == std::vector<int>{0, 1, 0, 0, 0}, "dv vector mismatch");
      o.require(views == ValueMultiset{2, 4, 4, 5, 6}, "descent views mismatch");
    }
    std::sort(timings.begin(), timings.end());
    const double median = timings[timings.size() / 2];
    o.require(median < 1e-3, "median time " + std::to_string(median * 1e3) + " ms");
    if (o.pass) o.detail = "median " + std::to_string(median * 1e6) + " us";
    return o;
  });

  criterion("AC2", "chi is a bijection on S_n, n = 1..8, both variants; n = 8 under 60 s (1 worker) / 15 s (4)", [&] {
    Outcome o;
    double single = 0, parallel = 0;
    for (auto variant : variants) {
      for (int n = 1; n <= 8; ++n) {
        const auto report = suite(n, variant, {Check::bijectivity});
        o.require(report.passed() && report.examined == factorial(n), first_failure(report));
        if (n == 8) single = std::max(single, report.elapsed_seconds);
      }
      const auto report = suite(8, variant, {Check::bijectivity}, 4);
      o.require(report.passed(), first_failure(report));
      parallel = std::max(parallel, report.elapsed_seconds);
    }
    o.require(single < 60.0, "single-threaded n=8 took " + std::to_string(single) + " s");
    o.require(parallel < 15.0, "4 workers n=8 took " + std::to_string(parallel) + " s");
    if (o.pass) o.detail = "n=8: " + std::to_string(single) + " s single, " + std::to_string(parallel) + " s with 4 workers";
    return o;
  });

  criterion("AC3", "all five theorem clauses hold on S_n, n <= 8, both variants", [&] {
    Outcome o;
    for (auto variant : variants) {
      for (int n = 0; n <= 8; ++n) o.require(suite(n, variant, {Check::theorem1}).passed(), "theorem1 failed");
    }
    return o;
  });

  criterion("AC4", "chi_inverse o chi = id and chi o chi_inverse = id, n <= 8, both variants", [&] {
    Outcome o;
    for (auto variant : variants) {
      for (int n = 0; n <= 8; ++n) {
        const auto report = suite(n, variant, {Check::roundtrip});
        o.require(report.passed(), first_failure(report));
      }
    }
    return o;
  });

  criterion("AC5", "invisible inversions and 13-2 after runsort are equidistributed, n = 1..8", [] {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
      const auto lhs = distribution(Statistic::invisible_inversions, n);
      const auto rhs = distribution(Statistic::pattern_13_2_after_runsort, n);
      o.require(lhs == rhs, "distributions differ at n=" + std::to_string(n));
      o.require(lhs.total() == factorial(n), "coefficients do not sum to n!");
      // Independent enumeration.
      QPolynomial oracle_lhs, oracle_rhs;
      oracle::for_each_permutation(n, [&](const oracle::Word& w) {
        int total = 0;
        for (auto [v, m] : oracle::invisible_inversion_bottoms(w)) total += m;
        oracle_lhs.add(total);
        oracle_rhs.add(oracle::count_13_2(oracle::runsort(w)));
      });
      o.require(lhs == oracle_lhs && rhs == oracle_rhs, "disagrees with brute-force oracle at n=" + std::to_string(n));
    }
    QPolynomial expected;
    expected.add(0, 4);
    expected.add(1, 2);
    o.require(distribution(Statistic::invisible_inversions, 3) == expected, "n=3 invinv is not {0:4, 1:2}");
    o.require(distribution(Statistic::pattern_13_2_after_runsort, 3) == expected, "n=3 13-2-runsort is not {0:4, 1:2}");
    return o;
  });

  criterion("AC6", "|31*2(pi)| = |13-2(runsort(reverse(pi)))| for all pi, n <= 8", [] {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
      oracle::for_each_permutation(n, [&](const oracle::Word& w) {
        Permutation pi(w);
        const auto lhs = occurrences_31star2(pi).pairs.size();
        const auto rhs = occurrences_13_2(runsort(reverse(pi))).size();
        o.require(lhs == rhs, "identity fails at " + to_string(pi));
        o.require(static_cast<int>(lhs) == oracle::count_31star2(w), "31*2 disagrees with oracle at " + to_string(pi));
      });
    }
    o.require(occurrences_31star2(kExample).pairs.size() == 5, "example |31*2| != 5");
    o.require(occurrences_13_2(runsort(reverse(kExample))).size() == 5, "example |13-2(runsort(reverse))| != 5");
    return o;
  });

  criterion("AC7", "chi_e classes equal descending-run-set classes, n <= 7; example class has 12 members", [] {
    Outcome o;
    for (int n = 1; n <= 7; ++n) {
      std::map<std::vector<std::vector<int>>, std::set<std::vector<int>>> by_runs;
      std::map<std::vector<int>, std::set<std::vector<std::vector<int>>>> by_chi_e;
      oracle::for_each_permutation(n, [&](const oracle::Word& w) {
        const auto sigma_e = chi_e(Permutation(w));
        std::vector<int> key;
        for (int i = 1; i <= n; ++i) key.push_back(sigma_e.get(i).value_or(0));
        const auto run_key = oracle::run_set(w);
        by_runs[run_key].insert(key);
        by_chi_e[key].insert(run_key);
      });
      for (const auto& [k, v] : by_runs) o.require(v.size() == 1, "run set with several chi_e at n=" + std::to_string(n));
      for (const auto& [k, v] : by_chi_e) o.require(v.size() == 1, "chi_e with several run sets at n=" + std::to_string(n));
    }
    const auto target = chi_e(kExample);
    const auto target_runs = oracle::run_set(kExample.word());
    int same_chi_e = 0, same_runs = 0;
    oracle::for_each_permutation(9, [&](const oracle::Word& w) {
      same_runs += oracle::run_set(w) == target_runs ? 1 : 0;
      same_chi_e += chi_e(Permutation(w)) == target ? 1 : 0;
    });
    o.require(same_runs == 12, "example run-set class has " + std::to_string(same_runs) + " members");
    o.require(same_chi_e == 12, "example chi_e class has " + std::to_string(same_chi_e) + " members");
    return o;
  });

  criterion("AC8", "every weak-deficiency completion of chi_e keeps views and global ascents, n <= 6", [] {
    Outcome o;
    std::uint64_t completions = 0;
    for (int n = 1; n <= 6; ++n) {
      oracle::for_each_permutation(n, [&](const oracle::Word& w) {
        const auto report = check_completions(Permutation(w));
        completions += report.examined;
        o.require(report.passed(), first_failure(report));
      });
    }
    const auto example = check_completions(kExample);
    o.require(example.passed(), first_failure(example));
    o.require(example.examined == 12, "example has " + std::to_string(example.examined) + " completions");
    if (o.pass) o.detail = std::to_string(completions) + " completions checked";
    return o;
  });

  criterion("AC9", "chi_e is the unique strict-exceedance bijection with the prescribed bottoms, n <= 6", [] {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
      oracle::for_each_permutation(n, [&](const oracle::Word& w) {
        Permutation pi(w);
        const auto d = runs(pi);
        std::set<int> tops(d.tops.begin(), d.tops.end());
        std::set<int> bottoms(d.bottoms.begin(), d.bottoms.end());
        std::vector<int> domain, values;
        for (int v = 1; v <= n; ++v) {
          if (!tops.count(v)) domain.push_back(v);
          if (!bottoms.count(v)) values.push_back(v);
        }
        // Prescribed multiset straight from the definition of descent views.
        ValueMultiset wanted;
        for (auto [v, m] : oracle::descent_views(w)) {
          if (!bottoms.count(v)) wanted.add(v, m);
        }
        std::vector<std::vector<int>> found;
        do {
          bool exceeds = true;
          for (std::size_t k = 0; k < domain.size(); ++k) exceeds = exceeds && values[k] > domain[k];
          if (exceeds && inversion_bottoms(values) == wanted) found.push_back(values);
        } while (std::next_permutation(values.begin(), values.end()));
        o.require(found.size() == 1, std::to_string(found.size()) + " candidates for " + to_string(pi));
        if (found.size() == 1) {
          o.require(chi_e(pi).values_by_position() == found.front(), "chi_e differs from the unique map at " +
                                                                        to_string(pi));
        }
      });
    }
    return o;
  });

  criterion("AC10", "chi-preimage of involutions is the short-increasing-run set; chi = fundamental_inverse there", [&] {
    Outcome o;
    for (auto variant : variants) {
      for (int n = 1; n <= 8; ++n) {
        std::size_t domain_size = 0, involutions = 0;
        oracle::for_each_permutation(n, [&](const oracle::Word& w) {
          Permutation pi(w);
          const bool in_domain = restricted_domain(pi);
          const auto sigma = chi(pi, variant);
          domain_size += in_domain ? 1 : 0;
          involutions += oracle::is_involution(sigma.word()) ? 1 : 0;
          o.require(in_domain == oracle::is_involution(sigma.word()), "preimage mismatch at " + to_string(pi));
          if (in_domain) o.require(sigma == fundamental_inverse(pi), "chi != fundamental_inverse at " + to_string(pi));
        });
        o.require(domain_size == involutions, "domain and involution counts differ at n=" + std::to_string(n));
      }
    }
    return o;
  });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
