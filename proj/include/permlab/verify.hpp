#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/chi.hpp"
#include "permlab/permutation.hpp"

namespace permlab {

/// Default upper bound on n for exhaustive enumeration.
inline constexpr int kDefaultExhaustiveCap = 9;

/// A request that would enumerate S_n for n above the configured cap.
class CapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n!, throwing std::overflow_error if it does not fit in 64 bits.
std::uint64_t factorial(int n);

/// The r-th permutation of [n] in lexicographic order (factorial number
/// system). Throws std::out_of_range unless 0 <= r < n!.
Permutation unrank(int n, std::uint64_t rank);
std::uint64_t rank(const Permutation& pi);

enum class Statistic {
  invisible_inversions,
  visible_inversions,
  inversions,
  pattern_13_2,
  pattern_31star2,
  pattern_13_2_after_runsort,
  descent_view_values,
};

std::optional<Statistic> parse_statistic(std::string_view name);
std::string_view statistic_name(Statistic statistic);
const std::vector<Statistic>& all_statistics();

/// Value of a statistic on one permutation. `descent_view_values` counts the
/// distinct descent views; the multiset size is `pattern_31star2`.
int evaluate(Statistic statistic, const Permutation& pi);

/// Generating polynomial sum_e count(e) q^e of a statistic over S_n.
class QPolynomial {
 public:
  void add(int exponent, std::uint64_t count = 1);
  QPolynomial& operator+=(const QPolynomial& other);

  std::uint64_t coefficient(int exponent) const;
  std::uint64_t total() const;
  const std::map<int, std::uint64_t>& coefficients() const { return coefficients_; }

  bool operator==(const QPolynomial&) const = default;

 private:
  std::map<int, std::uint64_t> coefficients_;
};

QPolynomial distribution(Statistic statistic, int n, int cap = kDefaultExhaustiveCap);

/// Values of a statistic over S_n in lexicographic order.
std::vector<int> statistic_values(Statistic statistic, int n, int cap = kDefaultExhaustiveCap);

struct Failure {
  std::string permutation;  // comma-separated word, or "-" for global checks
  std::string check;
  std::string detail;

  bool operator==(const Failure&) const = default;
};

struct VerificationReport {
  int n = 0;
  ChiVariant variant = ChiVariant::first;
  std::vector<std::string> checks;
  std::uint64_t examined = 0;
  std::vector<Failure> failures;
  std::optional<std::uint64_t> seed;
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
  /// Equality ignoring wall time.
  bool same_outcome(const VerificationReport& other) const;
};

/// One clause of the main theorem, evaluated for sigma = chi(pi).
struct ClauseResult {
  std::string id;
  bool holds = false;
  std::string source_side;  // witness computed on pi
  std::string image_side;   // witness computed on sigma
};

/// The five clauses relating pi and sigma: descent views vs invisible
/// inversion bottoms, run tops vs weak deficiency positions, run bottoms vs
/// weak deficiency values, global ascents, left-to-right maxima vs cycle maxima.
std::vector<ClauseResult> theorem1_clauses(const Permutation& pi, const Permutation& sigma);

VerificationReport check_theorem1(const Permutation& pi, ChiVariant variant);

/// All completions, or `sample_count` random ones drawn with `seed`.
struct CompletionMode {
  std::optional<int> sample_count;
  std::uint64_t seed = 0;
};

/// Number of bijections run tops -> run bottoms with every value at most its
/// position (the weak-deficiency completions of chi_e(pi)).
std::uint64_t completion_count(const Permutation& pi);

/// Overlays every (or sampled) weak-deficiency completion on chi_e(pi) and
/// checks the invisible inversion bottoms and global ascents against pi.
/// `examined` counts completions.
VerificationReport check_completions(const Permutation& pi, CompletionMode mode = {});

/// {pi in S_n : chi(pi, variant) = sigma}, by exhaustive search.
std::vector<Permutation> brute_force_preimage(const Permutation& sigma, ChiVariant variant,
                                              int cap = kDefaultExhaustiveCap);

enum class Check {
  bijectivity,
  theorem1,
  roundtrip,
  equidist,
  completions,
  runclasses,
  involutions,
};

std::optional<Check> parse_check(std::string_view name);
std::string_view check_name(Check check);
const std::vector<Check>& all_checks();

struct SuiteConfig {
  int n = 0;
  ChiVariant variant = ChiVariant::first;
  std::vector<Check> checks = all_checks();
  int jobs = 1;
  /// Ranks per work item; 0 picks a size from n! and `jobs`.
  std::uint64_t chunk_size = 0;
  int cap = kDefaultExhaustiveCap;
  CompletionMode completion_mode;
};

/// Runs the selected checks over all of S_n. The rank space is split into
/// contiguous chunks handed out to `jobs` workers; per-chunk results are
/// merged in rank order, so the report does not depend on scheduling.
VerificationReport verify_suite(const SuiteConfig& config);

}  // namespace permlab
