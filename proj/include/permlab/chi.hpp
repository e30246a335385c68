#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

/// An injective map from a subset of [n] into [n], with a preimage index.
class PartialPermutation {
 public:
  PartialPermutation() = default;
  explicit PartialPermutation(int n);

  int size() const { return n_; }
  bool defined(int i) const { return image_[idx(i)] != 0; }
  bool in_image(int v) const { return preimage_[idx(v)] != 0; }

  /// Value at i; i must be in the domain.
  int at(int i) const { return image_[idx(i)]; }
  std::optional<int> get(int i) const;
  std::optional<int> preimage(int v) const;

  /// Adds i -> v. Throws std::logic_error if i is already defined or v is
  /// already a value.
  void assign(int i, int v);

  /// Domain in ascending order.
  std::vector<int> domain() const;
  /// Values listed in ascending order of their positions.
  std::vector<int> values_by_position() const;
  int domain_size() const { return count_; }

  /// Converts a total map into a permutation.
  Permutation to_permutation() const;

  bool operator==(const PartialPermutation&) const = default;

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  int n_ = 0;
  int count_ = 0;
  std::vector<int> image_{0};     // 0 = undefined; index 0 unused
  std::vector<int> preimage_{0};
};

/// The iterated preimage f*(c) was requested for an element on a cycle of f.
class CycleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An invariant of the construction failed. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The input permutation is not the image of the bijection (or is
/// inconsistent with the data it is supposed to encode).
class NotInImageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The element s with f^k(s) = c for maximal k >= 0: walk preimages from c
/// until leaving the value set. Returns c if c is not a value of f. Throws
/// CycleError if c lies on a cycle of f.
int iterated_preimage(const PartialPermutation& f, int c);

/// The exceedance part of the bijection: the unique map
/// [n] \ run tops -> [n] \ run bottoms whose inversion bottoms are the
/// descent views of pi that are not run bottoms. Every assigned position is a
/// strict exceedance.
PartialPermutation chi_e(const Permutation& pi);

/// Maps the bottom of every descending run to the top of the same run.
PartialPermutation rho(const RunDecomposition& descending_runs);

/// b -> iterated_preimage(sigma, rho(b)) for each b in `remaining_bottoms`.
/// Recomputed from scratch on every call.
PartialPermutation tau(const PartialPermutation& sigma, const std::vector<int>& remaining_bottoms,
                       const PartialPermutation& rho_map);

enum class ChiVariant { first = 1, second = 2 };

enum class StepRule { first, predecessor };

struct ChiStep {
  int top = 0;
  StepRule rule = StepRule::first;
  int predecessor_bottom = 0;  // 0 when rule == first
  int assigned = 0;

  bool operator==(const ChiStep&) const = default;
};

/// One record per run top, in increasing order of tops.
struct ChiTrace {
  ChiVariant variant = ChiVariant::first;
  std::vector<ChiStep> steps;

  bool operator==(const ChiTrace&) const = default;
};

struct ChiResult {
  Permutation sigma;
  ChiTrace trace;
};

/// The full bijection: completes chi_e(pi) on the run tops of pi, processing
/// tops in increasing order and removing each run as it is handled.
ChiResult chi_with_trace(const Permutation& pi, ChiVariant variant);
Permutation chi(const Permutation& pi, ChiVariant variant);

/// Recovers the set of descending runs from chi_e data. Each run is listed in
/// decreasing order; runs are ordered by increasing bottom. Throws
/// NotInImageError if the data is inconsistent.
std::vector<std::vector<int>> runs_from_chi_e(const PartialPermutation& sigma_e, const std::vector<int>& run_tops,
                                              const std::vector<int>& run_bottoms);

/// Inverse of `chi`. Throws NotInImageError if sigma cannot be decoded, and
/// always checks chi(result, variant) == sigma before returning.
Permutation chi_inverse(const Permutation& sigma, ChiVariant variant);

}  // namespace permlab
