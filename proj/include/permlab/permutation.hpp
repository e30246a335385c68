#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permlab {

/// Raised for malformed permutation input (duplicates, out-of-range values,
/// empty tokens, non-numeric text).
class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of [n] = {1, ..., n} in one-line notation.
///
/// Positions and values are 1-indexed at the interface: `pi(i)` is the value
/// at position i. The empty word (n = 0) is a valid permutation.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `word` is a rearrangement of 1..word.size().
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  int operator()(int position) const { return word_[static_cast<std::size_t>(position - 1)]; }
  const std::vector<int>& word() const { return word_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

/// Parses comma- and/or whitespace-separated values, e.g. "5,2,9,6". A bare
/// digit string such as "312" is read one digit per value, which is only
/// unambiguous (and therefore only accepted) for n <= 9.
Permutation parse_permutation(std::string_view text);

/// Comma-separated one-line notation, e.g. "3,1,2".
std::string to_string(const Permutation& pi);

Permutation inverse(const Permutation& pi);
Permutation reverse(const Permutation& pi);

enum class RunDirection { descending, ascending };

/// Maximal consecutive monotone factors of a word, in word order.
struct RunDecomposition {
  RunDirection direction = RunDirection::descending;
  std::vector<std::vector<int>> runs;
  std::vector<int> tops;
  std::vector<int> bottoms;

  std::size_t size() const { return runs.size(); }
  bool operator==(const RunDecomposition&) const = default;
};

RunDecomposition runs(const Permutation& pi, RunDirection direction = RunDirection::descending);

/// Exceedances (pi(i) > i) and weak deficiencies (pi(i) <= i). All three
/// lists are sorted ascending.
struct PositionClasses {
  std::vector<int> exceedances;
  std::vector<int> weak_deficiency_positions;
  std::vector<int> weak_deficiency_values;

  bool operator==(const PositionClasses&) const = default;
};

PositionClasses position_classes(const Permutation& pi);

/// All m in [n] with {pi(1), ..., pi(m)} = [m]. Always contains n when n >= 1.
std::vector<int> global_ascents(const Permutation& pi);

/// Values larger than every value to their left, in increasing order.
std::vector<int> left_to_right_maxima(const Permutation& pi);

/// Disjoint cycles, each written from its smallest element and listed in
/// order of those smallest elements. `maxima` is sorted ascending.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  std::vector<int> maxima;

  bool operator==(const CycleDecomposition&) const = default;
};

CycleDecomposition cycle_decomposition(const Permutation& pi);

bool is_involution(const Permutation& pi);

}  // namespace permlab
