#pragma once

#include <map>
#include <utility>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

/// Pairs of 1-indexed positions (i, j), sorted lexicographically.
using OccurrenceSet = std::vector<std::pair<int, int>>;

/// Multiset of values stored as value -> multiplicity; zero multiplicities
/// are never stored, so structural equality is multiset equality.
class ValueMultiset {
 public:
  ValueMultiset() = default;
  ValueMultiset(std::initializer_list<int> values);

  void add(int value, int multiplicity = 1);
  int count(int value) const;
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  int distinct() const { return static_cast<int>(counts_.size()); }

  const std::map<int, int>& counts() const { return counts_; }
  /// Values with repetition, ascending.
  std::vector<int> elements() const;

  bool operator==(const ValueMultiset& other) const { return counts_ == other.counts_; }

 private:
  std::map<int, int> counts_;
  int size_ = 0;
};

struct Occurrences {
  OccurrenceSet pairs;
  ValueMultiset values;
};

/// Pairs i < j with pi(i) > pi(j); `values` holds the inversion bottoms pi(j).
Occurrences inversions(const Permutation& pi);

/// Inversions with additionally pi(j) > i.
Occurrences invisible_inversions(const Permutation& pi);

/// Inversions with pi(j) <= i.
OccurrenceSet visible_inversions(const Permutation& pi);

/// Pairs i < j with pi(i) < pi(j) < pi(i+1).
OccurrenceSet occurrences_13_2(const Permutation& pi);

/// Pairs (i, j) with pi(i) > pi(j) > pi(i+1) such that the descending run
/// through positions i, i+1 has a smaller bottom than the descending run
/// containing pi(j). There is no order constraint between i and j.
/// `values` holds the descent views pi(j).
Occurrences occurrences_31star2(const Permutation& pi);

ValueMultiset descent_views(const Permutation& pi);

/// Multiplicity of v among the descent views, evaluated from the run
/// structure alone: the number of descending runs r with
/// min(r) < v < max(r) and min(r) < b, where b is the bottom of v's run.
/// Throws std::out_of_range unless 1 <= v <= n.
int dv(const Permutation& pi, int v);

/// Same as `dv` for every v at once; index 0 is unused.
std::vector<int> dv_vector(const Permutation& pi);

/// Multiset of pi(j) over inversions (i, j) of a word with distinct entries;
/// used for partial maps listed in position order.
ValueMultiset inversion_bottoms(const std::vector<int>& values);

}  // namespace permlab
