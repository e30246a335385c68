#include "permlab/statistics.hpp"

#include <stdexcept>
#include <string>

namespace permlab {

ValueMultiset::ValueMultiset(std::initializer_list<int> values) {
  for (int v : values) add(v);
}

void ValueMultiset::add(int value, int multiplicity) {
  if (multiplicity <= 0) return;
  counts_[value] += multiplicity;
  size_ += multiplicity;
}

int ValueMultiset::count(int value) const {
  auto it = counts_.find(value);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<int> ValueMultiset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (auto [value, mult] : counts_) out.insert(out.end(), static_cast<std::size_t>(mult), value);
  return out;
}

Occurrences inversions(const Permutation& pi) {
  Occurrences out;
  for (int i = 1; i <= pi.size(); ++i) {
    for (int j = i + 1; j <= pi.size(); ++j) {
      if (pi(i) > pi(j)) {
        out.pairs.emplace_back(i, j);
        out.values.add(pi(j));
      }
    }
  }
  return out;
}

Occurrences invisible_inversions(const Permutation& pi) {
  Occurrences out;
  for (int i = 1; i <= pi.size(); ++i) {
    for (int j = i + 1; j <= pi.size(); ++j) {
      if (pi(i) > pi(j) && pi(j) > i) {
        out.pairs.emplace_back(i, j);
        out.values.add(pi(j));
      }
    }
  }
  return out;
}

OccurrenceSet visible_inversions(const Permutation& pi) {
  OccurrenceSet out;
  for (int i = 1; i <= pi.size(); ++i) {
    for (int j = i + 1; j <= pi.size(); ++j) {
      if (pi(i) > pi(j) && pi(j) <= i) out.emplace_back(i, j);
    }
  }
  return out;
}

OccurrenceSet occurrences_13_2(const Permutation& pi) {
  OccurrenceSet out;
  for (int i = 1; i < pi.size(); ++i) {
    for (int j = i + 2; j <= pi.size(); ++j) {
      if (pi(i) < pi(j) && pi(j) < pi(i + 1)) out.emplace_back(i, j);
    }
  }
  return out;
}

Occurrences occurrences_31star2(const Permutation& pi) {
  const int n = pi.size();
  // bottom[p]: bottom of the descending run containing position p.
  std::vector<int> bottom(static_cast<std::size_t>(n) + 1, 0);
  for (int p = n; p >= 1; --p) {
    bottom[static_cast<std::size_t>(p)] =
        (p < n && pi(p) > pi(p + 1)) ? bottom[static_cast<std::size_t>(p + 1)] : pi(p);
  }

  Occurrences out;
  for (int i = 1; i < n; ++i) {
    if (pi(i) < pi(i + 1)) continue;
    for (int j = 1; j <= n; ++j) {
      if (pi(i) > pi(j) && pi(j) > pi(i + 1) &&
          bottom[static_cast<std::size_t>(i)] < bottom[static_cast<std::size_t>(j)]) {
        out.pairs.emplace_back(i, j);
        out.values.add(pi(j));
      }
    }
  }
  return out;
}

ValueMultiset descent_views(const Permutation& pi) { return occurrences_31star2(pi).values; }

std::vector<int> dv_vector(const Permutation& pi) {
  const int n = pi.size();
  const auto decomposition = runs(pi);
  std::vector<int> run_bottom(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t r = 0; r < decomposition.size(); ++r) {
    for (int v : decomposition.runs[r]) run_bottom[static_cast<std::size_t>(v)] = decomposition.bottoms[r];
  }

  std::vector<int> result(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    const int b = run_bottom[static_cast<std::size_t>(v)];
    int count = 0;
    for (std::size_t r = 0; r < decomposition.size(); ++r) {
      const int lo = decomposition.bottoms[r];
      const int hi = decomposition.tops[r];
      if (lo < v && v < hi && lo < b) ++count;
    }
    result[static_cast<std::size_t>(v)] = count;
  }
  return result;
}

int dv(const Permutation& pi, int v) {
  if (v < 1 || v > pi.size()) {
    throw std::out_of_range("value " + std::to_string(v) + " is outside 1.." + std::to_string(pi.size()));
  }
  return dv_vector(pi)[static_cast<std::size_t>(v)];
}

ValueMultiset inversion_bottoms(const std::vector<int>& values) {
  ValueMultiset out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] > values[j]) out.add(values[j]);
    }
  }
  return out;
}

}  // namespace permlab
