#include "permlab/maps.hpp"

#include <algorithm>

namespace permlab {

namespace {

Permutation concatenate_sorted(RunDecomposition decomposition, const std::vector<int>& keys) {
  std::vector<std::size_t> order(decomposition.size());
  for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<int> word;
  for (std::size_t r : order) word.insert(word.end(), decomposition.runs[r].begin(), decomposition.runs[r].end());
  return Permutation(std::move(word));
}

}  // namespace

Permutation runsort(const Permutation& pi) {
  auto decomposition = runs(pi, RunDirection::ascending);
  const auto keys = decomposition.bottoms;
  return concatenate_sorted(std::move(decomposition), keys);
}

Permutation sort_descending_runs_by_bottom(const Permutation& pi) {
  auto decomposition = runs(pi, RunDirection::descending);
  const auto keys = decomposition.bottoms;
  return concatenate_sorted(std::move(decomposition), keys);
}

Permutation fundamental_inverse(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> image(static_cast<std::size_t>(n));
  int block_start = 1;
  int running_max = 0;
  auto close_block = [&](int end) {  // positions [block_start, end)
    for (int p = block_start; p < end; ++p) {
      const int next = (p + 1 < end) ? pi(p + 1) : pi(block_start);
      image[static_cast<std::size_t>(pi(p) - 1)] = next;
    }
  };
  for (int p = 1; p <= n; ++p) {
    if (pi(p) > running_max) {
      if (p > 1) close_block(p);
      block_start = p;
      running_max = pi(p);
    }
  }
  if (n > 0) close_block(n + 1);
  return Permutation(std::move(image));
}

Permutation fundamental(const Permutation& sigma) {
  const auto decomposition = cycle_decomposition(sigma);
  std::vector<std::vector<int>> cycles;
  for (auto cycle : decomposition.cycles) {
    std::rotate(cycle.begin(), std::max_element(cycle.begin(), cycle.end()), cycle.end());
    cycles.push_back(std::move(cycle));
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<int> word;
  for (const auto& cycle : cycles) word.insert(word.end(), cycle.begin(), cycle.end());
  return Permutation(std::move(word));
}

}  // namespace permlab
