#include "permlab/chi.hpp"

#include <algorithm>
#include <list>
#include <string>

#include "permlab/statistics.hpp"

namespace permlab {

PartialPermutation::PartialPermutation(int n)
    : n_(n), image_(static_cast<std::size_t>(n) + 1, 0), preimage_(static_cast<std::size_t>(n) + 1, 0) {}

std::optional<int> PartialPermutation::get(int i) const {
  if (i < 1 || i > n_ || !defined(i)) return std::nullopt;
  return at(i);
}

std::optional<int> PartialPermutation::preimage(int v) const {
  if (v < 1 || v > n_ || !in_image(v)) return std::nullopt;
  return preimage_[idx(v)];
}

void PartialPermutation::assign(int i, int v) {
  if (i < 1 || i > n_ || v < 1 || v > n_) {
    throw std::logic_error("assignment " + std::to_string(i) + "->" + std::to_string(v) + " outside [" +
                           std::to_string(n_) + "]");
  }
  if (defined(i)) throw std::logic_error(std::to_string(i) + " already has a value");
  if (in_image(v)) throw std::logic_error(std::to_string(v) + " is already a value");
  image_[idx(i)] = v;
  preimage_[idx(v)] = i;
  ++count_;
}

std::vector<int> PartialPermutation::domain() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (defined(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> PartialPermutation::values_by_position() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (defined(i)) out.push_back(at(i));
  }
  return out;
}

Permutation PartialPermutation::to_permutation() const {
  if (count_ != n_) throw std::logic_error("partial permutation is not total");
  return Permutation(std::vector<int>(image_.begin() + 1, image_.end()));
}

int iterated_preimage(const PartialPermutation& f, int c) {
  int current = c;
  for (int steps = 0; steps <= f.size(); ++steps) {
    auto previous = f.preimage(current);
    if (!previous) return current;
    current = *previous;
    if (current == c) break;
  }
  throw CycleError("element " + std::to_string(c) + " lies on a cycle");
}

namespace {

std::vector<bool> membership(int n, const std::vector<int>& values) {
  std::vector<bool> out(static_cast<std::size_t>(n) + 1, false);
  for (int v : values) out[static_cast<std::size_t>(v)] = true;
  return out;
}

// The first-variant step: iterate tau = sigma* o rho from `a` until the value
// drops below `top`. Returns nullopt if the walk leaves the remaining bottoms,
// hits a cycle of sigma, or does not terminate.
std::optional<int> follow_tau(const PartialPermutation& sigma, const PartialPermutation& rho_map,
                              const std::vector<bool>& remaining_bottom, int a, int top) {
  int current = a;
  for (int k = 1; k <= sigma.size() + 1; ++k) {
    if (!remaining_bottom[static_cast<std::size_t>(current)]) return std::nullopt;
    int next = 0;
    try {
      next = iterated_preimage(sigma, rho_map.at(current));
    } catch (const CycleError&) {
      return std::nullopt;
    }
    if (next < top) return next;
    current = next;
  }
  return std::nullopt;
}

// Elements outside sigma's value set other than `excluded`, ascending.
std::vector<int> free_values(const PartialPermutation& sigma, int excluded) {
  std::vector<int> out;
  for (int v = 1; v <= sigma.size(); ++v) {
    if (!sigma.in_image(v) && v != excluded) out.push_back(v);
  }
  return out;
}

std::vector<int> sorted_remaining(const std::vector<bool>& remaining_bottom) {
  std::vector<int> out;
  for (std::size_t v = 1; v < remaining_bottom.size(); ++v) {
    if (remaining_bottom[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

PartialPermutation chi_e(const Permutation& pi) {
  const int n = pi.size();
  const auto decomposition = runs(pi);
  const auto is_top = membership(n, decomposition.tops);
  const auto is_bottom = membership(n, decomposition.bottoms);
  const auto views = dv_vector(pi);

  std::vector<int> available;
  for (int i = 1; i <= n; ++i) {
    if (!is_top[static_cast<std::size_t>(i)]) available.push_back(i);
  }

  PartialPermutation sigma_e(n);
  for (int v = 1; v <= n; ++v) {
    if (is_bottom[static_cast<std::size_t>(v)]) continue;
    const auto rank = static_cast<std::size_t>(views[static_cast<std::size_t>(v)]);
    if (rank >= available.size()) {
      throw InternalError("chi_e: no position left for value " + std::to_string(v) + " of " + to_string(pi));
    }
    sigma_e.assign(available[rank], v);
    available.erase(available.begin() + static_cast<std::ptrdiff_t>(rank));
  }
  return sigma_e;
}

PartialPermutation rho(const RunDecomposition& descending_runs) {
  int n = 0;
  for (const auto& run : descending_runs.runs) n += static_cast<int>(run.size());
  PartialPermutation out(n);
  for (std::size_t r = 0; r < descending_runs.size(); ++r) out.assign(descending_runs.bottoms[r], descending_runs.tops[r]);
  return out;
}

PartialPermutation tau(const PartialPermutation& sigma, const std::vector<int>& remaining_bottoms,
                       const PartialPermutation& rho_map) {
  PartialPermutation out(sigma.size());
  for (int b : remaining_bottoms) out.assign(b, iterated_preimage(sigma, rho_map.at(b)));
  return out;
}

ChiResult chi_with_trace(const Permutation& pi, ChiVariant variant) {
  const int n = pi.size();
  const auto decomposition = runs(pi);
  const auto rho_map = rho(decomposition);

  ChiResult result;
  result.trace.variant = variant;
  PartialPermutation sigma = chi_e(pi);

  std::vector<std::size_t> remaining(decomposition.size());  // run indices in word order
  for (std::size_t r = 0; r < remaining.size(); ++r) remaining[r] = r;
  auto by_top = remaining;
  std::sort(by_top.begin(), by_top.end(),
            [&](std::size_t a, std::size_t b) { return decomposition.tops[a] < decomposition.tops[b]; });
  auto remaining_bottom = membership(n, decomposition.bottoms);

  for (std::size_t run : by_top) {
    const int top = decomposition.tops[run];
    const auto position = std::find(remaining.begin(), remaining.end(), run);
    const bool was_first = position == remaining.begin();
    const int left_bottom = was_first ? 0 : decomposition.bottoms[*std::prev(position)];
    remaining.erase(position);
    remaining_bottom[static_cast<std::size_t>(decomposition.bottoms[run])] = false;

    ChiStep step{top, StepRule::first, 0, 0};
    if (was_first) {
      step.assigned = iterated_preimage(sigma, top);
    } else {
      step.rule = StepRule::predecessor;
      step.predecessor_bottom = left_bottom;
      if (variant == ChiVariant::first) {
        auto value = follow_tau(sigma, rho_map, remaining_bottom, left_bottom, top);
        if (!value) {
          throw InternalError("chi: no k with tau^k(" + std::to_string(left_bottom) + ") < " + std::to_string(top) +
                              " for " + to_string(pi));
        }
        step.assigned = *value;
      } else {
        const auto bottoms = sorted_remaining(remaining_bottom);
        const auto rank = static_cast<std::size_t>(std::lower_bound(bottoms.begin(), bottoms.end(), left_bottom) -
                                                   bottoms.begin());
        const auto candidates = free_values(sigma, iterated_preimage(sigma, top));
        if (rank >= candidates.size()) {
          throw InternalError("chi: candidate list too short at top " + std::to_string(top) + " for " +
                              to_string(pi));
        }
        step.assigned = candidates[rank];
      }
    }
    sigma.assign(top, step.assigned);
    result.trace.steps.push_back(step);
  }

  result.sigma = sigma.to_permutation();
  return result;
}

Permutation chi(const Permutation& pi, ChiVariant variant) { return chi_with_trace(pi, variant).sigma; }

std::vector<std::vector<int>> runs_from_chi_e(const PartialPermutation& sigma_e, const std::vector<int>& run_tops,
                                              const std::vector<int>& run_bottoms) {
  const int n = sigma_e.size();
  if (run_tops.size() != run_bottoms.size()) throw NotInImageError("run tops and run bottoms differ in number");
  for (int v : run_tops) {
    if (v < 1 || v > n || sigma_e.defined(v)) throw NotInImageError("run top " + std::to_string(v) + " is invalid");
  }
  for (int v : run_bottoms) {
    if (v < 1 || v > n || sigma_e.in_image(v)) {
      throw NotInImageError("run bottom " + std::to_string(v) + " is invalid");
    }
  }
  if (sigma_e.domain_size() + static_cast<int>(run_tops.size()) != n) {
    throw NotInImageError("exceedance data does not cover [n] \\ run tops");
  }

  const auto is_top = membership(n, run_tops);
  const auto is_bottom = membership(n, run_bottoms);
  const auto multiplicity = inversion_bottoms(sigma_e.values_by_position());

  std::vector<int> tops = run_tops;
  std::sort(tops.begin(), tops.end());
  std::vector<int> unmatched = run_bottoms;
  std::sort(unmatched.begin(), unmatched.end());

  struct Run {
    int top;
    int bottom;
    std::vector<int> elements;
  };
  std::vector<Run> found;
  for (int t : tops) {
    int bottom = t;
    if (!is_bottom[static_cast<std::size_t>(t)]) {
      const auto rank = static_cast<std::size_t>(multiplicity.count(t));
      if (rank >= unmatched.size() || unmatched[rank] >= t) {
        throw NotInImageError("no run bottom available for run top " + std::to_string(t));
      }
      bottom = unmatched[rank];
    }
    auto it = std::find(unmatched.begin(), unmatched.end(), bottom);
    if (it == unmatched.end()) throw NotInImageError("run bottom " + std::to_string(bottom) + " matched twice");
    unmatched.erase(it);
    found.push_back({t, bottom, bottom == t ? std::vector<int>{t} : std::vector<int>{t, bottom}});
  }
  std::sort(found.begin(), found.end(), [](const Run& a, const Run& b) { return a.bottom < b.bottom; });

  for (int v = 1; v <= n; ++v) {
    if (is_top[static_cast<std::size_t>(v)] || is_bottom[static_cast<std::size_t>(v)]) continue;
    auto rank = multiplicity.count(v);
    Run* target = nullptr;
    for (auto& run : found) {
      if (run.bottom < v && v < run.top && rank-- == 0) {
        target = &run;
        break;
      }
    }
    if (target == nullptr) throw NotInImageError("no run can hold " + std::to_string(v));
    target->elements.push_back(v);
  }

  std::vector<std::vector<int>> out;
  for (auto& run : found) {
    std::sort(run.elements.begin(), run.elements.end(), std::greater<>());
    out.push_back(std::move(run.elements));
  }
  return out;
}

Permutation chi_inverse(const Permutation& sigma, ChiVariant variant) {
  const int n = sigma.size();
  const auto classes = position_classes(sigma);

  PartialPermutation sigma_e(n);
  for (int i : classes.exceedances) sigma_e.assign(i, sigma(i));
  const auto run_sets = runs_from_chi_e(sigma_e, classes.weak_deficiency_positions, classes.weak_deficiency_values);

  RunDecomposition decomposition;
  for (const auto& run : run_sets) {
    decomposition.runs.push_back(run);
    decomposition.tops.push_back(run.front());
    decomposition.bottoms.push_back(run.back());
  }
  const auto rho_map = rho(decomposition);

  std::vector<std::size_t> by_top(decomposition.size());
  for (std::size_t r = 0; r < by_top.size(); ++r) by_top[r] = r;
  std::sort(by_top.begin(), by_top.end(),
            [&](std::size_t a, std::size_t b) { return decomposition.tops[a] < decomposition.tops[b]; });
  auto remaining_bottom = membership(n, decomposition.bottoms);

  struct Placement {
    std::size_t run;
    int predecessor_bottom;  // 0 = placed first
  };
  std::vector<Placement> placements;
  PartialPermutation partial = sigma_e;

  for (std::size_t run : by_top) {
    const int top = decomposition.tops[run];
    const int target = sigma(top);
    remaining_bottom[static_cast<std::size_t>(decomposition.bottoms[run])] = false;
    const int start = iterated_preimage(partial, top);

    int predecessor = 0;
    if (target != start) {
      const auto bottoms = sorted_remaining(remaining_bottom);
      if (variant == ChiVariant::first) {
        std::vector<int> matches;
        // A run left of t's run ends below t, or the two would merge.
        for (int a : bottoms) {
          if (a < top && follow_tau(partial, rho_map, remaining_bottom, a, top) == target) matches.push_back(a);
        }
        if (matches.size() != 1) {
          throw NotInImageError(std::to_string(matches.size()) + " candidate predecessors for run top " +
                                std::to_string(top));
        }
        predecessor = matches.front();
      } else {
        const auto candidates = free_values(partial, start);
        const auto it = std::find(candidates.begin(), candidates.end(), target);
        const auto rank = static_cast<std::size_t>(it - candidates.begin());
        if (it == candidates.end() || rank >= bottoms.size() || bottoms[rank] >= top) {
          throw NotInImageError("value " + std::to_string(target) + " at run top " + std::to_string(top) +
                                " cannot be decoded");
        }
        predecessor = bottoms[rank];
      }
    }
    try {
      partial.assign(top, target);
    } catch (const std::logic_error& e) {
      throw NotInImageError(e.what());
    }
    placements.push_back({run, predecessor});
  }

  std::list<std::size_t> order;
  for (auto it = placements.rbegin(); it != placements.rend(); ++it) {
    if (it->predecessor_bottom == 0) {
      order.push_front(it->run);
      continue;
    }
    auto left = std::find_if(order.begin(), order.end(), [&](std::size_t r) {
      return decomposition.bottoms[r] == it->predecessor_bottom;
    });
    if (left == order.end()) throw NotInImageError("predecessor run is not placed yet");
    order.insert(std::next(left), it->run);
  }

  std::vector<int> word;
  for (std::size_t r : order) word.insert(word.end(), decomposition.runs[r].begin(), decomposition.runs[r].end());
  Permutation pi(std::move(word));
  if (chi(pi, variant) != sigma) throw NotInImageError(to_string(sigma) + " does not round-trip");
  return pi;
}

}  // namespace permlab
