#pragma once

#include "permlab/permutation.hpp"

namespace permlab {

/// Ascending runs concatenated in increasing order of their first (minimal)
/// elements. The ascending runs of the result may merge, so they need not
/// coincide with the sorted input blocks.
Permutation runsort(const Permutation& pi);

/// Descending runs concatenated in increasing order of their bottoms. Keeps
/// the set of descending runs, hence the descent-view multiset.
Permutation sort_descending_runs_by_bottom(const Permutation& pi);

/// Cuts the word before each left-to-right maximum and reads every block
/// (a_1 ... a_k) as the cycle a_1 -> a_2 -> ... -> a_k -> a_1. Cycle maxima of
/// the result are the left-to-right maxima of the input.
Permutation fundamental_inverse(const Permutation& pi);

/// Writes every cycle with its maximum first, orders cycles by increasing
/// maxima and concatenates. Inverse of `fundamental_inverse`.
Permutation fundamental(const Permutation& sigma);

}  // namespace permlab
