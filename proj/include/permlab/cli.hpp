#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/permutation.hpp"
#include "permlab/verify.hpp"

namespace permlab {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line front end. `args` excludes the program name.
/// Returns 0 on success, 1 if a verification failed and 2 on usage or
/// validation errors (diagnostics go to `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exhaustive cap from PERMLAB_MAX_N, or the default when unset. Throws
/// std::invalid_argument for a malformed value.
int exhaustive_cap_from_env();

// JSON wire formats. A permutation is an array of integers; a polynomial is
// an array of [exponent, count] pairs in increasing exponent order.
std::string permutation_to_json(const Permutation& pi);
Permutation permutation_from_json(std::string_view text);
std::string polynomial_to_json(const QPolynomial& poly);
QPolynomial polynomial_from_json(std::string_view text);

/// CSV rows `n,statistic,exponent,count` (with header line).
std::string polynomial_to_csv(int n, Statistic statistic, const QPolynomial& poly);

}  // namespace permlab
