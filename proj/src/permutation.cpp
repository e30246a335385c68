#include "permlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace permlab {

namespace {

std::string quoted(std::string_view token) { return "'" + std::string(token) + "'"; }

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };

  // Commas delimit strictly (so "1,,2" has an empty token); whitespace runs
  // are a single separator.
  const bool has_comma = text.find(',') != std::string_view::npos;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = has_comma ? text.find(',', start) : start;
    if (!has_comma) {
      while (start < text.size() && is_space(text[start])) ++start;
      if (start == text.size()) break;
      end = start;
      while (end < text.size() && !is_space(text[end])) ++end;
    } else if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && is_space(token.front())) token.remove_prefix(1);
    while (!token.empty() && is_space(token.back())) token.remove_suffix(1);
    tokens.push_back(token);
    start = end + 1;
  }
  return tokens;
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n) {
      throw PermutationError("value " + std::to_string(v) + " is out of range 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw PermutationError("duplicate value " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation parse_permutation(std::string_view text) {
  auto tokens = split_tokens(text);
  if (tokens.empty()) return Permutation{};

  // A single token of several digits is an undelimited digit string.
  if (tokens.size() == 1 && tokens.front().size() > 1 &&
      std::all_of(tokens.front().begin(), tokens.front().end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
    const auto digits = tokens.front();
    if (digits.size() >= 10) {
      throw PermutationError("undelimited digit string " + quoted(digits) +
                             " is ambiguous for n >= 10; separate values with commas");
    }
    tokens.clear();
    for (std::size_t i = 0; i < digits.size(); ++i) tokens.push_back(digits.substr(i, 1));
  }

  std::vector<int> word;
  word.reserve(tokens.size());
  std::vector<std::string_view> source;
  for (auto token : tokens) {
    if (token.empty()) throw PermutationError("empty token in permutation " + quoted(text));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw PermutationError("token " + quoted(token) + " is not an integer");
    }
    word.push_back(value);
    source.push_back(token);
  }

  const int n = static_cast<int>(word.size());
  std::vector<bool> seen(word.size() + 1, false);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int v = word[i];
    if (v < 1 || v > n) {
      throw PermutationError("token " + quoted(source[i]) + " is out of range 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) throw PermutationError("token " + quoted(source[i]) + " is a duplicate");
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(word));
}

std::string to_string(const Permutation& pi) {
  std::string out;
  for (int i = 1; i <= pi.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(pi(i));
  }
  return out;
}

Permutation inverse(const Permutation& pi) {
  std::vector<int> word(static_cast<std::size_t>(pi.size()));
  for (int i = 1; i <= pi.size(); ++i) word[static_cast<std::size_t>(pi(i) - 1)] = i;
  return Permutation(std::move(word));
}

Permutation reverse(const Permutation& pi) {
  std::vector<int> word(pi.word().rbegin(), pi.word().rend());
  return Permutation(std::move(word));
}

RunDecomposition runs(const Permutation& pi, RunDirection direction) {
  RunDecomposition result;
  result.direction = direction;
  const auto& w = pi.word();
  auto continues = [direction](int prev, int next) {
    return direction == RunDirection::descending ? prev > next : prev < next;
  };
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || !continues(w[i - 1], w[i])) result.runs.emplace_back();
    result.runs.back().push_back(w[i]);
  }
  for (const auto& run : result.runs) {
    const auto [lo, hi] = std::minmax_element(run.begin(), run.end());
    result.tops.push_back(*hi);
    result.bottoms.push_back(*lo);
  }
  return result;
}

PositionClasses position_classes(const Permutation& pi) {
  PositionClasses pc;
  for (int i = 1; i <= pi.size(); ++i) {
    if (pi(i) > i) {
      pc.exceedances.push_back(i);
    } else {
      pc.weak_deficiency_positions.push_back(i);
      pc.weak_deficiency_values.push_back(pi(i));
    }
  }
  std::sort(pc.weak_deficiency_values.begin(), pc.weak_deficiency_values.end());
  return pc;
}

std::vector<int> global_ascents(const Permutation& pi) {
  std::vector<int> result;
  int running_max = 0;
  for (int m = 1; m <= pi.size(); ++m) {
    running_max = std::max(running_max, pi(m));
    if (running_max == m) result.push_back(m);
  }
  return result;
}

std::vector<int> left_to_right_maxima(const Permutation& pi) {
  std::vector<int> result;
  int running_max = 0;
  for (int v : pi.word()) {
    if (v > running_max) {
      result.push_back(v);
      running_max = v;
    }
  }
  return result;
}

CycleDecomposition cycle_decomposition(const Permutation& pi) {
  CycleDecomposition result;
  std::vector<bool> visited(static_cast<std::size_t>(pi.size()) + 1, false);
  for (int start = 1; start <= pi.size(); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !visited[static_cast<std::size_t>(x)]; x = pi(x)) {
      visited[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    result.maxima.push_back(*std::max_element(cycle.begin(), cycle.end()));
    result.cycles.push_back(std::move(cycle));
  }
  std::sort(result.maxima.begin(), result.maxima.end());
  return result;
}

bool is_involution(const Permutation& pi) {
  for (int i = 1; i <= pi.size(); ++i) {
    if (pi(pi(i)) != i) return false;
  }
  return true;
}

}  // namespace permlab
