#include <doctest.h>

#include "oracles.hpp"
#include "permlab/maps.hpp"
#include "permlab/statistics.hpp"

using namespace permlab;

namespace {
const Permutation kExample({5, 2, 9, 6, 8, 7, 3, 1, 4});

ValueMultiset from_map(const std::map<int, int>& m) {
  ValueMultiset out;
  for (auto [v, c] : m) out.add(v, c);
  return out;
}
}  // namespace

TEST_CASE("ValueMultiset is canonical") {
  ValueMultiset a{4, 2, 4};
  ValueMultiset b;
  b.add(2);
  b.add(4, 2);
  b.add(7, 0);
  CHECK(a == b);
  CHECK(a.size() == 3);
  CHECK(a.distinct() == 2);
  CHECK(a.count(7) == 0);
  CHECK(a.elements() == std::vector<int>{2, 4, 4});
}

TEST_CASE("inversions") {
  CHECK(inversions(Permutation::identity(3)).pairs.empty());
  CHECK(inversions(Permutation({2, 1})).pairs == OccurrenceSet{{1, 2}});
  CHECK(inversions(Permutation({2, 1})).values == ValueMultiset{1});
  const auto three = inversions(Permutation({3, 1, 2}));
  CHECK(three.pairs == OccurrenceSet{{1, 2}, {1, 3}});
  CHECK(three.values == ValueMultiset{1, 2});
}

TEST_CASE("invisible and visible inversions") {
  const auto inv = invisible_inversions(Permutation({3, 1, 2}));
  CHECK(inv.pairs == OccurrenceSet{{1, 3}});
  CHECK(inv.values == ValueMultiset{2});
  CHECK(invisible_inversions(Permutation({3, 7, 5, 2, 1, 8, 9, 4, 6})).values == ValueMultiset{2, 4, 4, 5, 6});
  CHECK(invisible_inversions(Permutation::identity(3)).pairs.empty());

  CHECK(visible_inversions(Permutation({3, 1, 2})) == OccurrenceSet{{1, 2}});
  CHECK(visible_inversions(Permutation({2, 1})) == OccurrenceSet{{1, 2}});
  CHECK(visible_inversions(Permutation::identity(3)).empty());
}

TEST_CASE("inversions split into invisible and visible") {
  for (int n = 1; n <= 7; ++n) {
    oracle::for_each_permutation(n, [](const oracle::Word& w) {
      Permutation pi(w);
      const auto all = inversions(pi).pairs;
      const auto invisible = invisible_inversions(pi).pairs;
      const auto visible = visible_inversions(pi);
      OccurrenceSet merged;
      std::merge(invisible.begin(), invisible.end(), visible.begin(), visible.end(), std::back_inserter(merged));
      REQUIRE(merged == all);
      REQUIRE(invisible.size() + visible.size() == all.size());
      for (auto [i, j] : invisible) REQUIRE(pi(j) >= 2);
    });
  }
}

TEST_CASE("13-2 occurrences") {
  CHECK(occurrences_13_2(Permutation({1, 3, 2})) == OccurrenceSet{{1, 3}});
  CHECK(occurrences_13_2(Permutation({1, 3, 7, 8, 2, 5, 4, 6, 9})) ==
        OccurrenceSet{{1, 5}, {2, 6}, {2, 7}, {2, 8}, {5, 7}});
  CHECK(occurrences_13_2(Permutation::identity(3)).empty());
}

TEST_CASE("31*2 occurrences and descent views") {
  const auto ex = occurrences_31star2(kExample);
  CHECK(ex.values == ValueMultiset{2, 4, 4, 5, 6});
  CHECK(ex.pairs == OccurrenceSet{{1, 9}, {6, 1}, {6, 4}, {6, 9}, {7, 2}});

  const auto small = occurrences_31star2(Permutation({3, 1, 2}));
  CHECK(small.pairs == OccurrenceSet{{1, 3}});
  CHECK(small.values == ValueMultiset{2});
  CHECK(occurrences_31star2(Permutation::identity(3)).pairs.empty());
}

TEST_CASE("descent views match the brute-force definition") {
  for (int n = 1; n <= 7; ++n) {
    oracle::for_each_permutation(n, [](const oracle::Word& w) {
      REQUIRE(descent_views(Permutation(w)) == from_map(oracle::descent_views(w)));
    });
  }
}

TEST_CASE("dv formula") {
  const int expected[] = {0, 1, 0, 0, 0};
  const int values[] = {3, 5, 7, 8, 9};
  for (int k = 0; k < 5; ++k) CHECK(dv(kExample, values[k]) == expected[k]);
  CHECK(dv(kExample, 4) == 2);
  CHECK(dv(kExample, 1) == 0);
  CHECK_THROWS_AS(dv(kExample, 0), std::out_of_range);
  CHECK_THROWS_AS(dv(kExample, 10), std::out_of_range);

  for (int n = 1; n <= 8; ++n) {
    oracle::for_each_permutation(n, [n](const oracle::Word& w) {
      Permutation pi(w);
      const auto views = descent_views(pi);
      const auto formula = dv_vector(pi);
      REQUIRE(formula[1] == 0);
      for (int v = 1; v <= n; ++v) REQUIRE(formula[static_cast<std::size_t>(v)] == views.count(v));
    });
  }
}

TEST_CASE("31*2 count equals 13-2 count after reverse and runsort") {
  CHECK(occurrences_31star2(kExample).pairs.size() == 5);
  CHECK(occurrences_13_2(runsort(reverse(kExample))).size() == 5);
  for (int n = 1; n <= 8; ++n) {
    oracle::for_each_permutation(n, [](const oracle::Word& w) {
      Permutation pi(w);
      REQUIRE(occurrences_31star2(pi).pairs.size() == occurrences_13_2(runsort(reverse(pi))).size());
    });
  }
}

TEST_CASE("descent views depend only on the run set") {
  for (int n = 1; n <= 7; ++n) {
    oracle::for_each_permutation(n, [](const oracle::Word& w) {
      Permutation pi(w);
      REQUIRE(descent_views(sort_descending_runs_by_bottom(pi)) == descent_views(pi));
    });
  }
}

TEST_CASE("inversion bottoms of a word") {
  CHECK(inversion_bottoms({3, 7, 5, 8, 9}) == ValueMultiset{5});
  CHECK(inversion_bottoms({}).empty());
}
