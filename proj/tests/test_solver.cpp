#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permprod/cycle_io.hpp"
#include "permprod/oracle.hpp"
#include "permprod/solver.hpp"

using namespace permprod;

TEST_CASE("classify picks the construction route") {
  CHECK(classify(2, 3, 6).variant == SolveCase::EvenTripleInPlace);
  CHECK(classify(2, 5, 5).variant == SolveCase::EvenTripleInPlace);
  CHECK(classify(2, 2, 4).variant == SolveCase::DropCycleInPlace);
  CHECK(classify(2, 4, 6).variant == SolveCase::DropCycleInPlace);
  CHECK(classify(2, 3, 4).variant == SolveCase::DropCycleInPlace);  // 2 divides 4
  CHECK(classify(4, 4, 6).variant == SolveCase::AddTranspositionInPlace);
  CHECK(classify(2, 3, 3).variant == SolveCase::AugmentedNearCycle);
  CHECK(classify(3, 4, 5).variant == SolveCase::AugmentedNearCycle);
  CHECK(classify(3, 3, 4).variant == SolveCase::CEvenHalfEqual);
  CHECK(classify(3, 5, 8).variant == SolveCase::CEvenPair358);
  CHECK(classify(2, 2, 2).variant == SolveCase::CEvenAllEqual);
  CHECK(classify(4, 4, 4).variant == SolveCase::CEvenAllEqual);
  CHECK(classify(3, 9, 10).variant == SolveCase::CEvenNearCycle);

  const CaseTag grow_a = classify(3, 5, 10);
  CHECK(grow_a.variant == SolveCase::CEvenGrowA);
  REQUIRE(grow_a.recursion_trace.size() == 2);
  CHECK(grow_a.recursion_trace[0] == std::array<int, 3>{3, 5, 10});
  CHECK(grow_a.recursion_trace[1] == std::array<int, 3>{3, 5, 8});

  const CaseTag grow_ab = classify(3, 3, 10);
  CHECK(grow_ab.variant == SolveCase::CEvenGrowAB);
  REQUIRE(grow_ab.recursion_trace.size() == 3);
  CHECK(grow_ab.recursion_trace[1] == std::array<int, 3>{3, 3, 6});
  CHECK(grow_ab.recursion_trace[2] == std::array<int, 3>{3, 3, 4});

  CHECK_THROWS_AS(classify(1, 2, 3), OutOfRange);
  CHECK_THROWS_AS(classify(3, 2, 4), OutOfRange);
}

TEST_CASE("printed constructions are reproduced exactly") {
  {
    const auto r = solve(3, 5, 8);
    CHECK(r.tag.variant == SolveCase::CEvenPair358);
    CHECK(r.x == parse_cycles("(1,2,3)(4,5,6)(7,8,9)@10"));
    CHECK(r.y == parse_cycles("(1,4,8,9,10)"));
    CHECK(compose(r.x, r.y) == parse_cycles("(1,2,3,4,5,6,8,10)(7,9)"));
    CHECK(r.z == parse_cycles("(1,2,3,4,5,6,8,10)(7,9)").inverse());
    REQUIRE(r.fixed_point_on_big_cycle.has_value());
    CHECK(r.fixed_point_on_big_cycle->holder == TranspositionHolder::X);
    CHECK(r.fixed_point_on_big_cycle->point == 10);
    CHECK(r.exceptional == TranspositionHolder::Z);
  }
  {
    const auto r = solve(3, 3, 4);
    CHECK(r.tag.variant == SolveCase::CEvenHalfEqual);
    CHECK(r.x == parse_cycles("(1,2,3)(4,5,6)"));
    CHECK(r.y == parse_cycles("(1,6,4)@6"));
    CHECK(compose(r.x, r.y) == parse_cycles("(1,2,3,6)(4,5)"));
    // Only y has fixed points on the big cycle here.
    REQUIRE(r.fixed_point_on_big_cycle.has_value());
    CHECK(r.fixed_point_on_big_cycle->holder == TranspositionHolder::Y);
  }
  {
    const auto r = solve(4, 4, 4);
    CHECK(r.tag.variant == SolveCase::CEvenAllEqual);
    CHECK(r.x == parse_cycles("(1,2,3,4)@6"));
    CHECK(r.y == parse_cycles("(3,1,5,6)"));
    CHECK(compose(r.x, r.y) == parse_cycles("(3,4,5,6)(1,2)"));
  }
  {
    const auto r = solve(2, 2, 2);
    CHECK(r.x == parse_cycles("(1,2)@4"));
    CHECK(r.y == parse_cycles("(3,4)"));
    CHECK(r.z == parse_cycles("(1,2)(3,4)"));
  }
}

TEST_CASE("recursive constructions for larger even c") {
  {
    const auto r = solve(3, 5, 10);
    CHECK(r.tag.variant == SolveCase::CEvenGrowA);
    CHECK(r.x.degree() == 12);
    CHECK(cycle_type(r.z) == CycleType({10, 2}, 12));
    CHECK(verify_structure(r).ok);
  }
  {
    const auto r = solve(3, 3, 10);
    CHECK(r.tag.variant == SolveCase::CEvenGrowAB);
    CHECK(r.x.degree() == 12);
    CHECK(cycle_type(r.z) == CycleType({10, 2}, 12));
    CHECK(verify_structure(r).ok);
  }
}

TEST_CASE("single-route solvers guard their preconditions") {
  CHECK(verify_structure(solve_even_triple(2, 3, 6)).ok);
  CHECK(verify_structure(solve_even_triple(2, 2, 4)).ok);
  CHECK(verify_structure(solve_odd_with_even(3, 4, 5)).ok);
  CHECK(verify_structure(solve_c_even(3, 3, 4)).ok);
  CHECK_THROWS_AS(solve_even_triple(3, 3, 4), OutOfRange);
  CHECK_THROWS_AS(solve_odd_with_even(2, 3, 6), OutOfRange);
  CHECK_THROWS_AS(solve_c_even(2, 3, 6), OutOfRange);
}

TEST_CASE("odd-with-even route puts the transposition on the even element") {
  {
    const auto r = solve(3, 4, 5);
    CHECK(r.tag.variant == SolveCase::AugmentedNearCycle);
    CHECK(r.x.degree() == 6);
    CHECK(cycle_type(r.z) == CycleType({5, 1}, 6));
    CHECK(r.exceptional == TranspositionHolder::Y);  // b = 4 is the even order
  }
  {
    const auto r = solve(2, 3, 3);
    CHECK(cycle_type(r.x) == CycleType({2, 2}, 4));
    CHECK(cycle_type(r.z) == CycleType({3, 1}, 4));
    CHECK(r.exceptional == TranspositionHolder::None);  // the extra 2-cycle is an a-cycle
  }
}

TEST_CASE("solve sweep verifies structurally and stays within degree c+2") {
  for (int c = 2; c <= 30; ++c)
    for (int b = 2; b <= c; ++b)
      for (int a = 2; a <= b; ++a) {
        const auto r = solve(a, b, c);
        const auto report = verify_structure(r);
        if (!report.ok) {
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CAPTURE(report.violations.front());
        }
        REQUIRE(report.ok);
        REQUIRE(r.x.degree() <= c + 2);
        REQUIRE((index(r.x) + index(r.y) + index(r.z)) % 2 == 0);
      }
}

TEST_CASE("verify_structure flags corrupted results") {
  auto r = solve(3, 5, 8);
  SUBCASE("tampered z") {
    r.z = compose(r.z, Permutation::transposition(10, 1, 7));
    const auto report = verify_structure(r);
    CHECK_FALSE(report.ok);
  }
  SUBCASE("swapped x and y") {
    std::swap(r.x, r.y);
    const auto report = verify_structure(r);
    CHECK_FALSE(report.ok);  // order(x) != 3 now
  }
  SUBCASE("wrong exceptional holder") {
    r.exceptional = TranspositionHolder::X;
    CHECK_FALSE(verify_structure(r).ok);
  }
}

TEST_CASE("slot restoration covers every arrangement") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int a = 2 + static_cast<int>(rng() % 10);
    int b = 2 + static_cast<int>(rng() % 10);
    int c = 2 + static_cast<int>(rng() % 10);
    std::array<int, 3> sorted{a, b, c};
    std::sort(sorted.begin(), sorted.end());
    const auto r = solve(sorted[0], sorted[1], sorted[2]);
    std::array<int, 3> desired = sorted;
    do {
      const auto t = restore_slots(r, desired);
      CHECK(order(t[0]) == static_cast<std::uint64_t>(desired[0]));
      CHECK(order(t[1]) == static_cast<std::uint64_t>(desired[1]));
      CHECK(order(t[2]) == static_cast<std::uint64_t>(desired[2]));
      CHECK(compose(compose(t[0], t[1]), t[2]).is_identity());
    } while (std::next_permutation(desired.begin(), desired.end()));
  }
  CHECK_THROWS_AS(restore_slots(solve(2, 3, 4), {2, 3, 5}), OutOfRange);
}

TEST_CASE("solver degree is consistent with the exhaustive minimum") {
  SearchBudget budget;
  budget.max_degree = 8;
  for (int c = 2; c <= 5; ++c)
    for (int b = 2; b <= c; ++b)
      for (int a = 2; a <= b; ++a) {
        const int min_n = min_degree(a, b, c, budget);
        const auto r = solve(a, b, c);
        CHECK(r.x.degree() >= min_n);
        CHECK(r.x.degree() <= c + 2);
      }
}

TEST_CASE("survey confirms every cell") {
  const auto smallest = survey(4);  // only (2,2,2) fits below n-2
  CHECK(smallest.total_cells == 1);
  CHECK(smallest.distinct_triples == 1);
  CHECK(smallest.all_confirmed());

  const auto report = survey(6);
  CHECK(report.total_cells == 36);  // 1 + 8 + 27 cells for n = 4, 5, 6
  CHECK(report.confirmed_cells == 36);
  CHECK(report.distinct_triples == 10);
  CHECK(report.failed_triples.empty());
  CHECK(report.all_confirmed());

  const auto threaded = survey(9, 2);
  CHECK(threaded.all_confirmed());
  CHECK(threaded.total_cells == 1 + 8 + 27 + 64 + 125 + 216);

  // Worker count changes scheduling only, never the outcome.
  const auto single = survey(9, 1);
  CHECK(single.total_cells == threaded.total_cells);
  CHECK(single.confirmed_cells == threaded.confirmed_cells);
  CHECK(single.failed_triples == threaded.failed_triples);
  CHECK(single.distinct_triples == threaded.distinct_triples);

  CHECK_THROWS_AS(survey(3), OutOfRange);
}
