#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permprod/cycle_io.hpp"
#include "permprod/oracle.hpp"

using namespace permprod;

namespace {

void check_triple_witness(const TripleWitness& w, int a, int b, int c) {
  CHECK(order(w.x) == static_cast<std::uint64_t>(a));
  CHECK(order(w.y) == static_cast<std::uint64_t>(b));
  CHECK(order(w.z) == static_cast<std::uint64_t>(c));
  CHECK(compose(compose(w.x, w.y), w.z).is_identity());
}

}  // namespace

TEST_CASE("exhaustive triple search") {
  {
    const auto w = exhaustive_triple_search(3, 2, 2, 3);
    REQUIRE(w.has_value());
    check_triple_witness(*w, 2, 2, 3);
  }
  {
    const auto w = exhaustive_triple_search(4, 2, 2, 2);
    REQUIRE(w.has_value());
    check_triple_witness(*w, 2, 2, 2);
  }
  CHECK_FALSE(exhaustive_triple_search(5, 3, 3, 4).has_value());
  CHECK_FALSE(exhaustive_triple_search(3, 2, 2, 2).has_value());
}

TEST_CASE("minimal degrees") {
  CHECK(min_degree(2, 2, 2) == 4);
  CHECK(min_degree(2, 2, 3) == 3);
  CHECK(min_degree(3, 3, 4) == 6);
  CHECK(min_degree(2, 3, 4) == 4);
}

TEST_CASE("class-level realizability") {
  {
    const auto w = class_triple_realizable(ClassSpec(3, CycleType({2, 1}, 3)),
                                           ClassSpec(3, CycleType({2, 1}, 3)),
                                           ClassSpec(3, CycleType({3}, 3)));
    REQUIRE(w.has_value());
    CHECK(cycle_type(w->gamma) == CycleType({3}, 3));
    CHECK(compose(compose(w->alpha, w->beta), w->gamma).is_identity());
  }
  {
    // Parity forbids two 3-cycles multiplying to a 4-cycle.
    const auto w = class_triple_realizable(ClassSpec(4, CycleType({3, 1}, 4)),
                                           ClassSpec(4, CycleType({3, 1}, 4)),
                                           ClassSpec(4, CycleType({4}, 4)));
    CHECK_FALSE(w.has_value());
  }
  {
    // Two fixed-point-free involution classes never give a transitive
    // near-cycle product.
    const auto w = class_triple_realizable(ClassSpec(4, CycleType({2, 2}, 4)),
                                           ClassSpec(4, CycleType({2, 2}, 4)),
                                           ClassSpec(4, CycleType({3, 1}, 4)), true);
    CHECK_FALSE(w.has_value());
  }
  CHECK_THROWS_AS(class_triple_realizable(ClassSpec(3, CycleType({2, 1}, 3)),
                                          ClassSpec(4, CycleType({2, 1, 1}, 4)),
                                          ClassSpec(4, CycleType({4}, 4))),
                  DegreeMismatch);
}

TEST_CASE("conjugacy reduction loses no witnesses") {
  // Searching one representative per x-class finds a witness exactly when
  // the unreduced search over every x does: checked by double enumeration
  // over all class triples up to degree 5.
  for (int n = 2; n <= 5; ++n) {
    const auto types = all_cycle_types(n);
    for (const auto& t1 : types)
      for (const auto& t2 : types)
        for (const auto& t3 : types) {
          const bool reduced =
              class_triple_realizable(ClassSpec(n, t1), ClassSpec(n, t2), ClassSpec(n, t3))
                  .has_value();
          bool full = false;
          for_each_class_element(t1, [&](const Permutation& alpha) {
            bool stop = false;
            for_each_class_element(t2, [&](const Permutation& beta) {
              if (cycle_type(compose(alpha, beta)) == t3) {
                full = true;
                stop = true;
                return false;
              }
              return true;
            });
            return !stop;
          });
          CHECK(reduced == full);
        }
  }
}

TEST_CASE("budgets bound the search") {
  SearchBudget tiny;
  tiny.max_nodes = 10;
  CHECK_THROWS_AS(exhaustive_triple_search(7, 6, 6, 6, tiny), BudgetExceeded);

  SearchBudget small_degree;
  small_degree.max_degree = 5;
  CHECK_THROWS_AS(exhaustive_triple_search(6, 2, 2, 2, small_degree), BudgetExceeded);
  CHECK_THROWS_AS(min_degree(3, 3, 4, small_degree), BudgetExceeded);
}
