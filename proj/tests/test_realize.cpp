#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permprod/cycle_io.hpp"
#include "permprod/realize.hpp"
#include "permprod/oracle.hpp"

using namespace permprod;

namespace {

RealizationRequest make_request(int n, std::vector<int> c1, std::vector<int> c2,
                                RealizeVariant variant, std::uint64_t seed = 1) {
  return RealizationRequest{ClassSpec(n, CycleType(std::move(c1), n)),
                            ClassSpec(n, CycleType(std::move(c2), n)), variant, seed, 0};
}

void check_witness(const RealizationWitness& w, const RealizationRequest& req) {
  CHECK(cycle_type(w.alpha) == req.c1.cycle_type);
  CHECK(cycle_type(w.beta) == req.c2.cycle_type);
  CHECK(compose(w.alpha, w.beta) == w.product);
  if (req.variant == RealizeVariant::FullCycle) {
    CHECK(cycle_type(w.product).parts().size() == 1);
  } else {
    const int n = req.c1.degree;
    CHECK(w.product.apply(n) == n);
    CHECK(cycle_type(w.product) == CycleType([&] {
            std::vector<int> parts{n - 1, 1};
            return parts;
          }(),
                                              n));
    const Permutation pair[2] = {w.alpha, w.beta};
    CHECK(is_transitive(pair));
    CHECK(w.fixed_point == n);
  }
}

}  // namespace

TEST_CASE("full-cycle realizations for small classes") {
  {
    auto req = make_request(3, {2, 1}, {2, 1}, RealizeVariant::FullCycle);
    auto w = realize_full_cycle(req);
    check_witness(w, req);
    CHECK(w.product == parse_cycles("(1,2,3)"));
  }
  {
    auto req = make_request(4, {2, 2}, {2, 1, 1}, RealizeVariant::FullCycle);
    auto w = realize_full_cycle(req);
    check_witness(w, req);
    CHECK(w.product == parse_cycles("(1,2,3,4)"));
  }
  {
    // Index sum 4 against n-1 = 3: wrong parity.
    auto req = make_request(4, {3, 1}, {3, 1}, RealizeVariant::FullCycle);
    CHECK_THROWS_AS(realize_full_cycle(req), ParityViolation);
  }
  {
    // Index sum too small is the same violation (the condition is sharp).
    auto req = make_request(5, {2, 1, 1, 1}, {2, 1, 1, 1}, RealizeVariant::FullCycle);
    CHECK_THROWS_AS(realize_full_cycle(req), ParityViolation);
  }
  {
    auto req = make_request(1, {1}, {1}, RealizeVariant::FullCycle);
    auto w = realize_full_cycle(req);
    CHECK(w.alpha.is_identity());
  }
}

TEST_CASE("near-cycle realizations") {
  {
    auto req = make_request(3, {3}, {2, 1}, RealizeVariant::NearCycle);
    auto w = realize_near_cycle(req);
    check_witness(w, req);
    CHECK(w.product == parse_cycles("(1,2)@3"));
  }
  {
    auto req = make_request(4, {2, 2}, {2, 2}, RealizeVariant::NearCycle);
    CHECK_THROWS_AS(realize_near_cycle(req), FixedPointFreeInvolutions);
  }
  {
    auto req = make_request(5, {5}, {2, 1, 1, 1}, RealizeVariant::NearCycle);
    auto w = realize_near_cycle(req);
    check_witness(w, req);
    CHECK(w.product == parse_cycles("(1,2,3,4)@5"));
  }
  {
    auto req = make_request(4, {3, 1}, {2, 1, 1}, RealizeVariant::NearCycle);
    CHECK_THROWS_AS(realize_near_cycle(req), ParityViolation);
  }
  {
    auto req = make_request(2, {2}, {2}, RealizeVariant::NearCycle);
    CHECK_THROWS_AS(realize_near_cycle(req), OutOfRange);
  }
}

TEST_CASE("relabeling the product's fixed point") {
  auto req = make_request(5, {5}, {2, 1, 1, 1}, RealizeVariant::NearCycle);
  const auto w = realize_near_cycle(req);
  REQUIRE(w.fixed_point == 5);

  const auto same = relabel_fixed_point(w, 5);
  CHECK(same.alpha == w.alpha);
  CHECK(same.product == w.product);

  const auto moved = relabel_fixed_point(w, 2);
  CHECK(moved.product.apply(2) == 2);
  CHECK(moved.fixed_point == 2);
  CHECK(cycle_type(moved.alpha) == cycle_type(w.alpha));
  CHECK(cycle_type(moved.beta) == cycle_type(w.beta));
  CHECK(compose(moved.alpha, moved.beta) == moved.product);

  CHECK_THROWS_AS(relabel_fixed_point(w, 9), OutOfRange);
}

TEST_CASE("identical requests give identical witnesses") {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    auto req = make_request(12, {3, 3, 3, 1, 1, 1}, {4, 4, 2, 1, 1}, RealizeVariant::FullCycle,
                            seed);
    const auto w1 = realize_full_cycle(req);
    const auto w2 = realize_full_cycle(req);
    CHECK(w1.alpha == w2.alpha);
    CHECK(w1.beta == w2.beta);
    CHECK(w1.method == w2.method);
  }
}

TEST_CASE("each strategy stands on its own") {
  // The backtracker is complete: across every class pair up to degree 5 it
  // finds a canonical-product witness exactly when the oracle does, for both
  // targets, with no admissibility pre-filtering.
  SearchBudget budget;
  budget.max_degree = 5;
  for (int n = 2; n <= 5; ++n) {
    const auto types = all_cycle_types(n);
    const ClassSpec full(n, CycleType({n}, n));
    const ClassSpec near(n, CycleType(std::vector<int>{std::max(n - 1, 1), 1}, n));
    for (const auto& t1 : types) {
      for (const auto& t2 : types) {
        const ClassSpec c1(n, t1), c2(n, t2);
        {
          const auto hit = detail::backtrack_realize(t1, t2, n, false);
          const bool oracle = class_triple_realizable(c1, c2, full, false, budget).has_value();
          CHECK(hit.has_value() == oracle);
          if (hit) {
            CHECK(cycle_type(hit->first) == t1);
            CHECK(cycle_type(hit->second) == t2);
            CHECK(cycle_type(compose(hit->first, hit->second)).parts().size() == 1);
          }
        }
        if (n >= 3) {
          const auto hit = detail::backtrack_realize(t1, t2, n, true);
          const bool oracle = class_triple_realizable(c1, c2, near, true, budget).has_value();
          CHECK(hit.has_value() == oracle);
        }
      }
    }
  }

  // The seeded random phase finds witnesses for roomy classes and only ever
  // returns valid ones.
  {
    const CycleType lambda({3, 3, 2, 1}, 9);
    const CycleType mu({4, 3, 1, 1}, 9);
    const auto hit = detail::random_realize(lambda, mu, 9, false, 21, 50000);
    REQUIRE(hit.has_value());
    CHECK(cycle_type(hit->first) == lambda);
    CHECK(cycle_type(hit->second) == mu);
    CHECK(compose(hit->first, hit->second) == parse_cycles("(1,2,3,4,5,6,7,8,9)"));
  }
  {
    const CycleType lambda({5, 2, 1}, 8);
    const CycleType mu({5, 2, 1}, 8);
    const auto hit = detail::random_realize(lambda, mu, 8, true, 4, 50000);
    REQUIRE(hit.has_value());
    const Permutation pair[2] = {hit->first, hit->second};
    CHECK(is_transitive(pair));
    CHECK(compose(hit->first, hit->second) == parse_cycles("(1,2,3,4,5,6,7)@8"));
  }

  // The constructive route alone covers every admissible pair up to degree 6.
  for (int n = 2; n <= 6; ++n) {
    const auto types = all_cycle_types(n);
    for (const auto& t1 : types) {
      for (const auto& t2 : types) {
        const int sum = t1.index() + t2.index();
        if (sum >= n - 1 && (sum - (n - 1)) % 2 == 0) {
          const auto hit = detail::construct_realize(t1, t2, n, false);
          REQUIRE(hit.has_value());
          CHECK(cycle_type(hit->first) == t1);
          CHECK(cycle_type(hit->second) == t2);
        }
        const bool fpf_pair =
            t1.is_fixed_point_free_involution() && t2.is_fixed_point_free_involution();
        if (n >= 3 && sum >= n && (sum - n) % 2 == 0 && !fpf_pair) {
          const auto hit = detail::construct_realize(t1, t2, n, true);
          REQUIRE(hit.has_value());
          const Permutation pair[2] = {hit->first, hit->second};
          CHECK(is_transitive(pair));
        }
      }
    }
  }
}

TEST_CASE("realizer agrees with the exhaustive oracle up to degree 5") {
  SearchBudget budget;
  budget.max_degree = 5;
  for (int n = 2; n <= 5; ++n) {
    const auto types = all_cycle_types(n);
    const ClassSpec full_cycle(n, CycleType({n}, n));
    std::vector<int> near_parts{n - 1, 1};
    const ClassSpec near_cycle(n, CycleType(near_parts, n));
    for (const auto& t1 : types) {
      for (const auto& t2 : types) {
        const ClassSpec c1(n, t1), c2(n, t2);
        // Full cycle: success must coincide with the oracle AND with the
        // index-sum condition itself (which is therefore also necessary).
        {
          bool realized = false;
          try {
            auto w = realize_full_cycle({c1, c2, RealizeVariant::FullCycle, 7, 0});
            check_witness(w, {c1, c2, RealizeVariant::FullCycle, 7, 0});
            realized = true;
          } catch (const ParityViolation&) {
          }
          const bool oracle_hit = class_triple_realizable(c1, c2, full_cycle, false, budget)
                                      .has_value();
          CHECK(realized == oracle_hit);
          const int sum = t1.index() + t2.index();
          const bool condition = sum >= n - 1 && (sum - (n - 1)) % 2 == 0;
          CHECK(realized == condition);
        }
        // Near cycle with transitivity.
        if (n >= 3) {
          bool realized = false;
          try {
            auto w = realize_near_cycle({c1, c2, RealizeVariant::NearCycle, 7, 0});
            check_witness(w, {c1, c2, RealizeVariant::NearCycle, 7, 0});
            realized = true;
          } catch (const ParityViolation&) {
          } catch (const FixedPointFreeInvolutions&) {
          }
          const bool oracle_hit = class_triple_realizable(c1, c2, near_cycle, true, budget)
                                      .has_value();
          CHECK(realized == oracle_hit);
        }
      }
    }
  }
}
