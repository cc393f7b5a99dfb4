// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Runtime limits are asserted, not just reported.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "permprod/chains.hpp"
#include "permprod/classes.hpp"
#include "permprod/cycle_io.hpp"
#include "permprod/realize.hpp"
#include "permprod/hurwitz.hpp"
#include "permprod/oracle.hpp"
#include "permprod/solver.hpp"

using namespace permprod;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Every order triple with 2 <= a <= b <= c <= 60 solves, verifies
//    structurally, and stays within degree c+2, in under 120 seconds.
//    (Also feeds criterion 8's parity check.)
bool even_index_sums_in_sweep = true;

void criterion_1() {
  const auto t0 = Clock::now();
  long long count = 0, bad = 0;
  int routes_seen[10] = {};
  for (int c = 2; c <= 60; ++c)
    for (int b = 2; b <= c; ++b)
      for (int a = 2; a <= b; ++a) {
        ++count;
        try {
          const SolveResult r = solve(a, b, c);
          if (!verify_structure(r).ok || r.x.degree() > c + 2) ++bad;
          if ((index(r.x) + index(r.y) + index(r.z)) % 2 != 0)
            even_index_sums_in_sweep = false;
          ++routes_seen[static_cast<int>(r.tag.variant)];
        } catch (const std::exception&) {
          ++bad;
        }
      }
  int routes = 0;
  for (int seen : routes_seen) routes += seen > 0;
  const double sec = seconds_since(t0);
  report(1, bad == 0 && routes == 10 && sec < 120.0,
         "solve sweep 2<=a<=b<=c<=60: " + std::to_string(count) + " triples, " +
             std::to_string(bad) + " failures, all " + std::to_string(routes) +
             "/10 routes exercised, " + std::to_string(sec) + " s (limit 120)");
}

// 2. The three printed constructions come out bit-exactly.
void criterion_2() {
  bool ok = true;
  {
    const auto r = solve(3, 5, 8);
    ok = ok && r.x == parse_cycles("(1,2,3)(4,5,6)(7,8,9)@10") &&
         r.y == parse_cycles("(1,4,8,9,10)") &&
         compose(r.x, r.y) == parse_cycles("(1,2,3,4,5,6,8,10)(7,9)") &&
         r.z == compose(r.x, r.y).inverse();
  }
  {
    const auto r = solve(4, 4, 4);
    ok = ok && r.x == parse_cycles("(1,2,3,4)@6") && r.y == parse_cycles("(3,1,5,6)") &&
         compose(r.x, r.y) == parse_cycles("(3,4,5,6)(1,2)");
  }
  {
    const auto r = solve(3, 3, 4);
    ok = ok && r.x == parse_cycles("(1,2,3)(4,5,6)") && r.y == parse_cycles("(1,6,4)@6") &&
         compose(r.x, r.y) == parse_cycles("(1,2,3,6)(4,5)");
  }
  report(2, ok, "printed pairs for (3,5,8), (4,4,4), (3,3,4) reproduced exactly");
}

// 3. Sharpness of degree c+2 on the family (2^k-1, 2^k-1, 2^k) at k = 2, 3.
void criterion_3() {
  bool ok = true;
  std::string detail;
  try {
    const int m1 = min_degree(3, 3, 4);
    const int m2 = min_degree(7, 7, 8);
    // min_degree certifies absence below by complete per-degree enumeration;
    // spot-confirm the largest absent degrees again.
    const bool absent = !exhaustive_triple_search(5, 3, 3, 4).has_value() &&
                        !exhaustive_triple_search(8, 7, 7, 8).has_value() &&
                        !exhaustive_triple_search(9, 7, 7, 8).has_value();
    ok = m1 == 6 && m2 == 10 && absent;
    detail = "min_degree(3,3,4)=" + std::to_string(m1) + ", min_degree(7,7,8)=" +
             std::to_string(m2) + ", absence certified below";
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(3, ok, detail);
}

// 4. Realizer success coincides with exhaustive realizability for every
//    class pair up to degree 7, and failures carry only the two sanctioned
//    reasons.
void criterion_4() {
  bool ok = true;
  long long pairs = 0;
  std::string first_bad;
  SearchBudget budget;
  budget.max_degree = 7;
  for (int n = 2; n <= 7 && ok; ++n) {
    const auto types = all_cycle_types(n);
    const ClassSpec full(n, CycleType({n}, n));
    const ClassSpec near(n, n >= 2 ? CycleType(std::vector<int>{n - 1, 1}, n)
                                   : CycleType({1}, 1));
    for (const auto& t1 : types) {
      for (const auto& t2 : types) {
        ++pairs;
        const ClassSpec c1(n, t1), c2(n, t2);
        {
          bool realized = false;
          bool sanctioned = false;
          try {
            const auto w = realize_full_cycle({c1, c2, RealizeVariant::FullCycle, 5, 0});
            realized = cycle_type(w.alpha) == t1 && cycle_type(w.beta) == t2 &&
                       compose(w.alpha, w.beta) == w.product;
          } catch (const ParityViolation&) {
            sanctioned = true;
          }
          const bool oracle = class_triple_realizable(c1, c2, full, false, budget).has_value();
          if (realized != oracle || (!realized && !sanctioned)) {
            ok = false;
            first_bad = "full-cycle mismatch at n=" + std::to_string(n) + " " +
                        t1.to_string() + " x " + t2.to_string();
          }
        }
        if (n >= 3) {
          bool realized = false;
          bool sanctioned = false;
          try {
            const auto w = realize_near_cycle({c1, c2, RealizeVariant::NearCycle, 5, 0});
            const Permutation pair[2] = {w.alpha, w.beta};
            realized = cycle_type(w.alpha) == t1 && cycle_type(w.beta) == t2 &&
                       is_transitive(pair);
          } catch (const ParityViolation&) {
            sanctioned = true;
          } catch (const FixedPointFreeInvolutions&) {
            sanctioned = true;
          }
          const bool oracle = class_triple_realizable(c1, c2, near, true, budget).has_value();
          if (realized != oracle || (!realized && !sanctioned)) {
            ok = false;
            first_bad = "near-cycle mismatch at n=" + std::to_string(n) + " " +
                        t1.to_string() + " x " + t2.to_string();
          }
        }
      }
    }
  }
  report(4, ok,
         ok ? "realizer match with the oracle over " + std::to_string(pairs) +
                  " class pairs, n <= 7"
            : first_bad);
}

// 5. Index bounds for uniform classes with the full equality
//    characterization, all n <= 300.
void criterion_5() {
  bool ok = true;
  for (int n = 2; n <= 300 && ok; ++n) {
    for (int k = 2; k <= n && ok; ++k) {
      const int ind = uniform_class_index(n, k);
      if (2 * ind < n - 1) ok = false;
      const bool tight_odd = 2 * ind == n - 1;
      const bool expect_odd = n % 2 == 1 && (k == 2 || 2 * k == n + 1);
      if (tight_odd != expect_odd) ok = false;
      if (n % 2 == 0) {
        if (2 * ind < n) ok = false;
        const bool tight = 2 * ind == n;
        const bool expect = k == 2 || 2 * (k - 1) == n || (n == 8 && k == 3);
        if (tight != expect) ok = false;
      }
    }
  }
  report(5, ok, "uniform-class index bounds and equality cases for all n <= 300");
}

// 6. 500 seeded random order lists plus the degree-4 and degree-6 specials
//    all produce verified chains at degree max+2, in under 30 seconds.
bool even_index_sums_in_chains = true;

void criterion_6() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(0x700dull);
  long long bad = 0;
  auto check = [&](const std::vector<int>& orders) {
    try {
      const ChainResult chain = extend(orders);
      Permutation product = chain.elements.front();
      long long index_sum = index(chain.elements.front());
      for (std::size_t i = 1; i < chain.elements.size(); ++i) {
        product = compose(product, chain.elements[i]);
        index_sum += index(chain.elements[i]);
      }
      bool good = product.is_identity();
      for (std::size_t i = 0; i < orders.size(); ++i)
        good = good && order(chain.elements[i]) == static_cast<std::uint64_t>(orders[i]);
      good = good &&
             chain.degree() == *std::max_element(orders.begin(), orders.end()) + 2;
      if (index_sum % 2 != 0) even_index_sums_in_chains = false;
      if (!good) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  };
  int runs = 0;
  for (; runs < 500; ++runs) {
    const int r = 3 + static_cast<int>(rng() % 6);
    std::vector<int> orders;
    for (int i = 0; i < r; ++i) orders.push_back(2 + static_cast<int>(rng() % 24));
    check(orders);
  }
  // Dedicated degree-4 cases (all orders 2) and degree-6 cases (orders <= 4).
  for (int r = 3; r <= 9; ++r) {
    check(std::vector<int>(r, 2));
    ++runs;
  }
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 3 + static_cast<int>(rng() % 5);
    std::vector<int> orders{4};  // pin the maximum so the degree is 6
    for (int i = 1; i < r; ++i) orders.push_back(2 + static_cast<int>(rng() % 3));
    check(orders);
    ++runs;
  }
  const double sec = seconds_since(t0);
  report(6, bad == 0 && sec < 30.0,
         std::to_string(runs) + " order lists chained and verified, " + std::to_string(bad) +
             " failures, " + std::to_string(sec) + " s (limit 30)");
}

// 7. The survey reproduces the degree-50 verification with zero failures in
//    under five minutes.
void criterion_7() {
  const auto t0 = Clock::now();
  bool ok = false;
  std::string detail;
  try {
    const SurveyReport rep = survey(50, 2);
    const double sec = seconds_since(t0);
    ok = rep.all_confirmed() && sec < 300.0;
    detail = "survey to n=50: " + std::to_string(rep.confirmed_cells) + "/" +
             std::to_string(rep.total_cells) + " cells, " +
             std::to_string(rep.failed_triples.size()) + " failed triples, " +
             std::to_string(sec) + " s (limit 300)";
  } catch (const std::exception& e) {
    detail = e.what();
  }
  report(7, ok, detail);
}

// 8. Genus sanity: even index sums everywhere, the three worked examples have
//    genus exactly 0, and every transitive class-triple witness up to degree
//    8 has a non-negative integral genus.
void criterion_8() {
  bool ok = even_index_sums_in_sweep && even_index_sums_in_chains;
  std::string detail = ok ? "" : "odd index sum seen in earlier criteria; ";

  // Worked examples.
  {
    const Permutation t = parse_cycles("(1,2)");
    const Permutation pair[2] = {t, t};
    ok = ok && genus(pair).front().genus == 0;
    const auto r1 = solve(3, 5, 8);
    const Permutation t1[3] = {r1.x, r1.y, r1.z};
    const auto g1 = genus(t1);
    ok = ok && g1.size() == 1 && g1.front().genus == 0;
    const auto r2 = solve(4, 4, 4);
    const Permutation t2[3] = {r2.x, r2.y, r2.z};
    const auto g2 = genus(t2);
    ok = ok && g2.size() == 1 && g2.front().genus == 0;
  }

  // Exhaustive spot check: every witness triple the class oracle can produce
  // on up to 8 points, restricted to transitive pairs.
  long long checked = 0;
  try {
    SearchBudget budget;
    budget.max_degree = 8;
    for (int n = 2; n <= 8; ++n) {
      const auto types = all_cycle_types(n);
      for (const auto& t1 : types) {
        const Permutation alpha = class_representative(t1);
        for (const auto& t2 : types) {
          for_each_class_element(t2, [&](const Permutation& beta) {
            const Permutation pair[2] = {alpha, beta};
            if (!is_transitive(pair)) return true;
            const Permutation triple[3] = {alpha, beta, compose(alpha, beta).inverse()};
            const auto result = genus(triple);  // throws on any defect
            if (result.size() != 1 || result.front().genus < 0)
              throw Error("bad genus");
            ++checked;
            return true;
          });
        }
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail += e.what();
  }
  report(8, ok,
         detail + "index parity, worked examples at genus 0, " + std::to_string(checked) +
             " transitive product-one triples with integral genus >= 0");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
