#pragma once

#include <cstdint>
#include <optional>

#include "permprod/classes.hpp"
#include "permprod/permutation.hpp"

namespace permprod {

// Limits for the exhaustive searches.  Runs that would overstep any limit
// raise BudgetExceeded instead of returning a silently weaker answer; an
// absence result is only ever reported after a complete enumeration.
struct SearchBudget {
  int max_degree = 10;
  std::uint64_t max_nodes = 200'000'000;  // candidate elements visited
  double time_cap_seconds = 600.0;
};

struct TripleWitness {
  Permutation x;
  Permutation y;
  Permutation z;  // (xy)^-1
};

// Brute-force search for x, y, z in S_n with orders a, b, c and xyz = 1.
// x runs over one representative per order-a cycle type (conjugating a
// witness normalizes x, so this loses nothing); y runs over every order-b
// element.  Returns a witness or, after complete enumeration, nullopt.
std::optional<TripleWitness> exhaustive_triple_search(int n, int a, int b, int c,
                                                      const SearchBudget& budget = {});

// Least n such that S_n contains a product-one triple with orders (a, b, c).
int min_degree(int a, int b, int c, const SearchBudget& budget = {});

struct ClassTripleWitness {
  Permutation alpha;
  Permutation beta;
  Permutation gamma;  // (alpha beta)^-1, in c3
};

// Witness for alpha in c1, beta in c2 with (alpha beta)^-1 in c3, or
// definitive absence.  With require_transitive, only witnesses whose pair
// generates a transitive group count.
std::optional<ClassTripleWitness> class_triple_realizable(const ClassSpec& c1,
                                                          const ClassSpec& c2,
                                                          const ClassSpec& c3,
                                                          bool require_transitive = false,
                                                          const SearchBudget& budget = {});

}  // namespace permprod
