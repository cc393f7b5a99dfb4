#pragma once

#include <cstdint>
#include <optional>

#include "permprod/classes.hpp"
#include "permprod/permutation.hpp"

namespace permprod {

enum class RealizeVariant { FullCycle, NearCycle };

struct RealizationRequest {
  ClassSpec c1;
  ClassSpec c2;
  RealizeVariant variant = RealizeVariant::FullCycle;
  std::uint64_t seed = 0;
  // 0 selects the default of 100 * n * log(n) random draws before the
  // deterministic fallback takes over.
  int retry_cap = 0;
};

enum class WitnessMethod { Randomized, Exhaustive };

struct RealizationWitness {
  Permutation alpha;
  Permutation beta;
  Permutation product;
  WitnessMethod method = WitnessMethod::Randomized;
  // NearCycle only: the unique fixed point of the product.
  int fixed_point = 0;
};

// alpha in c1, beta in c2, compose(alpha, beta) = (1,2,...,n).
// Requires ind(c1)+ind(c2) >= n-1 and == n-1 (mod 2); the condition is also
// necessary, so its failure raises ParityViolation.
RealizationWitness realize_full_cycle(const RealizationRequest& req);

// alpha in c1, beta in c2, compose(alpha, beta) = (1,...,n-1) fixing n, with
// <alpha, beta> transitive.  Requires n >= 3, ind(c1)+ind(c2) >= n and == n
// (mod 2), and that c1, c2 are not both the class of fixed point free
// involutions (FixedPointFreeInvolutions otherwise).
RealizationWitness realize_near_cycle(const RealizationRequest& req);

// Conjugates alpha, beta, product by the transposition swapping the product's
// fixed point with `target` (identity when they coincide).
RealizationWitness relabel_fixed_point(const RealizationWitness& w, int target);

namespace detail {

// The individual strategies behind the realizers, exposed for direct testing.
// Both search for alpha in `lambda`, beta in `mu` with the product equal to
// the canonical full cycle (near = false) or the canonical near-cycle plus
// transitivity (near = true), without checking the admissibility conditions.

std::optional<std::pair<Permutation, Permutation>> random_realize(const CycleType& lambda,
                                                                  const CycleType& mu, int n,
                                                                  bool near, std::uint64_t seed,
                                                                  int draws);

// Complete: returns a witness exactly when one exists.
std::optional<std::pair<Permutation, Permutation>> backtrack_realize(const CycleType& lambda,
                                                                     const CycleType& mu, int n,
                                                                     bool near);

// The deterministic constructive path (tree plus merges, spliced for the
// near-cycle variant); total on admissible input.
std::optional<std::pair<Permutation, Permutation>> construct_realize(const CycleType& lambda,
                                                                     const CycleType& mu, int n,
                                                                     bool near);

}  // namespace detail

}  // namespace permprod
