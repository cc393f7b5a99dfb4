#pragma once

#include <vector>

#include "permprod/permutation.hpp"

namespace permprod {

// One node of the recursion record: which slots of the original order list
// the node covers, plus the prime head used to halve them (0 at leaves).
struct SplitNode {
  std::vector<int> slots;  // indices into the original order list; -1 = head
  int prime = 0;
  std::vector<SplitNode> children;  // empty, or exactly two

  bool operator==(const SplitNode& other) const {
    return slots == other.slots && prime == other.prime && children == other.children;
  }
};

struct ChainResult {
  std::vector<Permutation> elements;  // common degree max(orders)+2
  std::vector<int> orders;
  SplitNode split_tree;

  int degree() const { return elements.empty() ? 0 : elements.front().degree(); }
};

// Smallest prime p with n/2 < p <= n-2.  Exists for n = 5 and all n >= 7;
// n = 4 and n = 6 raise NoSuchPrime (their chains use special handling).
int bertrand_prime(int n);

// Conjugates the whole tuple by one permutation so its product becomes
// target^-1.  Requires the current product and target^-1 to share a cycle
// type (TypeMismatch otherwise); orders and cycle types are preserved.
std::vector<Permutation> align_to_inverse(const std::vector<Permutation>& tuple,
                                          const Permutation& target);

// Product-one tuple of length r >= 3 with the prescribed orders (all >= 2) in
// S_{max(orders)+2}.  Length-3 lists go to the triple solver; longer lists
// split around a prime head whose order forces a p-cycle product on each
// half, so the halves can be aligned inverse to each other and concatenated.
ChainResult extend(const std::vector<int>& orders);

// Rebuilds a chain following a previously recorded split tree; the result of
// extend replays to itself.
ChainResult replay(const SplitNode& tree, const std::vector<int>& orders);

}  // namespace permprod
