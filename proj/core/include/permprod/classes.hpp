#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "permprod/permutation.hpp"

namespace permprod {

// All partitions of n in descending part order, as cycle types of S_n.
std::vector<CycleType> all_cycle_types(int n);

// Cycle types of S_n whose element order equals `target_order`.
std::vector<CycleType> cycle_types_with_order(int n, std::uint64_t target_order);

// Canonical representative: parts filled with consecutive points, largest
// part first, so e.g. {3,2,1} in S_6 gives (1,2,3)(4,5).
Permutation class_representative(const CycleType& type);

// Uniformly distributed element of the conjugacy class.
Permutation random_class_element(const CycleType& type, std::mt19937_64& rng);

// Number of elements in the class: n! / prod(l^m_l * m_l!).  Throws Error on
// 64-bit overflow.
std::uint64_t class_size(const CycleType& type);

// Visits every element of the class exactly once until the visitor returns
// false.  Returns true when the enumeration ran to completion.
bool for_each_class_element(const CycleType& type,
                            const std::function<bool(const Permutation&)>& visit);

// The class of floor(n/k) k-cycles and fixed points otherwise, in S_n.
CycleType uniform_cycle_type(int n, int k);

}  // namespace permprod
