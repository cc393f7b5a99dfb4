#pragma once

#include <span>
#include <string>
#include <vector>

#include "permprod/chains.hpp"
#include "permprod/permutation.hpp"

namespace permprod {

// Branch data: one prescribed local order per branch point.  The point
// labels are opaque tokens; only their count and distinctness matter.
struct BranchSpec {
  BranchSpec(std::vector<int> orders_in, std::vector<std::string> branch_points_in);

  std::vector<int> orders;                  // ascending, all >= 2, length r >= 3
  std::vector<std::string> branch_points;   // r distinct labels
};

struct OrbitGenus {
  std::vector<int> orbit;  // ascending points
  long long genus = 0;
};

// Genus of each orbit of the group generated by a product-one tuple, from
// the index sums restricted to the orbit: g = -(m-1) + sum(ind)/2 for an
// orbit of size m.  ProductNotIdentity when the tuple does not multiply to
// the identity; NonIntegralGenus when a value comes out negative or
// half-integral (a broken tuple).
std::vector<OrbitGenus> genus(std::span<const Permutation> tuple);

enum class Necessity { Admissible, ParityFail, GenusFail };

const char* to_string(Necessity n);

// Necessary conditions for a transitive product-one tuple drawn from the
// given classes: index parity (the sign of the product) and the genus lower
// bound sum(ind) >= 2(n-1).
Necessity necessity_check(std::span<const ClassSpec> classes);

struct CoverReport {
  int degree = 0;
  ChainResult tuple;
  // One entry per branch point: its label and the cycle-length multiset of
  // the corresponding permutation, descending.
  std::vector<std::pair<std::string, std::vector<int>>> per_point_ramification;
  std::vector<OrbitGenus> genus_per_orbit;
};

// Builds a monodromy tuple for the branch data via the chain builder and
// reports per-point ramification and per-orbit genus.  Every ramification
// multiset consists of values in {1, 2, order_i} only.
CoverReport branch_data_report(const BranchSpec& spec);

std::string to_text(const CoverReport& report);
std::string to_json_string(const CoverReport& report);

}  // namespace permprod
