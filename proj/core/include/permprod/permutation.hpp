#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permprod/errors.hpp"

namespace permprod {

// A permutation of {1,...,n} with an explicit degree n.  Fixed points are
// represented, not implied: (1,2) in S_2 and (1,2) in S_5 are different
// values.  Immutable after construction.
class Permutation {
 public:
  // Identity of the given degree.
  explicit Permutation(int degree);

  static Permutation identity(int degree) { return Permutation(degree); }

  // images[i] is the image of point i+1; values are 1-based and must form a
  // bijection on {1,...,images.size()}.
  static Permutation from_images(std::vector<int> images);

  // Disjoint cycles over {1,...,degree}; points not mentioned are fixed.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  // Single cycle (points[0], points[1], ..., points.back()).
  static Permutation single_cycle(int degree, const std::vector<int>& points);

  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(img_.size()); }

  // Image of a 1-based point.
  int apply(int point) const { return img_[point - 1]; }

  bool is_identity() const;

  Permutation inverse() const;

  // Non-trivial cycles, each starting at its smallest element, ordered by
  // smallest element.
  std::vector<std::vector<int>> cycles() const;

  std::vector<int> fixed_points() const;

  // Points moved by the permutation, ascending.
  std::vector<int> support() const;

  const std::vector<int>& images() const { return img_; }

  bool operator==(const Permutation& other) const { return img_ == other.img_; }
  bool operator!=(const Permutation& other) const { return !(*this == other); }

 private:
  std::vector<int> img_;  // img_[i] = image of point i+1, 1-based values
};

// A partition of `degree` given by the cycle lengths of a permutation,
// including parts of size 1.  Parts are kept in descending order, so equal
// multisets compare equal.
class CycleType {
 public:
  CycleType(std::vector<int> parts, int degree);

  static CycleType of(const Permutation& p);

  const std::vector<int>& parts() const& { return parts_; }
  std::vector<int> parts() && { return std::move(parts_); }
  int degree() const { return degree_; }

  // degree minus the number of parts: the minimal number of transpositions
  // whose product has this type.
  int index() const { return degree_ - static_cast<int>(parts_.size()); }

  // lcm of the parts.  Throws Error on 64-bit overflow.
  std::uint64_t element_order() const;

  bool has_fixed_point() const { return !parts_.empty() && parts_.back() == 1; }

  // True when every part equals 2.
  bool is_fixed_point_free_involution() const;

  std::string to_string() const;  // e.g. "{8,2}" or "{3,1,1}"

  bool operator==(const CycleType& other) const {
    return degree_ == other.degree_ && parts_ == other.parts_;
  }
  bool operator!=(const CycleType& other) const { return !(*this == other); }

 private:
  std::vector<int> parts_;  // descending
  int degree_;
};

// A conjugacy class of S_degree, named by its cycle type.
struct ClassSpec {
  ClassSpec(int degree, CycleType type);

  int degree;
  CycleType cycle_type;

  bool operator==(const ClassSpec& other) const {
    return degree == other.degree && cycle_type == other.cycle_type;
  }
};

// compose(p, q) applies p first, then q: i -> q(p(i)).  All products in this
// library use this convention.
Permutation compose(const Permutation& p, const Permutation& q);

// g^-1 p g.  Maps the cycle (a,b,...) of p to (g(a),g(b),...).
Permutation conjugate(const Permutation& p, const Permutation& g);

// Least m >= 1 with p^m = identity; the lcm of the cycle lengths.
std::uint64_t order(const Permutation& p);

// degree minus the number of disjoint cycles, fixed points included.
int index(const Permutation& p);

CycleType cycle_type(const Permutation& p);

// Orbits of the group generated by the given permutations (all of equal
// degree), as a partition of {1,...,n} into ascending point lists, ordered by
// smallest element.
std::vector<std::vector<int>> orbits(std::span<const Permutation> perms);

bool is_transitive(std::span<const Permutation> perms);

// Index of a permutation consisting of floor(n/k) k-cycles and fixed points:
// floor(n/k) * (k-1).  Requires 2 <= k <= n.
int uniform_class_index(int n, int k);

// Same mapping with points degree+1..m fixed.
Permutation embed(const Permutation& p, int m);

enum class AttachSide { Left, Right };

// compose(cycle, p) (Left) or compose(p, cycle) (Right), where the given
// points form a cycle sharing at most one point with supp(p).  Throws
// SupportOverlap when two or more points are shared.  When exactly one point
// is shared and it lies on a single cycle of p, that cycle grows by
// (cycle length - 1).
Permutation attach_cycle(const Permutation& p, const std::vector<int>& cycle,
                         AttachSide side);

}  // namespace permprod
