#include "permprod/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace permprod {

namespace {

void check_degree(int degree) {
  if (degree < 1) throw OutOfRange("degree must be >= 1, got " + std::to_string(degree));
}

void check_point(int point, int degree) {
  if (point < 1 || point > degree)
    throw OutOfRange("point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
}

}  // namespace

Permutation::Permutation(int degree) {
  check_degree(degree);
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  check_degree(n);
  std::vector<bool> seen(n, false);
  for (int v : images) {
    check_point(v, n);
    if (seen[v - 1]) throw OutOfRange("images are not a bijection: " + std::to_string(v) + " repeats");
    seen[v - 1] = true;
  }
  Permutation p(n);
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  check_degree(degree);
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    if (cycle.empty()) continue;
    for (int pt : cycle) {
      check_point(pt, degree);
      if (used[pt - 1]) throw OutOfRange("cycles are not disjoint at point " + std::to_string(pt));
      used[pt - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.img_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
  }
  return p;
}

Permutation Permutation::single_cycle(int degree, const std::vector<int>& points) {
  return from_cycles(degree, {points});
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a == b) throw OutOfRange("transposition needs two distinct points");
  return from_cycles(degree, {{a, b}});
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i] - 1] = i + 1;
  return from_images(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(img_.size(), false);
  for (int s = 1; s <= degree(); ++s) {
    if (seen[s - 1] || img_[s - 1] == s) continue;
    std::vector<int> cycle;
    for (int x = s; !seen[x - 1]; x = img_[x - 1]) {
      seen[x - 1] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> result;
  for (int i = 1; i <= degree(); ++i)
    if (img_[i - 1] == i) result.push_back(i);
  return result;
}

std::vector<int> Permutation::support() const {
  std::vector<int> result;
  for (int i = 1; i <= degree(); ++i)
    if (img_[i - 1] != i) result.push_back(i);
  return result;
}

CycleType::CycleType(std::vector<int> parts, int degree) : parts_(std::move(parts)), degree_(degree) {
  check_degree(degree_);
  long long sum = 0;
  for (int part : parts_) {
    if (part < 1) throw OutOfRange("cycle type part must be >= 1");
    sum += part;
  }
  if (sum != degree_)
    throw OutOfRange("cycle type parts sum to " + std::to_string(sum) + ", degree is " +
                     std::to_string(degree_));
  std::sort(parts_.rbegin(), parts_.rend());
}

CycleType CycleType::of(const Permutation& p) {
  std::vector<int> parts;
  std::vector<bool> seen(p.degree(), false);
  for (int s = 1; s <= p.degree(); ++s) {
    if (seen[s - 1]) continue;
    int len = 0;
    for (int x = s; !seen[x - 1]; x = p.apply(x)) {
      seen[x - 1] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts), p.degree());
}

std::uint64_t CycleType::element_order() const {
  std::uint64_t result = 1;
  for (int part : parts_) {
    const std::uint64_t p = static_cast<std::uint64_t>(part);
    const std::uint64_t g = std::gcd(result, p);
    const std::uint64_t q = result / g;
    if (p != 0 && q > UINT64_MAX / p) throw Error("element order overflows 64 bits");
    result = q * p;
  }
  return result;
}

bool CycleType::is_fixed_point_free_involution() const {
  for (int part : parts_)
    if (part != 2) return false;
  return !parts_.empty();
}

std::string CycleType::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += '}';
  return s;
}

ClassSpec::ClassSpec(int degree_in, CycleType type) : degree(degree_in), cycle_type(std::move(type)) {
  if (cycle_type.degree() != degree)
    throw DegreeMismatch("class spec degree " + std::to_string(degree) + " != cycle type degree " +
                         std::to_string(cycle_type.degree()));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  std::vector<int> img(p.degree());
  for (int i = 1; i <= p.degree(); ++i) img[i - 1] = q.apply(p.apply(i));
  return Permutation::from_images(std::move(img));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  if (p.degree() != g.degree())
    throw DegreeMismatch("conjugate: degrees " + std::to_string(p.degree()) + " and " +
                         std::to_string(g.degree()));
  // (g^-1 p g)(g(x)) = g(p(x))
  std::vector<int> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x) img[g.apply(x) - 1] = g.apply(p.apply(x));
  return Permutation::from_images(std::move(img));
}

std::uint64_t order(const Permutation& p) { return CycleType::of(p).element_order(); }

int index(const Permutation& p) { return CycleType::of(p).index(); }

CycleType cycle_type(const Permutation& p) { return CycleType::of(p); }

std::vector<std::vector<int>> orbits(std::span<const Permutation> perms) {
  if (perms.empty()) throw OutOfRange("orbits: need at least one permutation");
  const int n = perms.front().degree();
  for (const auto& p : perms)
    if (p.degree() != n) throw DegreeMismatch("orbits: degrees differ");

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const auto& p : perms)
    for (int i = 1; i <= n; ++i) unite(i - 1, p.apply(i) - 1);

  std::vector<std::vector<int>> grouped(n);
  for (int i = 0; i < n; ++i) grouped[find(i)].push_back(i + 1);
  std::vector<std::vector<int>> result;
  for (auto& g : grouped)
    if (!g.empty()) result.push_back(std::move(g));
  return result;
}

bool is_transitive(std::span<const Permutation> perms) { return orbits(perms).size() == 1; }

int uniform_class_index(int n, int k) {
  if (n < 1) throw OutOfRange("uniform_class_index: n must be >= 1");
  if (k < 2 || k > n)
    throw OutOfRange("uniform_class_index: k=" + std::to_string(k) + " outside [2," +
                     std::to_string(n) + "]");
  return (n / k) * (k - 1);
}

Permutation embed(const Permutation& p, int m) {
  if (m < p.degree())
    throw OutOfRange("embed: target degree " + std::to_string(m) + " below " +
                     std::to_string(p.degree()));
  std::vector<int> img(m);
  for (int i = 1; i <= p.degree(); ++i) img[i - 1] = p.apply(i);
  for (int i = p.degree() + 1; i <= m; ++i) img[i - 1] = i;
  return Permutation::from_images(std::move(img));
}

Permutation attach_cycle(const Permutation& p, const std::vector<int>& cycle, AttachSide side) {
  if (cycle.size() < 2) throw OutOfRange("attach_cycle: need a cycle of length >= 2");
  const Permutation c = Permutation::single_cycle(p.degree(), cycle);
  int shared = 0;
  for (int pt : cycle)
    if (p.apply(pt) != pt) ++shared;
  if (shared > 1)
    throw SupportOverlap("attach_cycle: cycle shares " + std::to_string(shared) +
                         " points with the support");
  return side == AttachSide::Left ? compose(c, p) : compose(p, c);
}

}  // namespace permprod
