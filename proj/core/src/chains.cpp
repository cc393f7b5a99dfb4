#include "permprod/chains.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "permprod/classes.hpp"
#include "permprod/oracle.hpp"
#include "permprod/solver.hpp"

namespace permprod {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Permutation product_of(const std::vector<Permutation>& tuple) {
  Permutation acc = tuple.front();
  for (std::size_t i = 1; i < tuple.size(); ++i) acc = compose(acc, tuple[i]);
  return acc;
}

// Degree-6 base triples for entries up to 5, found once by exhaustive search.
// The prime head 5 exceeds the usual bound 6-2, so these cannot come from the
// triple solver's degree guarantee; a direct check shows they all exist.
const std::array<Permutation, 3>& table6(int a, int b, int c) {
  static std::map<std::array<int, 3>, std::array<Permutation, 3>> table;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (table.empty()) {
    SearchBudget budget;
    budget.max_degree = 6;
    for (int cc = 2; cc <= 5; ++cc)
      for (int bb = 2; bb <= cc; ++bb)
        for (int aa = 2; aa <= bb; ++aa) {
          auto witness = exhaustive_triple_search(6, aa, bb, cc, budget);
          if (!witness) throw Error("internal: degree-6 base triple missing");
          table.emplace(std::array<int, 3>{aa, bb, cc},
                        std::array<Permutation, 3>{witness->x, witness->y, witness->z});
        }
  }
  const auto it = table.find({a, b, c});
  if (it == table.end()) throw OutOfRange("degree-6 table covers orders 2..5 only");
  return it->second;
}

std::vector<Permutation> base_triple(const std::vector<int>& orders, int n) {
  std::array<int, 3> desired{orders[0], orders[1], orders[2]};
  std::array<int, 3> sorted = desired;
  std::sort(sorted.begin(), sorted.end());
  std::array<Permutation, 3> t =
      n == 6 ? rearrange_product_one(table6(sorted[0], sorted[1], sorted[2]), desired)
             : restore_slots(solve(sorted[0], sorted[1], sorted[2]), desired);
  std::vector<Permutation> out;
  for (auto& p : t) out.push_back(embed(p, n));
  return out;
}

std::vector<Permutation> involution_chain(int r, int n) {
  const Permutation t12 = Permutation::from_cycles(n, {{1, 2}});
  std::vector<Permutation> out;
  if (r % 2 == 0) {
    out.assign(r, t12);
  } else {
    out.push_back(t12);
    out.push_back(Permutation::from_cycles(n, {{3, 4}}));
    out.push_back(Permutation::from_cycles(n, {{1, 2}, {3, 4}}));
    for (int i = 3; i < r; ++i) out.push_back(t12);
  }
  return out;
}

struct LocalOrders {
  std::vector<int> orders;
  std::vector<int> slots;  // -1 for a prime head
};

std::vector<Permutation> extend_rec(const LocalOrders& local, int n, SplitNode& node,
                                    const SplitNode* follow) {
  const int r = static_cast<int>(local.orders.size());
  node.slots = local.slots;
  if (follow && follow->slots != node.slots)
    throw OutOfRange("recorded split tree does not match the order list");

  if (r == 3) {
    if (follow && follow->prime != 0) throw OutOfRange("recorded split tree branches at a leaf");
    return base_triple(local.orders, n);
  }
  if (n == 4) {
    // Only order 2 fits: repeat involution blocks.
    if (follow && follow->prime != 0) throw OutOfRange("recorded split tree branches at a leaf");
    return involution_chain(r, n);
  }

  const int p = n == 6 ? 5 : bertrand_prime(n);
  if (follow && follow->prime != p) throw OutOfRange("recorded split tree holds a different prime");
  node.prime = p;
  const int half = r / 2;

  LocalOrders left{{p}, {-1}};
  LocalOrders right{{p}, {-1}};
  for (int i = 0; i < half; ++i) {
    left.orders.push_back(local.orders[i]);
    left.slots.push_back(local.slots[i]);
  }
  for (int i = half; i < r; ++i) {
    right.orders.push_back(local.orders[i]);
    right.slots.push_back(local.slots[i]);
  }

  node.children.resize(2);
  const SplitNode* follow_left = follow ? &follow->children.at(0) : nullptr;
  const SplitNode* follow_right = follow ? &follow->children.at(1) : nullptr;
  const auto left_tuple = extend_rec(left, n, node.children[0], follow_left);
  const auto right_tuple = extend_rec(right, n, node.children[1], follow_right);

  // Drop the heads: each half's remainder multiplies to the inverse of its
  // head, a p-cycle (p > n/2 admits no other order-p type), so conjugating
  // the right half onto the left head's inverse cancels the two blocks.
  std::vector<Permutation> left_block(left_tuple.begin() + 1, left_tuple.end());
  std::vector<Permutation> right_block(right_tuple.begin() + 1, right_tuple.end());
  const Permutation left_product = product_of(left_block);
  if (compose(left_tuple.front(), left_product) != Permutation::identity(n))
    throw Error("internal: head does not cancel its block");
  right_block = align_to_inverse(right_block, left_product);

  std::vector<Permutation> out = std::move(left_block);
  out.insert(out.end(), right_block.begin(), right_block.end());
  return out;
}

ChainResult build(const std::vector<int>& orders, const SplitNode* follow) {
  if (orders.size() < 3) throw InvalidArity("chain needs at least three orders");
  for (int o : orders)
    if (o < 2) throw OutOfRange("chain orders must be at least 2");
  const int n = *std::max_element(orders.begin(), orders.end()) + 2;

  LocalOrders top;
  top.orders = orders;
  top.slots.resize(orders.size());
  for (int i = 0; i < static_cast<int>(orders.size()); ++i) top.slots[i] = i;

  ChainResult result;
  result.orders = orders;
  result.elements = extend_rec(top, n, result.split_tree, follow);

  if (result.elements.size() != orders.size())
    throw Error("internal: chain length mismatch");
  if (!product_of(result.elements).is_identity())
    throw Error("internal: chain product is not the identity");
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (order(result.elements[i]) != static_cast<std::uint64_t>(orders[i]))
      throw Error("internal: chain slot order mismatch");
  return result;
}

}  // namespace

int bertrand_prime(int n) {
  if (n < 4) throw OutOfRange("bertrand_prime needs n >= 4");
  if (n == 4 || n == 6) throw NoSuchPrime("no prime p with n/2 < p <= n-2 for n=" +
                                          std::to_string(n));
  for (int p = n / 2 + 1; p <= n - 2; ++p)
    if (is_prime(p)) return p;
  throw NoSuchPrime("no prime p with n/2 < p <= n-2 for n=" + std::to_string(n));
}

std::vector<Permutation> align_to_inverse(const std::vector<Permutation>& tuple,
                                          const Permutation& target) {
  if (tuple.empty()) throw InvalidArity("cannot align an empty tuple");
  const Permutation current = product_of(tuple);
  const Permutation wanted = target.inverse();
  if (current.degree() != wanted.degree())
    throw DegreeMismatch("alignment target has a different degree");
  if (cycle_type(current) != cycle_type(wanted))
    throw TypeMismatch("tuple product has cycle type " + cycle_type(current).to_string() +
                       ", target inverse has " + cycle_type(wanted).to_string());

  // One conjugator g with g^-1 (current) g = wanted: map cycles of equal
  // length onto each other pointwise, longest first, fixed points ascending.
  const int n = current.degree();
  auto sorted_cycles = [](const Permutation& p) {
    auto cycles = p.cycles();
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& lhs, const auto& rhs) { return lhs.size() > rhs.size(); });
    return cycles;
  };
  const auto from_cycles = sorted_cycles(current);
  const auto to_cycles = sorted_cycles(wanted);
  std::vector<int> g_img(n, 0);
  for (std::size_t ci = 0; ci < from_cycles.size(); ++ci)
    for (std::size_t j = 0; j < from_cycles[ci].size(); ++j)
      g_img[from_cycles[ci][j] - 1] = to_cycles[ci][j];
  std::vector<int> free_targets;
  for (int pt : wanted.fixed_points()) free_targets.push_back(pt);
  std::size_t next_free = 0;
  for (int pt : current.fixed_points()) g_img[pt - 1] = free_targets[next_free++];
  const Permutation g = Permutation::from_images(g_img);

  std::vector<Permutation> out;
  out.reserve(tuple.size());
  for (const auto& p : tuple) out.push_back(conjugate(p, g));
  if (product_of(out) != wanted) throw Error("internal: alignment failed");
  return out;
}

ChainResult extend(const std::vector<int>& orders) { return build(orders, nullptr); }

ChainResult replay(const SplitNode& tree, const std::vector<int>& orders) {
  return build(orders, &tree);
}

}  // namespace permprod
