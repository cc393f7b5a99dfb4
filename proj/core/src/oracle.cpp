#include "permprod/oracle.hpp"

#include <chrono>

namespace permprod {

namespace {

using Clock = std::chrono::steady_clock;

class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget)
      : budget_(budget), start_(Clock::now()) {}

  void charge(std::uint64_t nodes = 1) {
    nodes_ += nodes;
    if (nodes_ > budget_.max_nodes)
      throw BudgetExceeded("search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    if ((nodes_ & 0x3ff) == 0) {
      const double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
      if (elapsed > budget_.time_cap_seconds)
        throw BudgetExceeded("search exceeded the time cap");
    }
  }

 private:
  const SearchBudget& budget_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<TripleWitness> exhaustive_triple_search(int n, int a, int b, int c,
                                                      const SearchBudget& budget) {
  if (n < 1) throw OutOfRange("degree must be positive");
  if (a < 1 || b < 1 || c < 1) throw OutOfRange("orders must be positive");
  if (n > budget.max_degree)
    throw BudgetExceeded("degree " + std::to_string(n) + " above the feasibility bound " +
                         std::to_string(budget.max_degree));
  BudgetMeter meter(budget);

  const auto x_types = cycle_types_with_order(n, static_cast<std::uint64_t>(a));
  const auto y_types = cycle_types_with_order(n, static_cast<std::uint64_t>(b));
  std::optional<TripleWitness> found;
  for (const auto& x_type : x_types) {
    const Permutation x = class_representative(x_type);
    for (const auto& y_type : y_types) {
      for_each_class_element(y_type, [&](const Permutation& y) {
        meter.charge();
        const Permutation xy = compose(x, y);
        if (order(xy) == static_cast<std::uint64_t>(c)) {
          found = TripleWitness{x, y, xy.inverse()};
          return false;
        }
        return true;
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

int min_degree(int a, int b, int c, const SearchBudget& budget) {
  for (int n = 1; n <= budget.max_degree; ++n) {
    if (auto witness = exhaustive_triple_search(n, a, b, c, budget)) return n;
  }
  throw BudgetExceeded("no witness up to the feasibility bound " +
                       std::to_string(budget.max_degree));
}

std::optional<ClassTripleWitness> class_triple_realizable(const ClassSpec& c1,
                                                          const ClassSpec& c2,
                                                          const ClassSpec& c3,
                                                          bool require_transitive,
                                                          const SearchBudget& budget) {
  if (c1.degree != c2.degree || c2.degree != c3.degree)
    throw DegreeMismatch("class triple must live in one symmetric group");
  if (c1.degree > budget.max_degree)
    throw BudgetExceeded("degree above the feasibility bound");
  BudgetMeter meter(budget);

  const Permutation alpha = class_representative(c1.cycle_type);
  std::optional<ClassTripleWitness> found;
  for_each_class_element(c2.cycle_type, [&](const Permutation& beta) {
    meter.charge();
    const Permutation ab = compose(alpha, beta);
    if (cycle_type(ab) != c3.cycle_type) return true;
    if (require_transitive) {
      const Permutation pair[2] = {alpha, beta};
      if (!is_transitive(pair)) return true;
    }
    found = ClassTripleWitness{alpha, beta, ab.inverse()};
    return false;
  });
  return found;
}

}  // namespace permprod
