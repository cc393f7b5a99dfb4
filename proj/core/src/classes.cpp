#include "permprod/classes.hpp"

#include <algorithm>
#include <numeric>

namespace permprod {

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<CycleType> all_cycle_types(int n) {
  std::vector<std::vector<int>> parts;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, parts);
  std::vector<CycleType> result;
  result.reserve(parts.size());
  for (auto& p : parts) result.emplace_back(std::move(p), n);
  return result;
}

std::vector<CycleType> cycle_types_with_order(int n, std::uint64_t target_order) {
  std::vector<CycleType> result;
  for (auto& type : all_cycle_types(n))
    if (type.element_order() == target_order) result.push_back(type);
  return result;
}

Permutation class_representative(const CycleType& type) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : type.parts()) {
    std::vector<int> cycle(part);
    std::iota(cycle.begin(), cycle.end(), next);
    next += part;
    if (part > 1) cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(type.degree(), cycles);
}

Permutation random_class_element(const CycleType& type, std::mt19937_64& rng) {
  const int n = type.degree();
  std::vector<int> points(n);
  std::iota(points.begin(), points.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(points[i], points[pick(rng)]);
  }
  std::vector<std::vector<int>> cycles;
  std::size_t at = 0;
  for (int part : type.parts()) {
    if (part > 1)
      cycles.emplace_back(points.begin() + at, points.begin() + at + part);
    at += part;
  }
  return Permutation::from_cycles(n, cycles);
}

std::uint64_t class_size(const CycleType& type) {
  const int n = type.degree();
  auto mul_checked = [](std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b) throw Error("class size overflows 64 bits");
    return a * b;
  };
  std::uint64_t numerator = 1;
  for (int i = 2; i <= n; ++i) numerator = mul_checked(numerator, i);
  std::uint64_t denominator = 1;
  int run_length = 0;
  int run_count = 0;
  auto flush = [&]() {
    for (int j = 1; j <= run_count; ++j)
      denominator = mul_checked(denominator, static_cast<std::uint64_t>(run_length) * j);
  };
  for (int part : type.parts()) {
    if (part == run_length) {
      ++run_count;
    } else {
      flush();
      run_length = part;
      run_count = 1;
    }
  }
  flush();
  return numerator / denominator;
}

namespace {

// Enumerates permutations of the class without repetition: the smallest point
// not yet placed anchors a cycle; each distinct remaining part length is tried
// once for it; the rest of the cycle is an arrangement of larger free points.
bool enumerate_rec(int degree, std::vector<int>& remaining_parts, std::vector<bool>& used,
                   std::vector<std::vector<int>>& cycles,
                   const std::function<bool(const Permutation&)>& visit) {
  int anchor = 0;
  for (int p = 1; p <= degree; ++p)
    if (!used[p - 1]) {
      anchor = p;
      break;
    }
  if (anchor == 0) return visit(Permutation::from_cycles(degree, cycles));

  int last_len = 0;
  for (std::size_t i = 0; i < remaining_parts.size(); ++i) {
    const int len = remaining_parts[i];
    if (len == last_len) continue;
    last_len = len;
    remaining_parts.erase(remaining_parts.begin() + static_cast<long>(i));
    used[anchor - 1] = true;
    std::vector<int> cycle{anchor};

    std::vector<int> free;
    for (int p = anchor + 1; p <= degree; ++p)
      if (!used[p - 1]) free.push_back(p);

    // All ordered choices of len-1 points from `free`.
    std::vector<int> choice(static_cast<std::size_t>(len) - 1);
    std::vector<bool> taken(free.size(), false);
    bool keep_going = true;
    std::function<void(int)> arrange = [&](int depth) {
      if (!keep_going) return;
      if (depth == len - 1) {
        cycles.push_back(cycle);
        for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(len); ++k)
          cycles.back().push_back(choice[k]);
        for (int pt : choice) used[pt - 1] = true;
        keep_going = enumerate_rec(degree, remaining_parts, used, cycles, visit);
        for (int pt : choice) used[pt - 1] = false;
        cycles.pop_back();
        return;
      }
      for (std::size_t j = 0; j < free.size(); ++j) {
        if (taken[j]) continue;
        taken[j] = true;
        choice[depth] = free[j];
        arrange(depth + 1);
        taken[j] = false;
        if (!keep_going) return;
      }
    };
    if (len == 1) {
      cycles.push_back(cycle);
      keep_going = enumerate_rec(degree, remaining_parts, used, cycles, visit);
      cycles.pop_back();
    } else {
      arrange(0);
    }

    used[anchor - 1] = false;
    remaining_parts.insert(remaining_parts.begin() + static_cast<long>(i), len);
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

bool for_each_class_element(const CycleType& type,
                            const std::function<bool(const Permutation&)>& visit) {
  std::vector<int> parts = type.parts();  // descending
  std::vector<bool> used(type.degree(), false);
  std::vector<std::vector<int>> cycles;
  return enumerate_rec(type.degree(), parts, used, cycles, visit);
}

CycleType uniform_cycle_type(int n, int k) {
  if (k < 2 || k > n) throw OutOfRange("uniform_cycle_type: k outside [2,n]");
  std::vector<int> parts(n / k, k);
  parts.resize(parts.size() + (n % k), 1);
  return CycleType(std::move(parts), n);
}

}  // namespace permprod
