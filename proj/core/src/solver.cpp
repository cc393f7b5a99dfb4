#include "permprod/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

#include "permprod/classes.hpp"

namespace permprod {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t triple_seed(int a, int b, int c, std::uint64_t seed_mix) {
  return mix64(mix64(static_cast<std::uint64_t>(a) * 1000003 +
                     static_cast<std::uint64_t>(b) * 1009 + static_cast<std::uint64_t>(c)) ^
               seed_mix);
}

void check_triple(int a, int b, int c) {
  if (a < 2 || a > b || b > c)
    throw OutOfRange("order triple must satisfy 2 <= a <= b <= c, got (" + std::to_string(a) +
                     "," + std::to_string(b) + "," + std::to_string(c) + ")");
}

// The class of `count` k-cycles plus fixed points in S_n.
CycleType cycles_and_fixed(int n, int k, int count) {
  std::vector<int> parts(count, k);
  const int covered = count * k;
  parts.resize(parts.size() + (n - covered), 1);
  return CycleType(std::move(parts), n);
}

CycleType with_extra_transposition(const CycleType& type) {
  std::vector<int> parts = type.parts();
  int ones = 0;
  for (int part : parts) ones += part == 1;
  if (ones < 2) throw OutOfRange("class has fewer than two fixed points to pair up");
  parts.erase(std::find(parts.begin(), parts.end(), 1));
  *std::find(parts.begin(), parts.end(), 1) = 2;
  return CycleType(std::move(parts), type.degree());
}

Permutation canonical_cycle(int degree, int length) {
  std::vector<int> points(length);
  std::iota(points.begin(), points.end(), 1);
  return Permutation::single_cycle(degree, points);
}

std::vector<int> run_of_points(int first, int last) {
  std::vector<int> points;
  for (int p = first; p <= last; ++p) points.push_back(p);
  return points;
}

// Which element, if any, carries a 2-cycle beyond its nominal shape.
TranspositionHolder computed_holder(const SolveResult& r) {
  const auto has_extra = [](const Permutation& p, int nominal) {
    if (nominal == 2) return false;  // 2-cycles are nominal cycles then
    const std::vector<int> parts = cycle_type(p).parts();
    for (int part : parts)
      if (part == 2) return true;
    return false;
  };
  if (has_extra(r.x, r.orders[0])) return TranspositionHolder::X;
  if (has_extra(r.y, r.orders[1])) return TranspositionHolder::Y;
  // z: a second cycle beyond the c-cycle means the transposition form.
  const auto parts = cycle_type(r.z).parts();
  int big = 0, two = 0;
  for (int part : parts) {
    if (part == r.orders[2]) ++big;
    if (part == 2) ++two;
  }
  if (r.orders[2] == 2 ? big >= 2 : two >= 1) return TranspositionHolder::Z;
  return TranspositionHolder::None;
}

// The support of z's length-c cycle (smallest starting point first when there
// is a choice, which only happens for c = 2).
std::vector<int> big_cycle_support(const Permutation& z, int c) {
  for (const auto& cycle : z.cycles())
    if (static_cast<int>(cycle.size()) == c) return cycle;
  throw OutOfRange("z has no cycle of length c");
}

// Smallest fixed point of x (preferred) or y on z's big cycle.
std::optional<BigCycleFixedPoint> scan_fixed_point(const Permutation& x, const Permutation& y,
                                                   const Permutation& z, int c) {
  std::vector<int> support = big_cycle_support(z, c);
  std::sort(support.begin(), support.end());
  for (int point : support)
    if (x.apply(point) == point) return BigCycleFixedPoint{TranspositionHolder::X, point};
  for (int point : support)
    if (y.apply(point) == point) return BigCycleFixedPoint{TranspositionHolder::Y, point};
  return std::nullopt;
}

SolveResult finish_result(Permutation x, Permutation y, Permutation z, int a, int b, int c,
                          CaseTag tag, bool record_fixed_point) {
  SolveResult r{std::move(x), std::move(y), std::move(z), {a, b, c}, std::move(tag),
                TranspositionHolder::None, std::nullopt};
  r.exceptional = computed_holder(r);
  if (record_fixed_point) {
    r.fixed_point_on_big_cycle = scan_fixed_point(r.x, r.y, r.z, c);
    if (!r.fixed_point_on_big_cycle)
      throw Error("internal: no fixed point of x or y on the big cycle");
  }
  const VerificationReport report = verify_structure(r);
  if (!report.ok) {
    std::string msg = "internal: solve produced an invalid triple for (" + std::to_string(a) +
                      "," + std::to_string(b) + "," + std::to_string(c) + "):";
    for (const auto& v : report.violations) msg += " [" + v + "]";
    throw Error(msg);
  }
  return r;
}

bool is_c_even_case(SolveCase v) {
  switch (v) {
    case SolveCase::CEvenNearCycle:
    case SolveCase::CEvenHalfEqual:
    case SolveCase::CEvenPair358:
    case SolveCase::CEvenAllEqual:
    case SolveCase::CEvenGrowA:
    case SolveCase::CEvenGrowAB:
      return true;
    default:
      return false;
  }
}

SolveResult solve_dispatch(int a, int b, int c, std::uint64_t seed_mix);

// ---------------------------------------------------------------------------
// S_c and S_{c+1} routes.
// ---------------------------------------------------------------------------

SolveResult build_even_triple(int a, int b, int c, const CaseTag& tag, std::uint64_t seed_mix) {
  CycleType x_class = cycles_and_fixed(c, a, c / a);
  CycleType y_class = cycles_and_fixed(c, b, c / b);
  if (tag.variant == SolveCase::DropCycleInPlace) {
    // Drop one cycle from the even-order class (a when all orders are even,
    // otherwise whichever of a, b is even and divides c).
    const int e = (a % 2 == 0 && (b % 2 == 1 || c % a == 0)) ? a : b;
    if (c % e != 0 || c / e < 2)
      throw Error("internal: drop-cycle route needs e | c with at least two e-cycles");
    if (e == a)
      x_class = cycles_and_fixed(c, a, c / a - 1);
    else
      y_class = cycles_and_fixed(c, b, c / b - 1);
  } else if (tag.variant == SolveCase::AddTranspositionInPlace) {
    x_class = with_extra_transposition(x_class);
  }
  RealizationRequest req{ClassSpec(c, x_class), ClassSpec(c, y_class),
                         RealizeVariant::FullCycle, triple_seed(a, b, c, seed_mix), 0};
  const RealizationWitness w = realize_full_cycle(req);
  return finish_result(w.alpha, w.beta, w.product.inverse(), a, b, c, tag, false);
}

SolveResult build_odd_with_even(int a, int b, int c, const CaseTag& tag,
                                std::uint64_t seed_mix) {
  const int n = c + 1;
  const int e = (a % 2 == 0) ? a : b;  // augmented (even) order
  if (c % e == 0) throw Error("internal: augmentation requires e not dividing c");
  const CycleType a_class = cycles_and_fixed(n, a, c / a);
  const CycleType b_class = cycles_and_fixed(n, b, c / b);
  const CycleType x_class = (e == a) ? with_extra_transposition(a_class) : a_class;
  const CycleType y_class = (e == b) ? with_extra_transposition(b_class) : b_class;
  RealizationRequest req{ClassSpec(n, x_class), ClassSpec(n, y_class), RealizeVariant::NearCycle,
                         triple_seed(a, b, c, seed_mix), 0};
  const RealizationWitness w = realize_near_cycle(req);
  return finish_result(w.alpha, w.beta, w.product.inverse(), a, b, c, tag, false);
}

// ---------------------------------------------------------------------------
// c even, a and b odd (plus the all-equal special case): S_{c+2} routes with
// z of shape {c,2}.
// ---------------------------------------------------------------------------

SolveResult build_all_equal(int c, const CaseTag& tag) {
  if (c == 2) {
    const Permutation x = Permutation::from_cycles(4, {{1, 2}});
    const Permutation y = Permutation::from_cycles(4, {{3, 4}});
    const Permutation z = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
    return finish_result(x, y, z, 2, 2, 2, tag, true);
  }
  const Permutation x = canonical_cycle(c + 2, c);
  std::vector<int> y_points = run_of_points(1, c - 4);
  y_points.push_back(c - 1);
  y_points.push_back(c - 3);
  y_points.push_back(c + 1);
  y_points.push_back(c + 2);
  const Permutation y = Permutation::single_cycle(c + 2, y_points);
  const Permutation z = compose(x, y).inverse();
  return finish_result(x, y, z, c, c, c, tag, true);
}

SolveResult build_half_equal(int a, int c, const CaseTag& tag) {
  // a = b = c/2 + 1, a odd, degree 2a = c+2.
  const int n = 2 * a;
  const Permutation x =
      Permutation::from_cycles(n, {run_of_points(1, a), run_of_points(a + 1, 2 * a)});
  std::vector<int> y_points = run_of_points(1, a - 2);
  y_points.push_back(2 * a);
  y_points.push_back(2 * a - 2);
  const Permutation y = Permutation::single_cycle(n, y_points);
  const Permutation z = compose(x, y).inverse();
  return finish_result(x, y, z, a, a, c, tag, true);
}

SolveResult build_pair_358(const CaseTag& tag) {
  const Permutation x = Permutation::from_cycles(10, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  const Permutation y = Permutation::from_cycles(10, {{1, 4, 8, 9, 10}});
  const Permutation z = compose(x, y).inverse();
  return finish_result(x, y, z, 3, 5, 8, tag, true);
}

SolveResult build_c_even_near_cycle(int a, int b, int c, const CaseTag& tag,
                                    std::uint64_t seed_mix) {
  const int n = c + 1;
  const CycleType a_class = cycles_and_fixed(n, a, c / a);
  const CycleType b_reduced = cycles_and_fixed(n, b - 1, 1);  // single (b-1)-cycle
  RealizationRequest req{ClassSpec(n, a_class), ClassSpec(n, b_reduced),
                         RealizeVariant::NearCycle, triple_seed(a, b, c, seed_mix), 0};
  RealizationWitness w = realize_near_cycle(req);
  w = relabel_fixed_point(w, c + 1);

  const Permutation x = embed(w.alpha, c + 2);
  // The near-cycle product fixes c+1 and the pair acts transitively, so the
  // (b-1)-cycle moves c+1; appending (c+1,c+2) glues it into a b-cycle.
  const Permutation y = attach_cycle(embed(w.beta, c + 2), {c + 1, c + 2}, AttachSide::Right);
  const Permutation z = compose(x, y).inverse();
  return finish_result(x, y, z, a, b, c, tag, true);
}

// Reverses the roles of a triple: (x,y,z) -> (y^-1, x^-1, z^-1) keeps the
// product trivial and all cycle types; it swaps which of the first two slots
// holds a given fixed point, and is only used when their orders agree.
void reverse_roles(SolveResult& base) {
  Permutation nx = base.y.inverse();
  Permutation ny = base.x.inverse();
  base.x = std::move(nx);
  base.y = std::move(ny);
  base.z = base.z.inverse();
  std::swap(base.orders[0], base.orders[1]);
  base.exceptional = computed_holder(base);
  base.fixed_point_on_big_cycle =
      scan_fixed_point(base.x, base.y, base.z, base.orders[2]);
}

SolveResult build_grow_a(int a, int b, int c, const CaseTag& tag, std::uint64_t seed_mix) {
  SolveResult base = solve_dispatch(a, b, c - (a - 1), seed_mix);
  if (!base.fixed_point_on_big_cycle) throw Error("internal: recursion base lost fixed point");
  if (base.fixed_point_on_big_cycle->holder == TranspositionHolder::Y) {
    if (a != b) throw Error("internal: role reversal needs equal orders");
    reverse_roles(base);
    if (!base.fixed_point_on_big_cycle ||
        base.fixed_point_on_big_cycle->holder != TranspositionHolder::X)
      throw Error("internal: role reversal did not move the fixed point to x");
  }
  const int d = base.fixed_point_on_big_cycle->point;
  const int m = c + 2;

  std::vector<int> tau{d};
  for (int p : run_of_points(c - a + 4, c + 2)) tau.push_back(p);

  const Permutation x = attach_cycle(embed(base.x, m), tau, AttachSide::Left);
  const Permutation y = embed(base.y, m);
  const Permutation grown = attach_cycle(embed(compose(base.x, base.y), m), tau, AttachSide::Left);
  if (compose(x, y) != grown) throw Error("internal: glued product mismatch");
  return finish_result(x, y, grown.inverse(), a, b, c, tag, true);
}

SolveResult build_grow_ab(int a, int b, int c, const CaseTag& tag, std::uint64_t seed_mix) {
  SolveResult base = solve_dispatch(a, b, c - (a + b - 2), seed_mix);
  if (!base.fixed_point_on_big_cycle) throw Error("internal: recursion base lost fixed point");
  const int d = base.fixed_point_on_big_cycle->point;
  const int m = c + 2;
  const Permutation base_product = compose(base.x, base.y);

  Permutation x = embed(base.x, m);
  Permutation y = embed(base.y, m);
  Permutation product = embed(base_product, m);
  if (base.fixed_point_on_big_cycle->holder == TranspositionHolder::X) {
    // a-cycle through x's fixed point, then a b-cycle sharing one fresh point.
    std::vector<int> rho{d};
    for (int p : run_of_points(c - a - b + 5, c - b + 3)) rho.push_back(p);
    const std::vector<int> tau = run_of_points(c - b + 3, c + 2);
    x = attach_cycle(x, rho, AttachSide::Left);
    y = attach_cycle(y, tau, AttachSide::Right);
    product = attach_cycle(product, rho, AttachSide::Left);
    product = attach_cycle(product, tau, AttachSide::Right);
  } else {
    // Mirror: b-cycle through y's fixed point, a-cycle sharing a fresh point.
    std::vector<int> tau{d};
    for (int p : run_of_points(c - a - b + 5, c - a + 3)) tau.push_back(p);
    const std::vector<int> rho = run_of_points(c - a + 3, c + 2);
    x = attach_cycle(x, rho, AttachSide::Left);
    y = attach_cycle(y, tau, AttachSide::Right);
    product = attach_cycle(product, tau, AttachSide::Right);
    product = attach_cycle(product, rho, AttachSide::Left);
  }
  if (compose(x, y) != product) throw Error("internal: glued product mismatch");
  return finish_result(x, y, product.inverse(), a, b, c, tag, true);
}

SolveResult solve_dispatch(int a, int b, int c, std::uint64_t seed_mix) {
  const CaseTag tag = classify(a, b, c);
  switch (tag.variant) {
    case SolveCase::EvenTripleInPlace:
    case SolveCase::DropCycleInPlace:
    case SolveCase::AddTranspositionInPlace:
      return build_even_triple(a, b, c, tag, seed_mix);
    case SolveCase::AugmentedNearCycle:
      return build_odd_with_even(a, b, c, tag, seed_mix);
    case SolveCase::CEvenAllEqual:
      return build_all_equal(c, tag);
    case SolveCase::CEvenHalfEqual:
      return build_half_equal(a, c, tag);
    case SolveCase::CEvenPair358:
      return build_pair_358(tag);
    case SolveCase::CEvenNearCycle:
      return build_c_even_near_cycle(a, b, c, tag, seed_mix);
    case SolveCase::CEvenGrowA:
      return build_grow_a(a, b, c, tag, seed_mix);
    case SolveCase::CEvenGrowAB:
      return build_grow_ab(a, b, c, tag, seed_mix);
  }
  throw Error("internal: unhandled solve case");
}

}  // namespace

const char* to_string(SolveCase c) {
  switch (c) {
    case SolveCase::EvenTripleInPlace: return "even-triple-in-place";
    case SolveCase::DropCycleInPlace: return "drop-cycle-in-place";
    case SolveCase::AddTranspositionInPlace: return "add-transposition-in-place";
    case SolveCase::AugmentedNearCycle: return "augmented-near-cycle";
    case SolveCase::CEvenNearCycle: return "c-even-near-cycle";
    case SolveCase::CEvenHalfEqual: return "c-even-half-equal";
    case SolveCase::CEvenPair358: return "c-even-pair-358";
    case SolveCase::CEvenAllEqual: return "c-even-all-equal";
    case SolveCase::CEvenGrowA: return "c-even-grow-a";
    case SolveCase::CEvenGrowAB: return "c-even-grow-ab";
  }
  return "?";
}

const char* to_string(TranspositionHolder h) {
  switch (h) {
    case TranspositionHolder::None: return "none";
    case TranspositionHolder::X: return "x";
    case TranspositionHolder::Y: return "y";
    case TranspositionHolder::Z: return "z";
  }
  return "?";
}

CaseTag classify(int a, int b, int c) {
  check_triple(a, b, c);
  CaseTag tag;
  tag.recursion_trace.push_back({a, b, c});

  const int ind_a = uniform_class_index(c, a);
  const int ind_b = uniform_class_index(c, b);
  const int ind_c = c - 1;
  if ((ind_a + ind_b + ind_c) % 2 == 0) {
    tag.variant = SolveCase::EvenTripleInPlace;
    return tag;
  }

  const bool all_even = a % 2 == 0 && b % 2 == 0 && c % 2 == 0;
  if (all_even) {
    if (a == b && b == c) {
      tag.variant = SolveCase::CEvenAllEqual;
      return tag;
    }
    tag.variant = (c % a == 0) ? SolveCase::DropCycleInPlace : SolveCase::AddTranspositionInPlace;
    return tag;
  }

  if (a % 2 == 0 || b % 2 == 0) {
    const int e = (a % 2 == 0) ? a : b;
    // When e divides c the augmented class does not exist (one fixed point
    // short); dropping one e-cycle restores the parity inside S_c instead.
    tag.variant = (c % e == 0) ? SolveCase::DropCycleInPlace : SolveCase::AugmentedNearCycle;
    return tag;
  }

  // a, b odd and the class triple odd force c even.
  if (a == b && 2 * a == c + 2) {
    tag.variant = SolveCase::CEvenHalfEqual;
    return tag;
  }
  if (a == 3 && b == 5 && c == 8) {
    tag.variant = SolveCase::CEvenPair358;
    return tag;
  }
  if (2 * b > c + 1) {
    tag.variant = SolveCase::CEvenNearCycle;
    return tag;
  }
  if (c < 2 * b + a - 2) {
    tag.variant = SolveCase::CEvenGrowA;
    CaseTag inner = classify(a, b, c - (a - 1));
    tag.recursion_trace.insert(tag.recursion_trace.end(), inner.recursion_trace.begin(),
                               inner.recursion_trace.end());
    return tag;
  }
  tag.variant = SolveCase::CEvenGrowAB;
  CaseTag inner = classify(a, b, c - (a + b - 2));
  tag.recursion_trace.insert(tag.recursion_trace.end(), inner.recursion_trace.begin(),
                             inner.recursion_trace.end());
  return tag;
}

SolveResult solve(int a, int b, int c, std::uint64_t seed_mix) {
  check_triple(a, b, c);
  return solve_dispatch(a, b, c, seed_mix);
}

SolveResult solve_even_triple(int a, int b, int c, std::uint64_t seed_mix) {
  const CaseTag tag = classify(a, b, c);
  if (tag.variant != SolveCase::EvenTripleInPlace &&
      tag.variant != SolveCase::DropCycleInPlace &&
      tag.variant != SolveCase::AddTranspositionInPlace)
    throw OutOfRange("triple is not solvable in place");
  return build_even_triple(a, b, c, tag, seed_mix);
}

SolveResult solve_odd_with_even(int a, int b, int c, std::uint64_t seed_mix) {
  const CaseTag tag = classify(a, b, c);
  if (tag.variant != SolveCase::AugmentedNearCycle)
    throw OutOfRange("triple is not in the augmented near-cycle case");
  return build_odd_with_even(a, b, c, tag, seed_mix);
}

SolveResult solve_c_even(int a, int b, int c, std::uint64_t seed_mix) {
  const CaseTag tag = classify(a, b, c);
  if (!is_c_even_case(tag.variant))
    throw OutOfRange("triple is not in the even-c two-point-extension case");
  return solve_dispatch(a, b, c, seed_mix);
}

VerificationReport verify_structure(const SolveResult& r) {
  VerificationReport report;
  auto flag = [&](const std::string& v) {
    report.ok = false;
    report.violations.push_back(v);
  };

  const int a = r.orders[0], b = r.orders[1], c = r.orders[2];
  if (r.x.degree() != r.y.degree() || r.y.degree() != r.z.degree()) {
    flag("degrees differ");
    return report;
  }
  const int d = r.x.degree();
  if (d > c + 2) flag("degree exceeds c+2");

  if (!compose(compose(r.x, r.y), r.z).is_identity()) flag("product is not the identity");

  if (order(r.x) != static_cast<std::uint64_t>(a)) flag("order(x) != a");
  if (order(r.y) != static_cast<std::uint64_t>(b)) flag("order(y) != b");
  if (order(r.z) != static_cast<std::uint64_t>(c)) flag("order(z) != c");

  // z: a c-cycle plus fixed points, or a c-cycle, one 2-cycle, fixed points.
  {
    std::vector<int> parts = cycle_type(r.z).parts();
    auto big = std::find(parts.begin(), parts.end(), c);
    if (big == parts.end()) {
      flag("z has no c-cycle");
    } else {
      parts.erase(big);
      int twos = 0;
      for (int part : parts) {
        if (part == 2)
          ++twos;
        else if (part != 1)
          flag("z has a cycle of length other than c, 2, 1");
      }
      if (twos > 1) flag("z has more than one extra 2-cycle");
    }
  }

  // x, y: only cycles of the nominal length, fixed points, and at most one
  // extra transposition.
  int extras = 0;
  auto check_shape = [&](const Permutation& p, int nominal, const char* name) {
    int twos = 0;
    const std::vector<int> parts = cycle_type(p).parts();
    for (int part : parts) {
      if (part == nominal || part == 1) continue;
      if (part == 2)
        ++twos;
      else
        flag(std::string(name) + " has a cycle of length other than its order, 2, 1");
    }
    if (twos > 1) flag(std::string(name) + " has more than one extra 2-cycle");
    if (nominal != 2 && twos == 1) ++extras;
  };
  check_shape(r.x, a, "x");
  check_shape(r.y, b, "y");
  {
    const auto parts = cycle_type(r.z).parts();
    const int big_count = static_cast<int>(std::count(parts.begin(), parts.end(), c));
    const bool z_extra = (c == 2) ? big_count >= 2
                                  : std::count(parts.begin(), parts.end(), 2) >= 1;
    if (z_extra) ++extras;
  }
  if (extras > 1) flag("more than one element carries an extra transposition");

  if (computed_holder(r) != r.exceptional) flag("exceptional holder field mismatch");

  if (is_c_even_case(r.tag.variant)) {
    if (!r.fixed_point_on_big_cycle) {
      flag("missing fixed point record for an even-c construction");
    }
  }
  if (r.fixed_point_on_big_cycle) {
    const auto& fp = *r.fixed_point_on_big_cycle;
    const Permutation& holder_perm =
        fp.holder == TranspositionHolder::X ? r.x : r.y;
    if (fp.holder != TranspositionHolder::X && fp.holder != TranspositionHolder::Y)
      flag("fixed point holder must be x or y");
    else if (fp.point < 1 || fp.point > d || holder_perm.apply(fp.point) != fp.point)
      flag("recorded point is not fixed by its holder");
    else {
      try {
        bool on_big = false;
        for (int point : big_cycle_support(r.z, c)) on_big |= point == fp.point;
        if (!on_big) flag("recorded fixed point is not on z's big cycle");
      } catch (const Error&) {
        flag("z has no big cycle to host the recorded fixed point");
      }
    }
  }

  if (r.tag.recursion_trace.empty() ||
      r.tag.recursion_trace.front() != std::array<int, 3>{a, b, c})
    flag("recursion trace does not start at the input triple");
  for (std::size_t i = 1; i < r.tag.recursion_trace.size(); ++i)
    if (r.tag.recursion_trace[i][2] >= r.tag.recursion_trace[i - 1][2])
      flag("recursion trace c values do not decrease");

  // Sign coherence: a product-one triple has an even total index.
  if ((index(r.x) + index(r.y) + index(r.z)) % 2 != 0) flag("index sum is odd");

  return report;
}

std::array<Permutation, 3> rearrange_product_one(const std::array<Permutation, 3>& base,
                                                 const std::array<int, 3>& desired) {
  using Triple = std::array<Permutation, 3>;
  const auto orders_of = [](const Triple& t) {
    return std::array<std::uint64_t, 3>{order(t[0]), order(t[1]), order(t[2])};
  };
  const std::array<std::uint64_t, 3> want{static_cast<std::uint64_t>(desired[0]),
                                          static_cast<std::uint64_t>(desired[1]),
                                          static_cast<std::uint64_t>(desired[2])};
  auto rot = [](const Triple& t) { return Triple{t[1], t[2], t[0]}; };
  auto swap12 = [](const Triple& t) { return Triple{t[1], t[0], conjugate(t[2], t[0])}; };

  std::vector<Triple> candidates;
  Triple s = base;
  for (int i = 0; i < 3; ++i) {
    candidates.push_back(s);
    candidates.push_back(swap12(s));
    s = rot(s);
  }
  for (const Triple& t : candidates) {
    if (orders_of(t) != want) continue;
    if (!compose(compose(t[0], t[1]), t[2]).is_identity())
      throw Error("internal: slot restoration broke the product");
    return t;
  }
  throw OutOfRange("desired orders are not a rearrangement of the solved triple");
}

std::array<Permutation, 3> restore_slots(const SolveResult& r, const std::array<int, 3>& desired) {
  return rearrange_product_one({r.x, r.y, r.z}, desired);
}

SurveyReport survey(int n_max, int jobs) {
  if (n_max < 4) throw OutOfRange("survey needs n_max >= 4");
  if (jobs < 1) jobs = 1;

  SurveyReport report;
  report.max_n = n_max;

  // Distinct sorted triples with c <= n_max - 2; each is solved once and its
  // six slot rearrangements are verified.
  std::vector<std::array<int, 3>> triples;
  for (int c = 2; c <= n_max - 2; ++c)
    for (int b = 2; b <= c; ++b)
      for (int a = 2; a <= b; ++a) triples.push_back({a, b, c});
  report.distinct_triples = static_cast<long long>(triples.size());

  std::mutex mu;
  std::vector<std::array<int, 3>> failed;
  std::vector<int> degree_of(triples.size(), 0);
  double max_ms = 0.0;
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= triples.size()) return;
      const auto [a, b, c] = triples[i];
      const auto t0 = std::chrono::steady_clock::now();
      bool ok = true;
      int degree = 0;
      try {
        const SolveResult r = solve(a, b, c);
        degree = r.x.degree();
        ok = verify_structure(r).ok && degree <= c + 2;
        if (ok) {
          // Slot restoration must hold for every arrangement of the orders.
          std::array<int, 3> perm{a, b, c};
          std::sort(perm.begin(), perm.end());
          do {
            const auto t = restore_slots(r, perm);
            ok = ok && order(t[0]) == static_cast<std::uint64_t>(perm[0]) &&
                 order(t[1]) == static_cast<std::uint64_t>(perm[1]) &&
                 order(t[2]) == static_cast<std::uint64_t>(perm[2]) &&
                 compose(compose(t[0], t[1]), t[2]).is_identity();
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      } catch (const std::exception&) {
        ok = false;
      }
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
              .count();
      std::lock_guard<std::mutex> lock(mu);
      degree_of[i] = ok ? degree : 0;
      max_ms = std::max(max_ms, ms);
      if (!ok) failed.push_back({a, b, c});
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::sort(failed.begin(), failed.end());
  report.failed_triples = std::move(failed);
  report.max_solve_ms = max_ms;

  for (int n = 4; n <= n_max; ++n) {
    const long long side = n - 3;  // orders 2..n-2
    const long long cells = side * side * side;
    report.cells_per_n.emplace_back(n, cells);
    report.total_cells += cells;
  }
  // A cell (n, a, b, c) is confirmed when its sorted triple solved, verified,
  // and fits in S_n; the solver degree is at most max(a,b,c)+2 <= n.
  long long confirmed = 0;
  for (int n = 4; n <= n_max; ++n)
    for (int c = 2; c <= n - 2; ++c)
      for (int b = 2; b <= c; ++b)
        for (int a = 2; a <= b; ++a) {
          // Number of distinct slot arrangements of (a, b, c).
          const auto idx = std::lower_bound(
              // triples are generated in (c, b, a) order; find by scan below.
              triples.begin(), triples.end(), std::array<int, 3>{a, b, c},
              [](const std::array<int, 3>& lhs, const std::array<int, 3>& rhs) {
                return std::tie(lhs[2], lhs[1], lhs[0]) < std::tie(rhs[2], rhs[1], rhs[0]);
              });
          const bool solved = idx != triples.end() && *idx == std::array<int, 3>{a, b, c} &&
                              degree_of[idx - triples.begin()] > 0 &&
                              degree_of[idx - triples.begin()] <= n;
          int arrangements = 6;
          if (a == b && b == c)
            arrangements = 1;
          else if (a == b || b == c)
            arrangements = 3;
          if (solved) confirmed += arrangements;
        }
  report.confirmed_cells = confirmed;
  return report;
}

}  // namespace permprod
