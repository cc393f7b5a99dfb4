// permprod -- product-one permutation tuples with prescribed orders.
//
// Subcommands: solve, extend, survey, genus, mindegree, cover.  Results are
// re-verified at emit time with local image-level checks that share no code
// with the construction paths; a result that fails that audit exits 3.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permprod/chains.hpp"
#include "permprod/cycle_io.hpp"
#include "permprod/hurwitz.hpp"
#include "permprod/oracle.hpp"
#include "permprod/solver.hpp"

using nlohmann::ordered_json;
using namespace permprod;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitBudget = 4;

// ---------------------------------------------------------------------------
// Emit-time audit.  Deliberately re-implemented on raw image arrays so a bug
// in the library's composition or order code cannot vouch for itself.
// ---------------------------------------------------------------------------

namespace audit {

bool product_is_identity(const std::vector<Permutation>& tuple) {
  if (tuple.empty()) return false;
  const int n = tuple.front().degree();
  for (const auto& p : tuple)
    if (p.degree() != n) return false;
  for (int start = 1; start <= n; ++start) {
    int at = start;
    for (const auto& p : tuple) at = p.images()[at - 1];
    if (at != start) return false;
  }
  return true;
}

std::uint64_t element_order(const Permutation& p) {
  const int n = p.degree();
  std::vector<bool> seen(n, false);
  std::uint64_t result = 1;
  for (int start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    std::uint64_t len = 0;
    int at = start;
    do {
      seen[at - 1] = true;
      at = p.images()[at - 1];
      ++len;
    } while (at != start);
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<int> type_of(const Permutation& p) {
  const int n = p.degree();
  std::vector<bool> seen(n, false);
  std::vector<int> parts;
  for (int start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    int len = 0;
    int at = start;
    do {
      seen[at - 1] = true;
      at = p.images()[at - 1];
      ++len;
    } while (at != start);
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

// Shape audit for a solve result: z a c-cycle with at most one extra 2-cycle,
// x and y only cycles of their order, fixed points, and at most one extra
// transposition over the three together.
bool triple_shape_ok(const Permutation& x, const Permutation& y, const Permutation& z, int a,
                     int b, int c) {
  int extras = 0;
  auto side_ok = [&extras](const Permutation& p, int nominal) {
    int twos = 0;
    for (int part : type_of(p)) {
      if (part == nominal || part == 1) continue;
      if (part != 2) return false;
      ++twos;
    }
    if (twos > 1) return false;
    if (nominal != 2 && twos == 1) ++extras;
    return true;
  };
  if (!side_ok(x, a) || !side_ok(y, b)) return false;
  std::vector<int> z_parts = type_of(z);
  const auto big = std::find(z_parts.begin(), z_parts.end(), c);
  if (big == z_parts.end()) return false;
  z_parts.erase(big);
  int z_twos = 0;
  for (int part : z_parts) {
    if (part == 2)
      ++z_twos;
    else if (part != 1)
      return false;
  }
  if (z_twos > 1) return false;
  extras += z_twos;
  return extras <= 1;
}

}  // namespace audit

struct Output {
  bool json = false;
  ordered_json payload;
  std::vector<std::string> lines;
  double elapsed_ms = 0.0;

  void line(const std::string& s) { lines.push_back(s); }
};

void emit(const Output& out) {
  if (out.json) {
    std::cout << out.payload.dump() << "\n";
  } else {
    for (const auto& l : out.lines) std::cout << l << "\n";
    std::cout << "time: " << out.elapsed_ms << " ms\n";
  }
}

std::uint64_t env_seed() {
  const char* env = std::getenv("PERMPROD_SEED");
  if (!env) return 0;
  return std::strtoull(env, nullptr, 10);
}

ordered_json envelope(const std::string& command, std::uint64_t seed) {
  ordered_json j;
  j["schema"] = "permprod/1";
  j["command"] = command;
  j["seed"] = seed;
  return j;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

int cmd_solve(int a, int b, int c, std::uint64_t seed, bool json) {
  const auto t0 = std::chrono::steady_clock::now();
  std::array<int, 3> sorted{a, b, c};
  std::sort(sorted.begin(), sorted.end());
  const SolveResult r = solve(sorted[0], sorted[1], sorted[2], seed);
  const auto slots = restore_slots(r, {a, b, c});
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  const bool product_ok = audit::product_is_identity({slots[0], slots[1], slots[2]});
  const bool orders_ok = audit::element_order(slots[0]) == static_cast<std::uint64_t>(a) &&
                         audit::element_order(slots[1]) == static_cast<std::uint64_t>(b) &&
                         audit::element_order(slots[2]) == static_cast<std::uint64_t>(c);
  const bool shape_ok =
      audit::triple_shape_ok(r.x, r.y, r.z, r.orders[0], r.orders[1], r.orders[2]);
  const bool ok = product_ok && orders_ok && shape_ok;

  Output out;
  out.json = json;
  out.elapsed_ms = ms;
  ordered_json j = envelope("solve", seed);
  j["orders"] = {a, b, c};
  // case, trace, and the transposition/fixed-point records describe the
  // sorted construction; x, y, z are the slots restored to the given order.
  j["sorted_orders"] = {sorted[0], sorted[1], sorted[2]};
  j["degree"] = slots[0].degree();
  j["case"] = to_string(r.tag.variant);
  j["trace"] = ordered_json::array();
  for (const auto& t : r.tag.recursion_trace) j["trace"].push_back({t[0], t[1], t[2]});
  j["x"] = print_cycles(slots[0]);
  j["y"] = print_cycles(slots[1]);
  j["z"] = print_cycles(slots[2]);
  j["exceptional_transposition"] = to_string(r.exceptional);
  if (r.fixed_point_on_big_cycle) {
    j["fixed_point_on_big_cycle"] = {{"holder", to_string(r.fixed_point_on_big_cycle->holder)},
                                     {"point", r.fixed_point_on_big_cycle->point}};
  }
  j["verification"] = {{"product_identity", product_ok},
                       {"orders", orders_ok},
                       {"shape", shape_ok},
                       {"ok", ok}};
  out.payload = std::move(j);
  out.line("orders (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
           ") solved in S_" + std::to_string(slots[0].degree()) + " via " +
           to_string(r.tag.variant));
  out.line("x = " + print_cycles(slots[0]));
  out.line("y = " + print_cycles(slots[1]));
  out.line("z = " + print_cycles(slots[2]));
  out.line(std::string("exceptional transposition: ") + to_string(r.exceptional));
  if (r.fixed_point_on_big_cycle)
    out.line(std::string("fixed point on big cycle: ") +
             to_string(r.fixed_point_on_big_cycle->holder) + " at " +
             std::to_string(r.fixed_point_on_big_cycle->point));
  out.line(std::string("verification: ") + (ok ? "ok" : "FAILED"));
  emit(out);
  return ok ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// extend
// ---------------------------------------------------------------------------

int cmd_extend(const std::vector<int>& orders, std::uint64_t seed, bool json) {
  const auto t0 = std::chrono::steady_clock::now();
  const ChainResult chain = extend(orders);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  bool ok = audit::product_is_identity(chain.elements);
  for (std::size_t i = 0; i < orders.size(); ++i)
    ok = ok && audit::element_order(chain.elements[i]) == static_cast<std::uint64_t>(orders[i]);

  Output out;
  out.json = json;
  out.elapsed_ms = ms;
  ordered_json j = envelope("extend", seed);
  j["orders"] = orders;
  j["degree"] = chain.degree();
  j["elements"] = ordered_json::array();
  for (const auto& e : chain.elements) j["elements"].push_back(print_cycles(e));
  j["verification"] = {{"product_identity", audit::product_is_identity(chain.elements)},
                       {"ok", ok}};
  out.payload = std::move(j);
  out.line("orders (" + join_ints(orders) + ") realized in S_" + std::to_string(chain.degree()));
  for (std::size_t i = 0; i < chain.elements.size(); ++i)
    out.line("x" + std::to_string(i + 1) + " = " + print_cycles(chain.elements[i]));
  out.line(std::string("verification: ") + (ok ? "ok" : "FAILED"));
  emit(out);
  return ok ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// survey
// ---------------------------------------------------------------------------

int cmd_survey(int max_n, int jobs, bool json) {
  const auto t0 = std::chrono::steady_clock::now();
  const SurveyReport report = survey(max_n, jobs);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  Output out;
  out.json = json;
  out.elapsed_ms = ms;
  ordered_json j = envelope("survey", 0);
  j["max_n"] = report.max_n;
  j["total_cells"] = report.total_cells;
  j["confirmed_cells"] = report.confirmed_cells;
  j["distinct_triples"] = report.distinct_triples;
  j["failures"] = ordered_json::array();
  for (const auto& t : report.failed_triples) j["failures"].push_back({t[0], t[1], t[2]});
  j["max_solve_ms"] = report.max_solve_ms;
  j["cells_per_n"] = ordered_json::array();
  for (const auto& [n, cells] : report.cells_per_n) j["cells_per_n"].push_back({n, cells});
  j["ok"] = report.all_confirmed();
  out.payload = std::move(j);
  out.line("survey up to n=" + std::to_string(report.max_n) + ": " +
           std::to_string(report.confirmed_cells) + "/" + std::to_string(report.total_cells) +
           " cells confirmed over " + std::to_string(report.distinct_triples) +
           " distinct triples");
  out.line("max solve time: " + std::to_string(report.max_solve_ms) + " ms");
  if (!report.failed_triples.empty()) {
    for (const auto& t : report.failed_triples)
      out.line("FAILED triple (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
               std::to_string(t[2]) + ")");
  } else {
    out.line("zero failures");
  }
  emit(out);
  return report.all_confirmed() ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// genus
// ---------------------------------------------------------------------------

int cmd_genus(const std::vector<std::string>& perm_texts, bool json) {
  std::vector<Permutation> tuple;
  int degree = 1;
  for (const auto& text : perm_texts) {
    tuple.push_back(parse_cycles(text));
    degree = std::max(degree, tuple.back().degree());
  }
  for (auto& p : tuple) p = embed(p, degree);
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = genus(tuple);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  Output out;
  out.json = json;
  out.elapsed_ms = ms;
  ordered_json j = envelope("genus", 0);
  j["degree"] = degree;
  j["orbits"] = ordered_json::array();
  for (const auto& og : result)
    j["orbits"].push_back({{"points", og.orbit}, {"genus", og.genus}});
  out.payload = std::move(j);
  for (const auto& og : result)
    out.line("orbit [" + join_ints(og.orbit) + "] genus " + std::to_string(og.genus));
  emit(out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// mindegree
// ---------------------------------------------------------------------------

int cmd_mindegree(int a, int b, int c, int max_degree, bool json) {
  SearchBudget budget;
  budget.max_degree = max_degree;
  const auto t0 = std::chrono::steady_clock::now();
  const int n = min_degree(a, b, c, budget);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  Output out;
  out.json = json;
  out.elapsed_ms = ms;
  ordered_json j = envelope("mindegree", 0);
  j["orders"] = {a, b, c};
  j["min_degree"] = n;
  out.payload = std::move(j);
  out.line("min degree for (" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ") = " + std::to_string(n));
  emit(out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// cover
// ---------------------------------------------------------------------------

int cmd_cover(std::vector<int> orders, bool json) {
  std::sort(orders.begin(), orders.end());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < orders.size(); ++i) labels.push_back("p" + std::to_string(i + 1));
  const auto t0 = std::chrono::steady_clock::now();
  const CoverReport report = branch_data_report(BranchSpec(orders, labels));
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  const bool ok = audit::product_is_identity(report.tuple.elements);

  Output out;
  out.json = json;
  out.elapsed_ms = ms;
  ordered_json env = envelope("cover", 0);
  env["orders"] = orders;
  env.update(ordered_json::parse(to_json_string(report)));
  env["verification"] = {{"product_identity", ok}, {"ok", ok}};
  out.payload = std::move(env);
  out.line(to_text(report));
  out.line(std::string("verification: ") + (ok ? "ok" : "FAILED"));
  emit(out);
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"product-one permutation tuples with prescribed orders"};
  app.require_subcommand(1);

  std::uint64_t seed = env_seed();
  bool json = false;

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "triple with orders a b c and product identity");
  std::vector<int> solve_orders;
  solve_cmd->add_option("orders", solve_orders, "orders a b c (each >= 2)")->expected(3);
  solve_cmd->add_option("--seed", seed, "search seed");
  solve_cmd->add_flag("--json", json, "machine-readable output");

  // extend
  auto* extend_cmd = app.add_subcommand("extend", "product-one tuple with orders a_1 ... a_r");
  std::vector<int> extend_orders;
  extend_cmd->add_option("orders", extend_orders, "orders (r >= 3, each >= 2)")->expected(-3);
  extend_cmd->add_option("--seed", seed, "search seed");
  extend_cmd->add_flag("--json", json, "machine-readable output");

  // survey
  auto* survey_cmd = app.add_subcommand("survey", "verify all order triples up to a degree bound");
  int max_n = 0;
  int jobs = 1;
  survey_cmd->add_option("--max-n", max_n, "largest degree n")->required();
  survey_cmd->add_option("--jobs", jobs, "worker threads");
  survey_cmd->add_flag("--json", json, "machine-readable output");

  // genus
  auto* genus_cmd = app.add_subcommand("genus", "per-orbit genus of a product-one tuple");
  std::vector<std::string> genus_perms;
  genus_cmd->add_option("permutations", genus_perms, "cycle-notation permutations")
      ->expected(-1);
  genus_cmd->add_flag("--json", json, "machine-readable output");

  // mindegree
  auto* mind_cmd = app.add_subcommand("mindegree", "least degree admitting an order triple");
  std::vector<int> mind_orders;
  int mind_cap = 10;
  mind_cmd->add_option("orders", mind_orders, "orders a b c")->expected(3);
  mind_cmd->add_option("--max-degree", mind_cap, "exhaustive search bound");
  mind_cmd->add_flag("--json", json, "machine-readable output");

  // cover
  auto* cover_cmd = app.add_subcommand("cover", "branch data report for prescribed orders");
  std::vector<int> cover_orders;
  cover_cmd->add_option("orders", cover_orders, "orders (r >= 3, each >= 2)")->expected(-3);
  cover_cmd->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) {
      for (int o : solve_orders)
        if (o < 2) {
          std::cerr << "orders must be at least 2\n";
          return kExitUsage;
        }
      return cmd_solve(solve_orders[0], solve_orders[1], solve_orders[2], seed, json);
    }
    if (*extend_cmd) {
      for (int o : extend_orders)
        if (o < 2) {
          std::cerr << "orders must be at least 2\n";
          return kExitUsage;
        }
      return cmd_extend(extend_orders, seed, json);
    }
    if (*survey_cmd) {
      if (max_n < 4) {
        std::cerr << "--max-n must be at least 4\n";
        return kExitUsage;
      }
      return cmd_survey(max_n, jobs, json);
    }
    if (*genus_cmd) return cmd_genus(genus_perms, json);
    if (*mind_cmd) {
      for (int o : mind_orders)
        if (o < 1) {
          std::cerr << "orders must be positive\n";
          return kExitUsage;
        }
      return cmd_mindegree(mind_orders[0], mind_orders[1], mind_orders[2], mind_cap, json);
    }
    if (*cover_cmd) {
      for (int o : cover_orders)
        if (o < 2) {
          std::cerr << "orders must be at least 2\n";
          return kExitUsage;
        }
      return cmd_cover(cover_orders, json);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ProductNotIdentity& e) {
    std::cerr << "invalid tuple: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutOfRange& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArity& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
