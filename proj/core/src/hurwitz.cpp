#include "permprod/hurwitz.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "permprod/cycle_io.hpp"

namespace permprod {

BranchSpec::BranchSpec(std::vector<int> orders_in, std::vector<std::string> branch_points_in)
    : orders(std::move(orders_in)), branch_points(std::move(branch_points_in)) {
  if (orders.size() < 3) throw InvalidArity("branch data needs at least three points");
  if (!std::is_sorted(orders.begin(), orders.end()))
    throw OutOfRange("branch orders must be ascending");
  for (int o : orders)
    if (o < 2) throw OutOfRange("branch orders must be at least 2");
  if (branch_points.size() != orders.size())
    throw OutOfRange("need exactly one label per branch point");
  std::set<std::string> distinct(branch_points.begin(), branch_points.end());
  if (distinct.size() != branch_points.size())
    throw OutOfRange("branch point labels must be distinct");
}

std::vector<OrbitGenus> genus(std::span<const Permutation> tuple) {
  if (tuple.empty()) throw InvalidArity("genus needs at least one permutation");
  Permutation product = tuple.front();
  for (std::size_t i = 1; i < tuple.size(); ++i) product = compose(product, tuple[i]);
  if (!product.is_identity()) throw ProductNotIdentity("tuple does not multiply to the identity");

  std::vector<OrbitGenus> result;
  for (const auto& orbit : orbits(tuple)) {
    const int m = static_cast<int>(orbit.size());
    long long index_sum = 0;
    for (const auto& p : tuple) {
      // Cycles of p inside the orbit (p preserves it).
      std::set<int> seen;
      int cycles = 0;
      for (int start : orbit) {
        if (seen.count(start)) continue;
        ++cycles;
        for (int x = start; !seen.count(x); x = p.apply(x)) seen.insert(x);
      }
      index_sum += m - cycles;
    }
    const long long doubled = -2LL * (m - 1) + index_sum;
    if (doubled % 2 != 0)
      throw NonIntegralGenus("orbit genus is not an integer (index sum " +
                             std::to_string(index_sum) + " on " + std::to_string(m) + " points)");
    const long long g = doubled / 2;
    if (g < 0) throw NonIntegralGenus("orbit genus is negative");
    result.push_back(OrbitGenus{orbit, g});
  }
  return result;
}

const char* to_string(Necessity n) {
  switch (n) {
    case Necessity::Admissible: return "admissible";
    case Necessity::ParityFail: return "parity-fail";
    case Necessity::GenusFail: return "genus-fail";
  }
  return "?";
}

Necessity necessity_check(std::span<const ClassSpec> classes) {
  if (classes.empty()) throw InvalidArity("necessity check needs at least one class");
  const int n = classes.front().degree;
  long long index_sum = 0;
  for (const auto& spec : classes) {
    if (spec.degree != n) throw DegreeMismatch("classes live in different symmetric groups");
    index_sum += spec.cycle_type.index();
  }
  if (index_sum % 2 != 0) return Necessity::ParityFail;
  if (index_sum < 2LL * (n - 1)) return Necessity::GenusFail;
  return Necessity::Admissible;
}

CoverReport branch_data_report(const BranchSpec& spec) {
  CoverReport report;
  report.tuple = extend(spec.orders);
  report.degree = report.tuple.degree();
  for (std::size_t i = 0; i < spec.orders.size(); ++i) {
    const auto parts = cycle_type(report.tuple.elements[i]).parts();
    for (int part : parts)
      if (part != 1 && part != 2 && part != spec.orders[i])
        throw Error("internal: ramification outside {1, 2, order}");
    report.per_point_ramification.emplace_back(spec.branch_points[i], parts);
  }
  report.genus_per_orbit = genus(report.tuple.elements);
  return report;
}

std::string to_text(const CoverReport& report) {
  std::ostringstream out;
  out << "degree " << report.degree << "\n";
  for (std::size_t i = 0; i < report.per_point_ramification.size(); ++i) {
    const auto& [label, parts] = report.per_point_ramification[i];
    out << label << ": " << print_cycles(report.tuple.elements[i]) << " ramification {";
    for (std::size_t j = 0; j < parts.size(); ++j) out << (j ? "," : "") << parts[j];
    out << "}\n";
  }
  for (const auto& og : report.genus_per_orbit) {
    out << "orbit [";
    for (std::size_t j = 0; j < og.orbit.size(); ++j) out << (j ? "," : "") << og.orbit[j];
    out << "] genus " << og.genus << "\n";
  }
  return out.str();
}

std::string to_json_string(const CoverReport& report) {
  nlohmann::ordered_json j;
  j["degree"] = report.degree;
  j["elements"] = nlohmann::ordered_json::array();
  for (const auto& p : report.tuple.elements) j["elements"].push_back(print_cycles(p));
  j["ramification"] = nlohmann::ordered_json::array();
  for (const auto& [label, parts] : report.per_point_ramification) {
    nlohmann::ordered_json entry;
    entry["point"] = label;
    entry["cycle_lengths"] = parts;
    j["ramification"].push_back(entry);
  }
  j["orbits"] = nlohmann::ordered_json::array();
  for (const auto& og : report.genus_per_orbit) {
    nlohmann::ordered_json entry;
    entry["points"] = og.orbit;
    entry["genus"] = og.genus;
    j["orbits"].push_back(entry);
  }
  return j.dump();
}

}  // namespace permprod
