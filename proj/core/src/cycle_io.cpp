#include "permprod/cycle_io.hpp"

#include <algorithm>
#include <cctype>

namespace permprod {

std::string print_cycles(const Permutation& p) {
  const auto cycles = p.cycles();
  if (cycles.empty()) return "()@" + std::to_string(p.degree());
  std::string out;
  int max_moved = 0;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cycle[i]);
      max_moved = std::max(max_moved, cycle[i]);
    }
    out += ')';
  }
  if (max_moved != p.degree()) out += "@" + std::to_string(p.degree());
  return out;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool done() {
    skip_space();
    return pos_ == text_.size();
  }

  int read_int() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer at offset " + std::to_string(start));
    long long value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + (text_[i] - '0');
      if (value > 1000000) throw ParseError("point label too large");
    }
    return static_cast<int>(value);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_cycles(std::string_view text) {
  Scanner scan(text);
  std::vector<std::vector<int>> cycles;
  int max_point = 0;
  bool saw_group = false;
  while (scan.eat('(')) {
    saw_group = true;
    std::vector<int> cycle;
    if (!scan.eat(')')) {
      cycle.push_back(scan.read_int());
      while (scan.eat(',')) cycle.push_back(scan.read_int());
      if (!scan.eat(')')) throw ParseError("expected ')' in cycle notation");
    }
    if (cycle.size() == 1) throw ParseError("length-1 cycles are implicit; omit them");
    for (int pt : cycle) {
      if (pt < 1) throw ParseError("points are 1-based");
      max_point = std::max(max_point, pt);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  if (!saw_group) throw ParseError("expected at least one '(' group");
  int degree = max_point;
  if (scan.eat('@')) degree = scan.read_int();
  if (!scan.done()) throw ParseError("trailing characters after permutation");
  if (degree < max_point)
    throw ParseError("declared degree " + std::to_string(degree) + " below largest point " +
                     std::to_string(max_point));
  if (degree == 0) throw ParseError("identity needs an explicit degree, e.g. ()@3");
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const OutOfRange& e) {
    throw ParseError(e.what());
  }
}

}  // namespace permprod
