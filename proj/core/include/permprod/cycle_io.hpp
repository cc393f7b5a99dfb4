#pragma once

#include <string>
#include <string_view>

#include "permprod/permutation.hpp"

namespace permprod {

// Cycle-notation text format: "(1,2,3)(4,5)" with an optional "@n" degree
// suffix, e.g. "(1,2)@5".  The identity is "()@n".  Without "@n" the degree
// is the largest point mentioned.  print/parse round-trips losslessly.
std::string print_cycles(const Permutation& p);

Permutation parse_cycles(std::string_view text);

}  // namespace permprod
