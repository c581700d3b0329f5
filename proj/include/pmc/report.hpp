#pragma once

#include <string>
#include <vector>

namespace pmc {

/// Degree sequence in exponent notation, largest first: "6^3.5^3.3".
std::string format_degree_sequence(std::vector<int> degrees);

/// "(8,28,56,28)"
std::string format_tuple(const std::vector<long>& values);

}  // namespace pmc
