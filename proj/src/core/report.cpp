#include "pmc/report.hpp"

#include <algorithm>

namespace pmc {

std::string format_degree_sequence(std::vector<int> degrees) {
  std::sort(degrees.rbegin(), degrees.rend());
  std::string out;
  for (std::size_t i = 0; i < degrees.size();) {
    std::size_t j = i;
    while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
    if (!out.empty()) out += '.';
    out += std::to_string(degrees[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "-" : out;
}

std::string format_tuple(const std::vector<long>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + ")";
}

}  // namespace pmc
