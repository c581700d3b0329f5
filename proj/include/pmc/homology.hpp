#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pmc/complex.hpp"

namespace pmc {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rows are the (i-1)-faces and columns the i-faces, both sorted.
struct BoundaryMatrix {
  std::vector<Simplex> rows;
  std::vector<Simplex> cols;
  IntMatrix entries;
};

/// Entry (tau, sigma) is (-1)^k when tau is sigma without its k-th smallest
/// vertex (counting from 0). Requires 1 <= i <= dim K.
BoundaryMatrix boundary_matrix(const Complex& k, int i);

struct SmithForm {
  std::size_t rank = 0;
  std::vector<BigInt> factors;  // d_1 | d_2 | ... | d_rank, all positive
  bool used_bigint = false;     // the machine-word pass overflowed
};

SmithForm smith_normal_form(const IntMatrix& m);

/// H_i = Z^betti[i] + sum Z_t over torsion[i]; unreduced.
struct HomologyProfile {
  std::vector<long> betti;
  std::vector<std::vector<BigInt>> torsion;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile homology(const Complex& k);

/// "Z^8", "Z^2 + Z_2", "0"
std::string format_group(long betti, const std::vector<BigInt>& torsion);

}  // namespace pmc
