#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmc/complex.hpp"
#include "pmc/iso.hpp"

namespace pmc::catalog {

/// Entry names in manifest order.
std::vector<std::string> list();
bool contains(const std::string& name);
/// One-line description of how the entry is built.
std::string source_of(const std::string& name);

/// Materializes the entry and checks its expected invariants on first
/// access; later calls return the cached complex. Throws InvalidArgument on
/// an unknown name and IntegrityError when a check fails.
Complex get(const std::string& name);
/// Materializes without checking.
Complex build(const std::string& name);

/// K^d_{2d+3} on labels 1..2d+3 (d >= 2).
Complex k_manifold(int d);
/// A^d_{2d+4}: a ball of K^d_{2d+3} replaced by the cone from 0 over its
/// boundary (d = 3, 4).
Complex a_complex(int d);
/// N_3 with the facets 1248 and 3568 replaced by eight facets through 9.
Complex b39();
/// The named surfaces S_1..S_9, R_1..R_4, T, P_1..P_4.
Complex seven_vertex_surface(const std::string& name);

/// Name of the surface isomorphic to k, if any.
std::optional<std::string> name_surface(const Complex& k);
/// LinkNamer backed by name_surface, for are_isomorphic diagnostics.
LinkNamer link_namer();

struct CheckResult {
  std::string entry;  // entry name, or "relation" / "pairwise"
  std::string check;
  bool ok = false;
  std::string detail;
};

/// Every expected invariant of one entry.
std::vector<CheckResult> verify_entry(const std::string& name);
/// Every entry, every relation between entries, and pairwise distinctness of
/// the S and N series.
std::vector<CheckResult> verify_all();

}  // namespace pmc::catalog
