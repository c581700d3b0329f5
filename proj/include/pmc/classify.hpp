#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pmc/complex.hpp"

namespace pmc::classify {

/// Every weak 2-pseudomanifold using exactly the vertices 0..n-1, up to
/// isomorphism. Results are canonical forms sorted by canonical key.
/// Requires 4 <= n <= 10.
std::vector<Complex> enumerate_weak_2pm(int n);

struct SearchOptions {
  bool symmetry = true;  // prune completions by automorphisms of the fixed vertex link
  int jobs = 1;
};

/// 8-vertex neighbourly normal 3-pseudomanifolds up to isomorphism, found by
/// fixing the link of vertex 7 among the closed surfaces on 7 vertices and
/// completing the remaining facets.
std::vector<Complex> enumerate_neighbourly_normal_8(const SearchOptions& options = {});

/// Flat search: every normal 3-pseudomanifold on exactly n vertices, grown
/// facet by facet from 0123. Independent of the move machinery.
std::vector<Complex> enumerate_normal_3pm(int n, int jobs = 1);

struct ClassRecord {
  Complex form;  // canonical, on 0..n-1
  std::vector<std::uint64_t> key;
  std::string name = "UNMATCHED";
  int non_edges = 0;  // layer
  bool neighbourly = false;
  bool manifold = false;
  std::vector<long> f;
  long chi = 0;
  std::vector<std::pair<Vertex, std::string>> singular_links;  // canonical labels
};

struct PosetEdge {
  int parent = 0;
  int child = 0;
  Simplex alpha;  // removable edge of the parent's canonical form
  // After catalog matching: every edge of the named parent whose move gives
  // the child, in catalog labels.
  std::vector<Simplex> named_alphas;
  friend bool operator==(const PosetEdge&, const PosetEdge&) = default;
};

struct CensusReport {
  std::vector<ClassRecord> classes;  // sorted by (non_edges, key)
  std::vector<PosetEdge> edges;      // sorted, one per (parent, child)
};

/// Breadth-first closure under bistellar 2-moves. Throws IntegrityError when
/// a recorded move fails to re-verify.
CensusReport close_under_2moves(const std::vector<Complex>& seeds, int jobs = 1);

/// Names every class after the catalog entry with the same canonical form
/// and relabels poset edges into catalog labels. Throws IntegrityError, listing facets, on an unmatched class or a catalog
/// entry matched by no class.
void match_catalog(CensusReport& report);

/// Neighbourly seeds, 2-move closure and catalog matching.
CensusReport run_census(const SearchOptions& options = {});

/// N-series rows: name, (f1,f2,f3), chi, n_s, singular link names.
std::string emit_table1(const CensusReport& report);
/// DOT Hasse diagram of the classes whose names start with prefix.
std::string emit_hasse(const CensusReport& report, const std::string& prefix, const std::string& graph_name);
std::string census_json(const CensusReport& report);

/// Runs fn(i) for i in [0, n) on up to jobs threads.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace pmc::classify
