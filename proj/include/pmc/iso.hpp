#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pmc/complex.hpp"
#include "pmc/recognition.hpp"

namespace pmc {

/// A vertex map stored densely: perm[v] is the image of v, or -1 when v is
/// outside the domain.
using VertexMap = std::vector<Vertex>;

VertexMap identity_map(Simplex domain);

/// "(1,7,3)(2,8,4,5,6)"; fixed points are omitted and the identity is "()".
std::string format_cycles(const VertexMap& map);

/// Cycle notation when map permutes its domain, otherwise "0->3 1->5 ...".
std::string format_map(const VertexMap& map);

/// Inverse of format_cycles; points not mentioned are fixed. Cycles may be
/// separated by spaces or nothing.
VertexMap parse_cycles(const std::string& text, Simplex domain);

VertexMap compose(const VertexMap& outer, const VertexMap& inner);
VertexMap inverse(const VertexMap& map);

/// True when map is a bijection V(K) -> V(L) carrying facets onto facets.
bool is_isomorphism(const Complex& k, const Complex& l, const VertexMap& map);

struct LinkType {
  SurfaceKind kind = SurfaceKind::not_a_surface;  // meaningful for 2-dimensional links
  std::vector<long> f;
  std::vector<int> degrees;

  auto operator<=>(const LinkType&) const = default;
};

LinkType link_type(const Complex& link);

struct Fingerprint {
  std::vector<long> f;
  std::vector<int> vertex_degrees;
  std::vector<LinkType> links;  // sorted
  std::vector<int> edge_degrees;
  std::map<int, std::vector<int>> g_n;  // degree sequence of G_n for every n that occurs
  std::vector<int> neg;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Complex& k);

/// Names a vertex link for diagnostics; returns nullopt to fall back to a
/// structural description.
using LinkNamer = std::function<std::optional<std::string>(const Complex&)>;

struct IsoResult {
  bool isomorphic = false;
  VertexMap map;          // K -> L when isomorphic
  std::string invariant;  // first distinguishing invariant otherwise
  std::string detail;     // "<value for K> vs <value for L>"
};

IsoResult are_isomorphic(const Complex& k, const Complex& l, const LinkNamer& namer = {});

struct Canonical {
  Complex form;       // relabeled onto 0..n-1
  VertexMap labeling; // K -> form
};

Canonical canonical_labeling(const Complex& k);
Complex canonical_form(const Complex& k);

/// Sorted facet masks of the canonical form; a cheap dedup key.
std::vector<std::uint64_t> canonical_key(const Complex& k);
std::vector<std::uint64_t> canonical_key(std::vector<std::uint64_t> facets);

/// Every automorphism, sorted, identity first.
std::vector<VertexMap> automorphisms(const Complex& k);

}  // namespace pmc
