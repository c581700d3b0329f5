#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pmc/simplex.hpp"

namespace pmc {

/// A finite pure simplicial complex, stored as its set of facets.
///
/// Complexes are immutable values. Facets are kept sorted (lexicographically on
/// vertex lists), so two complexes compare equal exactly when their facet sets
/// agree.
class Complex {
 public:
  /// Throws InvalidArgument when empty, when facets have mixed sizes or when a
  /// facet repeats.
  explicit Complex(std::vector<Simplex> facets);

  static Complex from_lists(std::initializer_list<std::initializer_list<Vertex>> facets);

  int dim() const noexcept { return dim_; }
  std::span<const Simplex> facets() const noexcept { return facets_; }
  std::size_t num_facets() const noexcept { return facets_.size(); }
  Simplex vertex_set() const noexcept { return vertices_; }
  int num_vertices() const noexcept { return vertices_.size(); }
  std::vector<Vertex> vertices() const { return vertices_.vertices(); }

  bool has_face(Simplex s) const noexcept;
  bool has_facet(Simplex s) const noexcept;

  /// Image under a vertex relabeling; map[v] is the new label of v.
  Complex relabeled(std::span<const Vertex> map) const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  std::vector<Simplex> facets_;
  Simplex vertices_;
  int dim_ = 0;
};

/// A simple graph on a subset of the vertex labels.
struct Graph {
  Simplex vertices;
  std::vector<Simplex> edges;  // two-element simplices, sorted

  std::vector<int> degree_sequence() const;  // sorted descending
  friend bool operator==(const Graph&, const Graph&) = default;
};

/// The maximal faces of an induced subcomplex, which need not be pure.
struct InducedComplex {
  std::vector<Simplex> maximal_faces;
  bool pure = true;

  std::optional<Complex> as_complex() const;
};

/// Every i-face of K, sorted. Throws InvalidArgument unless 0 <= i <= dim K.
std::vector<Simplex> faces(const Complex& k, int i);

/// Face counts (f_0, ..., f_d).
std::vector<long> f_vector(const Complex& k);
long euler_characteristic(const Complex& k);

/// Link of a non-maximal face. Throws InvalidArgument when sigma is not a face
/// or is a facet.
Complex link(const Complex& k, Simplex sigma);

/// Number of vertices of the link of sigma (0 for a facet).
int degree(const Complex& k, Simplex sigma);

/// Mask of the vertices adjacent to v.
Simplex neighbours(const Complex& k, Vertex v);

InducedComplex induced(const Complex& k, Simplex vertex_subset);
bool is_neighbourly(const Complex& k);
Graph edge_graph(const Complex& k);
Graph non_edge_graph(const Complex& k);

/// Graph of the edges of degree n.
Graph g_n_graph(const Complex& k, int n);

/// Join of complexes on disjoint vertex sets.
Complex join(const Complex& x, const Complex& y);

/// One-point suspension: u in V(K) is doubled by the fresh vertex v.
Complex one_point_suspension(const Complex& k, Vertex u, Vertex v);

/// Boundary of the simplex on the given d + 2 vertices.
Complex standard_sphere(int d, Simplex vertex_set);

/// The cycle a1 a2 ... an a1.
Complex cycle(const std::vector<Vertex>& vertices);

/// Connected components of the 1-skeleton.
int num_components(const Complex& k);

}  // namespace pmc
