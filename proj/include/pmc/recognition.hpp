#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmc/complex.hpp"

namespace pmc {

enum class SurfaceKind {
  sphere,
  torus,
  projective_plane,
  klein_bottle,
  orientable_genus_g,
  nonorientable_genus_k,
  not_a_surface,
};

std::string to_string(SurfaceKind kind);

struct SurfaceType {
  SurfaceKind kind = SurfaceKind::not_a_surface;
  int vertex_count = 0;
  int genus = 0;  // orientable genus or number of cross-caps; 0 when not applicable

  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

/// "sphere", "torus", "genus-2 orientable", ...
std::string describe(const SurfaceType& s);

struct SingularVertex {
  Vertex vertex;
  SurfaceType link_type;
};

struct RecognitionReport {
  int dim = 0;
  bool is_pure = true;
  bool is_weak_pm = false;
  bool is_strongly_connected = false;
  bool is_pseudomanifold = false;
  bool is_normal = false;
  // Decided for dim <= 3 only.
  std::optional<bool> is_combinatorial_manifold;
  std::vector<SingularVertex> singular_vertices;
};

bool is_weak_pseudomanifold(const Complex& k);

/// Adjacency lists of the facet graph: facets (by index into k.facets())
/// sharing a (d-1)-face.
std::vector<std::vector<int>> facet_adjacency(const Complex& k);
bool is_strongly_connected(const Complex& k);

/// Weak pseudomanifold with a connected facet graph. In dimension 0 only the
/// two-point sphere qualifies.
bool is_pseudomanifold(const Complex& k);

/// Connected weak pseudomanifold whose faces of dimension <= d-2 have
/// connected links. Always false in dimension 0.
bool is_normal(const Complex& k);

/// Orientation propagation across (d-1)-faces; false when some (d-1)-face is
/// not in exactly two facets.
bool is_orientable(const Complex& k);

/// Closed connected combinatorial 2-manifolds by Euler characteristic and
/// orientability; everything else is not_a_surface.
SurfaceType classify_surface(const Complex& k);

/// Vertices of a 3-dimensional complex whose link is not a 2-sphere.
std::vector<SingularVertex> singular_vertices(const Complex& k);
bool is_combinatorial_3_manifold(const Complex& k);

RecognitionReport recognize(const Complex& k);

}  // namespace pmc
