#include "pmc/recognition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pmc {

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::sphere: return "sphere";
    case SurfaceKind::torus: return "torus";
    case SurfaceKind::projective_plane: return "projective_plane";
    case SurfaceKind::klein_bottle: return "klein_bottle";
    case SurfaceKind::orientable_genus_g: return "orientable_genus_g";
    case SurfaceKind::nonorientable_genus_k: return "nonorientable_genus_k";
    case SurfaceKind::not_a_surface: return "not_a_surface";
  }
  return "not_a_surface";
}

std::string describe(const SurfaceType& s) {
  switch (s.kind) {
    case SurfaceKind::orientable_genus_g: return "orientable genus " + std::to_string(s.genus);
    case SurfaceKind::nonorientable_genus_k: return "non-orientable genus " + std::to_string(s.genus);
    case SurfaceKind::projective_plane: return "projective plane";
    case SurfaceKind::klein_bottle: return "Klein bottle";
    case SurfaceKind::not_a_surface: return "not a surface";
    default: return to_string(s.kind);
  }
}

namespace {

// (d-1)-face -> indices of the facets containing it
std::map<Simplex, std::vector<int>> ridge_incidence(const Complex& k) {
  std::map<Simplex, std::vector<int>> out;
  const auto facets = k.facets();
  for (int i = 0; i < static_cast<int>(facets.size()); ++i)
    for (Vertex v : facets[i].vertices()) out[facets[i].without(v)].push_back(i);
  return out;
}

bool is_two_point_sphere(const Complex& k) { return k.dim() == 0 && k.num_facets() == 2; }

// Position of v among the vertices of s, counted from 0.
int position(Simplex s, Vertex v) {
  return std::popcount(s.mask() & ((std::uint64_t{1} << v) - 1));
}

}  // namespace

bool is_weak_pseudomanifold(const Complex& k) {
  if (k.dim() == 0) return is_two_point_sphere(k);
  for (const auto& [ridge, owners] : ridge_incidence(k))
    if (owners.size() != 2) return false;
  return true;
}

std::vector<std::vector<int>> facet_adjacency(const Complex& k) {
  std::vector<std::vector<int>> adj(k.num_facets());
  if (k.dim() == 0) return adj;
  for (const auto& [ridge, owners] : ridge_incidence(k))
    for (std::size_t a = 0; a < owners.size(); ++a)
      for (std::size_t b = a + 1; b < owners.size(); ++b) {
        adj[owners[a]].push_back(owners[b]);
        adj[owners[b]].push_back(owners[a]);
      }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

bool is_strongly_connected(const Complex& k) {
  const auto adj = facet_adjacency(k);
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int g : adj[f])
      if (!seen[g]) {
        seen[g] = 1;
        ++count;
        stack.push_back(g);
      }
  }
  return count == adj.size();
}

bool is_pseudomanifold(const Complex& k) {
  if (k.dim() == 0) return is_two_point_sphere(k);
  return is_weak_pseudomanifold(k) && is_strongly_connected(k);
}

bool is_normal(const Complex& k) {
  if (k.dim() == 0) return false;
  if (!is_weak_pseudomanifold(k) || num_components(k) != 1) return false;
  for (int i = 0; i <= k.dim() - 2; ++i)
    for (Simplex s : faces(k, i))
      if (num_components(link(k, s)) != 1) return false;
  return true;
}

bool is_orientable(const Complex& k) {
  if (k.dim() == 0) return true;
  const auto facets = k.facets();
  const auto incidence = ridge_incidence(k);
  std::vector<int> sign(facets.size(), 0);
  for (std::size_t start = 0; start < facets.size(); ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (Vertex v : facets[f].vertices()) {
        const Simplex ridge = facets[f].without(v);
        const auto& owners = incidence.at(ridge);
        if (owners.size() != 2) return false;
        const int g = owners[0] == f ? owners[1] : owners[0];
        // induced orientations on the shared ridge must cancel
        const Vertex w = (facets[g] - ridge).min_vertex();
        const int induced_f = sign[f] * ((position(facets[f], v) % 2) ? -1 : 1);
        const int want_g = -induced_f * ((position(facets[g], w) % 2) ? -1 : 1);
        if (sign[g] == 0) {
          sign[g] = want_g;
          stack.push_back(g);
        } else if (sign[g] != want_g) {
          return false;
        }
      }
    }
  }
  return true;
}

SurfaceType classify_surface(const Complex& k) {
  SurfaceType out;
  out.vertex_count = k.num_vertices();
  if (k.dim() != 2 || !is_weak_pseudomanifold(k) || num_components(k) != 1) return out;
  // every vertex link must be a single cycle
  for (Vertex v : k.vertices())
    if (num_components(link(k, Simplex::single(v))) != 1) return out;
  const long chi = euler_characteristic(k);
  const bool orientable = is_orientable(k);
  if (orientable) {
    if (chi > 2 || chi % 2 != 0) return out;
    out.genus = static_cast<int>((2 - chi) / 2);
    out.kind = out.genus == 0 ? SurfaceKind::sphere : out.genus == 1 ? SurfaceKind::torus : SurfaceKind::orientable_genus_g;
  } else {
    if (chi > 1) return out;
    out.genus = static_cast<int>(2 - chi);
    out.kind = out.genus == 1   ? SurfaceKind::projective_plane
               : out.genus == 2 ? SurfaceKind::klein_bottle
                                : SurfaceKind::nonorientable_genus_k;
  }
  if (out.kind == SurfaceKind::sphere) out.genus = 0;
  return out;
}

std::vector<SingularVertex> singular_vertices(const Complex& k) {
  if (k.dim() != 3) throw InvalidArgument("singular vertices are defined here for 3-dimensional complexes");
  std::vector<SingularVertex> out;
  for (Vertex v : k.vertices()) {
    const SurfaceType t = classify_surface(link(k, Simplex::single(v)));
    if (t.kind != SurfaceKind::sphere) out.push_back({v, t});
  }
  return out;
}

bool is_combinatorial_3_manifold(const Complex& k) {
  return k.dim() == 3 && is_weak_pseudomanifold(k) && num_components(k) == 1 && singular_vertices(k).empty();
}

RecognitionReport recognize(const Complex& k) {
  RecognitionReport r;
  r.dim = k.dim();
  r.is_weak_pm = is_weak_pseudomanifold(k);
  r.is_strongly_connected = k.dim() == 0 ? is_two_point_sphere(k) : is_strongly_connected(k);
  r.is_pseudomanifold = is_pseudomanifold(k);
  r.is_normal = r.is_weak_pm && is_normal(k);
  switch (k.dim()) {
    case 0:
      r.is_combinatorial_manifold = is_two_point_sphere(k);
      break;
    case 1:
      r.is_combinatorial_manifold = r.is_weak_pm && num_components(k) == 1;
      break;
    case 2:
      r.is_combinatorial_manifold = classify_surface(k).kind != SurfaceKind::not_a_surface;
      break;
    case 3:
      if (r.is_normal) r.singular_vertices = singular_vertices(k);
      r.is_combinatorial_manifold = r.is_normal && r.singular_vertices.empty();
      break;
    default:
      break;
  }
  return r;
}

}  // namespace pmc
