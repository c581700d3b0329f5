#include "pmc/complex.hpp"

#include <algorithm>
#include <numeric>

namespace pmc {

Complex::Complex(std::vector<Simplex> facets) : facets_(std::move(facets)) {
  if (facets_.empty()) throw InvalidArgument("a complex needs at least one facet");
  const int size = facets_.front().size();
  if (size == 0) throw InvalidArgument("empty facet");
  std::uint64_t all = 0;
  for (Simplex f : facets_) {
    if (f.size() != size) throw InvalidArgument("facets of mixed dimension: " + format_face(f));
    all |= f.mask();
  }
  std::sort(facets_.begin(), facets_.end());
  const auto dup = std::adjacent_find(facets_.begin(), facets_.end());
  if (dup != facets_.end()) throw InvalidArgument("repeated facet " + format_face(*dup));
  vertices_ = Simplex(all);
  dim_ = size - 1;
}

Complex Complex::from_lists(std::initializer_list<std::initializer_list<Vertex>> facets) {
  std::vector<Simplex> out;
  out.reserve(facets.size());
  for (auto f : facets) out.push_back(Simplex::of(f));
  return Complex(std::move(out));
}

bool Complex::has_face(Simplex s) const noexcept {
  if (s.empty()) return false;
  return std::any_of(facets_.begin(), facets_.end(), [s](Simplex f) { return f.contains(s); });
}

bool Complex::has_facet(Simplex s) const noexcept {
  return std::binary_search(facets_.begin(), facets_.end(), s);
}

Complex Complex::relabeled(std::span<const Vertex> map) const {
  std::vector<Simplex> out;
  out.reserve(facets_.size());
  for (Simplex f : facets_) {
    std::uint64_t m = 0;
    for (std::uint64_t b = f.mask(); b != 0; b &= b - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(b));
      if (v >= map.size()) throw InvalidArgument("relabeling does not cover vertex " + std::to_string(v));
      const Vertex w = map[v];
      if (w < 0 || w > kMaxVertex) throw InvalidArgument("relabeling target out of range");
      m |= std::uint64_t{1} << w;
    }
    if (std::popcount(m) != f.size()) throw InvalidArgument("relabeling is not injective on a facet");
    out.emplace_back(m);
  }
  return Complex(std::move(out));
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> deg(64, 0);
  for (Simplex e : edges)
    for (Vertex v : e.vertices()) ++deg[v];
  std::vector<int> out;
  for (Vertex v : vertices.vertices()) out.push_back(deg[v]);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::optional<Complex> InducedComplex::as_complex() const {
  if (!pure || maximal_faces.empty()) return std::nullopt;
  return Complex(maximal_faces);
}

std::vector<Simplex> faces(const Complex& k, int i) {
  if (i < 0 || i > k.dim()) throw InvalidArgument("face dimension " + std::to_string(i) + " out of range");
  std::vector<Simplex> out;
  for (Simplex f : k.facets()) for_each_subset(f.mask(), i + 1, [&](Simplex s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<long> f_vector(const Complex& k) {
  std::vector<long> f;
  for (int i = 0; i <= k.dim(); ++i) f.push_back(static_cast<long>(faces(k, i).size()));
  return f;
}

long euler_characteristic(const Complex& k) {
  long chi = 0;
  const auto f = f_vector(k);
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f[i];
  return chi;
}

Complex link(const Complex& k, Simplex sigma) {
  if (!k.has_face(sigma)) throw InvalidArgument("not a face: " + format_face(sigma));
  if (sigma.size() == k.dim() + 1) throw InvalidArgument("the link of a facet is empty: " + format_face(sigma));
  std::vector<Simplex> out;
  for (Simplex f : k.facets())
    if (f.contains(sigma)) out.push_back(f - sigma);
  return Complex(std::move(out));
}

int degree(const Complex& k, Simplex sigma) {
  std::uint64_t m = 0;
  for (Simplex f : k.facets())
    if (f.contains(sigma)) m |= f.mask();
  return std::popcount(m & ~sigma.mask());
}

Simplex neighbours(const Complex& k, Vertex v) {
  std::uint64_t m = 0;
  for (Simplex f : k.facets())
    if (f.contains(v)) m |= f.mask();
  return Simplex(m).without(v);
}

InducedComplex induced(const Complex& k, Simplex vertex_subset) {
  std::vector<Simplex> cut;
  for (Simplex f : k.facets()) {
    const Simplex c = f & vertex_subset;
    if (!c.empty()) cut.push_back(c);
  }
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  InducedComplex out;
  for (Simplex c : cut) {
    const bool maximal = std::none_of(cut.begin(), cut.end(), [c](Simplex o) { return o != c && o.contains(c); });
    if (maximal) out.maximal_faces.push_back(c);
  }
  for (std::size_t i = 1; i < out.maximal_faces.size(); ++i)
    if (out.maximal_faces[i].size() != out.maximal_faces[0].size()) out.pure = false;
  return out;
}

bool is_neighbourly(const Complex& k) {
  const long n = k.num_vertices();
  if (k.dim() == 0) return n == 1;
  return static_cast<long>(faces(k, 1).size()) == n * (n - 1) / 2;
}

Graph edge_graph(const Complex& k) {
  Graph g{k.vertex_set(), {}};
  if (k.dim() >= 1) g.edges = faces(k, 1);
  return g;
}

Graph non_edge_graph(const Complex& k) {
  Graph g{k.vertex_set(), {}};
  const Graph eg = edge_graph(k);
  for_each_subset(k.vertex_set().mask(), 2, [&](Simplex e) {
    if (!std::binary_search(eg.edges.begin(), eg.edges.end(), e)) g.edges.push_back(e);
  });
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Graph g_n_graph(const Complex& k, int n) {
  Graph g{k.vertex_set(), {}};
  if (k.dim() < 1) return g;
  for (Simplex e : faces(k, 1))
    if (degree(k, e) == n) g.edges.push_back(e);
  return g;
}

Complex join(const Complex& x, const Complex& y) {
  if (!x.vertex_set().disjoint(y.vertex_set())) throw InvalidArgument("join needs disjoint vertex sets");
  std::vector<Simplex> out;
  for (Simplex a : x.facets())
    for (Simplex b : y.facets()) out.push_back(a | b);
  return Complex(std::move(out));
}

Complex one_point_suspension(const Complex& k, Vertex u, Vertex v) {
  if (!k.vertex_set().contains(u)) throw InvalidArgument("suspension vertex " + std::to_string(u) + " is not in K");
  if (v < 0 || v > kMaxVertex || k.vertex_set().contains(v))
    throw InvalidArgument("suspension needs a fresh vertex, got " + std::to_string(v));
  std::vector<Simplex> out;
  for (Simplex f : k.facets()) {
    if (!f.contains(u)) out.push_back(f.with(u));
    out.push_back(f.with(v));
  }
  return Complex(std::move(out));
}

Complex standard_sphere(int d, Simplex vertex_set) {
  if (d < 0 || vertex_set.size() != d + 2) throw InvalidArgument("standard d-sphere needs d + 2 vertices");
  std::vector<Simplex> out;
  for (Vertex v : vertex_set.vertices()) out.push_back(vertex_set.without(v));
  return Complex(std::move(out));
}

Complex cycle(const std::vector<Vertex>& vertices) {
  if (vertices.size() < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out.push_back(Simplex::of({vertices[i], vertices[(i + 1) % vertices.size()]}));
  return Complex(std::move(out));
}

int num_components(const Complex& k) {
  std::vector<int> parent(64);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Simplex f : k.facets()) {
    const int root = find(f.min_vertex());
    for (Vertex v : f.vertices()) parent[find(v)] = root;
  }
  int count = 0;
  for (Vertex v : k.vertices())
    if (find(v) == v) ++count;
  return count;
}

}  // namespace pmc
