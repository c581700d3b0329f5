#include <doctest.h>

#include <map>

#include "pmc/catalog.hpp"
#include "pmc/complex.hpp"
#include "pmc/recognition.hpp"

using namespace pmc;

namespace {

std::map<Vertex, SurfaceKind> singular_kinds(const Complex& k) {
  std::map<Vertex, SurfaceKind> out;
  for (const SingularVertex& s : singular_vertices(k)) out[s.vertex] = s.link_type.kind;
  return out;
}

}  // namespace

TEST_SUITE("recognition") {
  TEST_CASE("weak pseudomanifolds and pseudomanifolds") {
    CHECK(is_weak_pseudomanifold(catalog::get("P_1")));
    CHECK_FALSE(is_pseudomanifold(catalog::get("P_1")));
    CHECK_FALSE(is_pseudomanifold(catalog::get("P_2")));
    CHECK(is_pseudomanifold(catalog::get("N_1")));
    const Complex tet = Complex({Simplex::of({1, 2, 3, 4})});
    CHECK_FALSE(is_weak_pseudomanifold(tet));
    const Complex s0 = standard_sphere(0, Simplex::of({1, 2}));
    CHECK(is_pseudomanifold(s0));
    CHECK_FALSE(is_strongly_connected(s0));
    CHECK_FALSE(is_normal(s0));
  }

  TEST_CASE("facet graph of a pseudomanifold is (d+1)-regular") {
    for (const char* name : {"S3_8_35", "N_1", "N_35", "K_3_9", "B_3_9"}) {
      const Complex k = catalog::get(name);
      const auto adj = facet_adjacency(k);
      for (const auto& row : adj) CHECK(row.size() == static_cast<std::size_t>(k.dim() + 1));
    }
    CHECK(facet_adjacency(catalog::get("S3_8_35")).size() == 20);
  }

  TEST_CASE("normality") {
    for (int i = 1; i <= 35; ++i) CHECK(is_normal(catalog::get("N_" + std::to_string(i))));
    for (const char* name : {"S3_8_1", "S3_8_35", "S3_8_39", "K_3_9", "A_3_10"}) CHECK(is_normal(catalog::get(name)));
    // Two tetrahedron boundaries glued at a vertex: a pseudomanifold-free union.
    const Complex wedge = Complex({Simplex::of({1, 2, 3}), Simplex::of({1, 2, 4}), Simplex::of({1, 3, 4}),
                                   Simplex::of({2, 3, 4}), Simplex::of({1, 5, 6}), Simplex::of({1, 5, 7}),
                                   Simplex::of({1, 6, 7}), Simplex::of({5, 6, 7})});
    CHECK(is_weak_pseudomanifold(wedge));
    CHECK_FALSE(is_pseudomanifold(wedge));
    CHECK_FALSE(is_normal(wedge));
    // B_3_9 is a pseudomanifold whose edge 89 has a disconnected link.
    const Complex b = catalog::get("B_3_9");
    CHECK(is_pseudomanifold(b));
    CHECK_FALSE(is_normal(b));
    CHECK(num_components(link(b, Simplex::of({8, 9}))) == 2);
  }

  TEST_CASE("surface classification") {
    CHECK(classify_surface(catalog::get("T")) == SurfaceType{SurfaceKind::torus, 7, 1});
    for (const char* r : {"R_1", "R_2", "R_3", "R_4"})
      CHECK(classify_surface(catalog::get(r)).kind == SurfaceKind::projective_plane);
    for (const char* s : {"S_1", "S_5", "S_9"}) CHECK(classify_surface(catalog::get(s)).kind == SurfaceKind::sphere);
    CHECK(classify_surface(catalog::get("P_2")).kind == SurfaceKind::not_a_surface);
    CHECK(classify_surface(catalog::get("P_3")).kind == SurfaceKind::not_a_surface);
    CHECK(classify_surface(catalog::get("N_1")).kind == SurfaceKind::not_a_surface);
    CHECK(is_orientable(catalog::get("T")));
    CHECK_FALSE(is_orientable(catalog::get("R_1")));
    CHECK(is_orientable(catalog::get("S3_8_35")));
  }

  TEST_CASE("singular vertices") {
    CHECK(singular_kinds(catalog::get("N_4")) == std::map<Vertex, SurfaceKind>{{8, SurfaceKind::torus}});
    const auto n3 = singular_kinds(catalog::get("N_3"));
    CHECK(n3 == std::map<Vertex, SurfaceKind>{{2, SurfaceKind::projective_plane},
                                              {3, SurfaceKind::projective_plane},
                                              {4, SurfaceKind::projective_plane},
                                              {5, SurfaceKind::projective_plane},
                                              {8, SurfaceKind::torus}});
    CHECK(singular_vertices(catalog::get("S3_8_35")).empty());
    CHECK(is_combinatorial_3_manifold(catalog::get("S3_8_35")));
    CHECK_FALSE(is_combinatorial_3_manifold(catalog::get("N_4")));
    for (int i = 7; i <= 35; ++i) {
      const auto s = singular_kinds(catalog::get("N_" + std::to_string(i)));
      CHECK_MESSAGE(s.size() == 2, i);
      CHECK(s.count(3));
      CHECK(s.count(8));
    }
  }

  TEST_CASE("recognition report") {
    const RecognitionReport p1 = recognize(catalog::get("P_1"));
    CHECK(p1.is_weak_pm);
    CHECK_FALSE(p1.is_pseudomanifold);
    const RecognitionReport n1 = recognize(catalog::get("N_1"));
    CHECK(n1.is_normal);
    REQUIRE(n1.is_combinatorial_manifold);
    CHECK_FALSE(*n1.is_combinatorial_manifold);
    CHECK(n1.singular_vertices.size() == 8);
    const RecognitionReport a4 = recognize(catalog::get("A_4_12"));
    CHECK(a4.is_normal);
    CHECK_FALSE(a4.is_combinatorial_manifold.has_value());
  }
}
