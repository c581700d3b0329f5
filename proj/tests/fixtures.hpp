#pragma once

// Coverings derived from the N_24 quotient. N_24 itself has no removable
// edges, so edge lifts are exercised on complexes obtained from it by
// starring a facet (downstairs and in both preimages) and then applying a
// 1-move on a triangle of that facet and on its two lifts.

#include <vector>

#include "pmc/bistellar.hpp"
#include "pmc/covering.hpp"

namespace fixtures {

struct Derived {
  pmc::Simplex facet;
  pmc::Simplex triangle;
  pmc::SimplicialMap map;
};

inline std::vector<Derived> derived_n24_coverings(const pmc::SimplicialMap& f) {
  using namespace pmc;
  constexpr Vertex down_new = 9, up_a = 14, up_b = 15;
  std::vector<Derived> out;
  for (Simplex sigma : f.target().facets()) {
    const auto pre = f.preimage(sigma);
    const Complex down = star_vertex(f.target(), sigma, down_new);
    const Complex up = star_vertex(star_vertex(f.source(), pre.at(0), up_a), pre.at(1), up_b);
    VertexMap m = f.map();
    m[up_a] = m[up_b] = down_new;
    const SimplicialMap starred(up, down, m);
    for (Vertex x : sigma.vertices()) {
      const Simplex tau = sigma.without(x);
      const auto mv = is_removable(down, tau);
      if (!mv || mv->i != 1) continue;
      Complex lifted = up;
      for (Simplex t : starred.preimage(tau)) lifted = apply_move(lifted, t);
      out.push_back({sigma, tau, SimplicialMap(lifted, apply_move(down, *mv), m)});
    }
  }
  return out;
}

}  // namespace fixtures
