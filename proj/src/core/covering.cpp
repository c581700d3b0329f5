#include "pmc/covering.hpp"

#include <algorithm>
#include <map>

#include "pmc/catalog.hpp"
#include "pmc/homology.hpp"
#include "pmc/recognition.hpp"

namespace pmc {

SimplicialMap::SimplicialMap(Complex source, Complex target, VertexMap map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  map_.resize(kMaxVertex + 1, -1);
  for (Vertex v : source_.vertices())
    if (map_[v] < 0 || !target_.vertex_set().contains(map_[v]))
      throw InvalidArgument("vertex " + std::to_string(v) + " is not mapped into the target");
  if (source_.dim() != target_.dim()) throw InvalidArgument("source and target dimensions differ");
  for (Simplex f : source_.facets()) {
    const Simplex img = image(f);
    if (img.size() != f.size()) throw InvalidArgument("facet " + format_face(f) + " is collapsed");
    if (!target_.has_facet(img)) throw InvalidArgument("image of " + format_face(f) + " is not a facet");
  }
}

Simplex SimplicialMap::image(Simplex s) const {
  std::uint64_t m = 0;
  for (std::uint64_t b = s.mask(); b; b &= b - 1) m |= std::uint64_t{1} << map_[std::countr_zero(b)];
  return Simplex(m);
}

std::vector<Simplex> SimplicialMap::preimage(Simplex s) const {
  std::vector<Simplex> out;
  for (Simplex f : faces(source_, s.dim()))
    if (image(f) == s) out.push_back(f);
  return out;
}

std::optional<CoveringCertificate> check_branched_covering(const SimplicialMap& f) {
  const Complex& x = f.source();
  const Complex& y = f.target();
  std::map<Simplex, int> count;
  for (Simplex s : x.facets()) ++count[f.image(s)];
  CoveringCertificate cert;
  cert.k = count.empty() ? 0 : count.begin()->second;
  for (Simplex t : y.facets()) {
    const auto it = count.find(t);
    if (it == count.end() || it->second != cert.k) return std::nullopt;
  }
  // vertices where the local map fails to be an isomorphism of links
  std::uint64_t locus = 0;
  for (Vertex v : x.vertices()) {
    const Vertex w = f.map()[v];
    const Complex up = link(x, Simplex::single(v));
    const Complex down = link(y, Simplex::single(w));
    if (!is_isomorphism(up, down, f.map())) locus |= std::uint64_t{1} << w;
  }
  cert.branch_locus = Simplex(locus);
  // away from the locus every face must be covered exactly k times
  for (int i = 0; i < y.dim(); ++i) {
    std::map<Simplex, int> seen;
    for (Simplex s : faces(x, i)) ++seen[f.image(s)];
    for (Simplex t : faces(y, i)) {
      if (cert.branch_locus.contains(t)) continue;
      const auto it = seen.find(t);
      if (it == seen.end() || it->second != cert.k) return std::nullopt;
    }
  }
  return cert;
}

LiftedMove lift_proper_move(const SimplicialMap& f, Simplex alpha) {
  const int d = f.target().dim();
  const int l = alpha.dim();
  if (l < 1 || l >= d - 1)
    throw InvalidArgument("lifting needs a face of dimension l with 1 <= l < d-1, got l = " + std::to_string(l));
  const auto cert = check_branched_covering(f);
  if (!cert) throw InvalidArgument("the map is not a branched covering");
  const auto down = is_removable(f.target(), alpha);
  if (!down) throw MoveError(format_face(alpha) + " is not removable in the target");
  const auto lifts = f.preimage(alpha);
  if (static_cast<int>(lifts.size()) != cert->k)
    throw IntegrityError(format_face(alpha) + " has " + std::to_string(lifts.size()) + " preimages, expected " +
                         std::to_string(cert->k));
  std::vector<Move> moves;
  Complex up = f.source();
  for (Simplex a : lifts) {
    const auto m = is_removable(up, a);
    if (!m) throw MoveError("lift " + format_face(a) + " of " + format_face(alpha) + " is not removable");
    if (f.image(m->beta) != down->beta)
      throw IntegrityError("lift " + format_face(a) + " does not cover the inserted face");
    moves.push_back(*m);
    up = apply_move(up, *m);
  }
  SimplicialMap next(up, apply_move(f.target(), *down), f.map());
  const auto again = check_branched_covering(next);
  if (!again) throw IntegrityError("the lifted map is not a branched covering");
  if (again->k != cert->k) throw IntegrityError("the lifted map changed the number of sheets");
  return {moves, *down, next, *again};
}

Complex icosahedron() {
  // top 0, upper ring 1..5, bottom 6, lower ring 7..11 placed so that the
  // antipode of i is i + 6 (mod 12)
  auto upper = [](int k) { return 1 + ((k % 5) + 5) % 5; };
  auto lower = [](int j) { return 7 + (((j - 2) % 5) + 5) % 5; };
  std::vector<Simplex> facets;
  for (int k = 0; k < 5; ++k) {
    facets.push_back(Simplex::of({0, upper(k), upper(k + 1)}));
    facets.push_back(Simplex::of({upper(k), upper(k + 1), lower(k)}));
    facets.push_back(Simplex::of({lower(k), lower(k + 1), upper(k + 1)}));
    facets.push_back(Simplex::of({6, lower(k), lower(k + 1)}));
  }
  return Complex(std::move(facets));
}

Complex rp2_6() {
  const Complex ico = icosahedron();
  std::vector<Simplex> facets;
  for (Simplex f : ico.facets()) {
    std::uint64_t m = 0;
    for (Vertex v : f.vertices()) m |= std::uint64_t{1} << (v % 6);
    facets.emplace_back(m);
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return Complex(std::move(facets));
}

QuotientReport verify_n24_quotient() {
  auto fail = [](const std::string& what) { throw IntegrityError("N_24 quotient: " + what); };
  const Complex ico = icosahedron();
  if (ico.num_facets() != 20 || ico.num_vertices() != 12 || classify_surface(ico).kind != SurfaceKind::sphere)
    fail("icosahedron is not a 12-vertex 2-sphere");
  VertexMap antipode(kMaxVertex + 1, -1);
  for (int i = 0; i < 12; ++i) antipode[i] = (i + 6) % 12;
  if (!is_isomorphism(ico, ico, antipode)) fail("i -> i+6 is not an automorphism of the icosahedron");

  const Complex r1 = rp2_6();
  VertexMap fold(kMaxVertex + 1, -1);
  for (int i = 0; i < 12; ++i) fold[i] = i % 6;
  const SimplicialMap base(ico, r1, fold);
  const auto base_cert = check_branched_covering(base);
  if (!base_cert || base_cert->k != 2 || !base_cert->branch_locus.empty()) fail("antipodal quotient is not a 2-fold covering");

  // suspension vertices: a, b = 12, 13 upstairs and c, d = 6, 7 downstairs
  const Complex cover = join(standard_sphere(0, Simplex::of({12, 13})), ico);
  const Complex quotient = join(standard_sphere(0, Simplex::of({6, 7})), r1);
  const Complex n24 = catalog::get("N_24");
  const IsoResult iso = are_isomorphic(quotient, n24);
  if (!iso.isomorphic) fail("N_24 is not the suspension of R_1 (" + iso.invariant + ": " + iso.detail + ")");

  VertexMap composite(kMaxVertex + 1, -1);
  for (int i = 0; i < 12; ++i) composite[i] = iso.map[i % 6];
  composite[12] = iso.map[6];
  composite[13] = iso.map[7];
  SimplicialMap covering(cover, n24, composite);
  const auto cert = check_branched_covering(covering);
  if (!cert) fail("the composite map is not a branched covering");
  if (cert->k != 2) fail("expected 2 sheets");

  QuotientReport r{cover, covering, *cert, iso.map, false, f_vector(cover)};
  const HomologyProfile h = homology(cover);
  const HomologyProfile sphere{{1, 0, 0, 1}, {{}, {}, {}, {}}};
  r.cover_is_sphere = is_combinatorial_3_manifold(cover) && h == sphere;
  if (!r.cover_is_sphere) fail("the cover is not a combinatorial 3-sphere");
  return r;
}

}  // namespace pmc
