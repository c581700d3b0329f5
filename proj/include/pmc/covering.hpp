#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmc/bistellar.hpp"
#include "pmc/complex.hpp"
#include "pmc/iso.hpp"

namespace pmc {

/// A vertex map whose image of every source facet is a target facet.
class SimplicialMap {
 public:
  /// Throws InvalidArgument when the map is not total on V(source), or a
  /// facet is collapsed or sent to a non-facet.
  SimplicialMap(Complex source, Complex target, VertexMap map);

  const Complex& source() const noexcept { return source_; }
  const Complex& target() const noexcept { return target_; }
  const VertexMap& map() const noexcept { return map_; }

  Simplex image(Simplex s) const;
  /// Faces of the source mapped onto the face s of the target.
  std::vector<Simplex> preimage(Simplex s) const;

 private:
  Complex source_;
  Complex target_;
  VertexMap map_;
};

struct CoveringCertificate {
  int k = 0;
  Simplex branch_locus;
};

/// k is the (uniform) number of preimages of a target facet. The branch locus
/// is the set of target vertices at which some preimage vertex has a link not
/// mapped isomorphically. Returns nullopt when preimage counts are not
/// uniform, or when some face outside the branch locus does not have exactly
/// k preimages.
std::optional<CoveringCertificate> check_branched_covering(const SimplicialMap& f);

struct LiftedMove {
  std::vector<Move> upstairs;  // the k lifts, in the order applied
  Move downstairs;
  SimplicialMap result;
  CoveringCertificate certificate;
};

/// Lifts the move on a removable l-face alpha of the target, 1 <= l < d-1,
/// to its k preimages and re-certifies the new map. Throws InvalidArgument on
/// a bad dimension, MoveError when a lift is not removable and IntegrityError
/// when the result is not a branched covering.
LiftedMove lift_proper_move(const SimplicialMap& f, Simplex alpha);

/// Boundary of the icosahedron on 0..11 with antipode(i) = i + 6 mod 12.
Complex icosahedron();
/// Six-vertex projective plane: the icosahedron modulo the antipodal map.
Complex rp2_6();

struct QuotientReport {
  Complex cover;             // S^0 * icosahedron on 0..13
  SimplicialMap covering;    // cover -> N_24
  CoveringCertificate certificate;
  VertexMap suspension_iso;  // S^0 * R_1 -> N_24
  bool cover_is_sphere = false;
  std::vector<long> cover_f;
};

/// Builds the 2-fold branched covering of N_24 by the suspension of the
/// icosahedron and checks every claim along the way. Throws IntegrityError
/// when a check fails.
QuotientReport verify_n24_quotient();

}  // namespace pmc
