#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmc/complex.hpp"

namespace pmc {

/// A bistellar i-move: the star of alpha (dim d - i) is replaced by the
/// star of beta (dim i), where lk(alpha) is the boundary of beta.
struct Move {
  Simplex alpha;
  Simplex beta;
  int i = 0;
  int d = 0;

  bool proper() const noexcept { return 0 < i && i < d; }
  friend bool operator==(const Move&, const Move&) = default;
};

/// One step of a move script: a face, plus the label of the new vertex when
/// the face is a facet (a 0-move).
struct ScriptStep {
  Simplex alpha;
  std::optional<Vertex> fresh;

  friend bool operator==(const ScriptStep&, const ScriptStep&) = default;
};

using MoveScript = std::vector<ScriptStep>;

/// Steps separated by ';' in application order. A 0-move is written as the
/// facet followed by '+' and the new label, e.g. "1358+0".
MoveScript parse_script(const std::string& text);
std::string format_script(const MoveScript& script);
std::string format_step(const ScriptStep& step);

/// The move on alpha if alpha is removable. For a facet, beta is the
/// smallest label not in use.
std::optional<Move> is_removable(const Complex& k, Simplex alpha);

/// Throws MoveError when alpha is not removable. For a facet, fresh names the
/// new vertex (defaults to the smallest unused label).
Complex apply_move(const Complex& k, Simplex alpha, std::optional<Vertex> fresh = std::nullopt);
Complex apply_move(const Complex& k, const Move& move);

Complex star_vertex(const Complex& k, Simplex facet, Vertex fresh);
Complex collapse_vertex(const Complex& k, Vertex u);

/// All i-moves, sorted by alpha.
std::vector<Move> enumerate_moves(const Complex& k, int i);

/// Applies the steps in order. Throws ScriptError naming the failing step.
Complex run_script(const Complex& k, const MoveScript& script);

/// Applies 1-moves until the complex is neighbourly. At each step the
/// candidates whose new edge touches a vertex of least degree are preferred,
/// then the lexicographically least alpha. Throws NoOneMoveError when a
/// non-neighbourly complex admits no 1-move.
std::pair<Complex, MoveScript> neighbourly_ize(const Complex& k);

}  // namespace pmc
