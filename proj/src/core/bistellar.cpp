#include "pmc/bistellar.hpp"

#include <algorithm>
#include <cctype>

namespace pmc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::optional<Vertex> smallest_unused(Simplex used) {
  if (~used.mask() == 0) return std::nullopt;
  return std::countr_zero(~used.mask());
}

}  // namespace

MoveScript parse_script(const std::string& text) {
  MoveScript out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(';', start), text.size());
    const std::string step = trim(text.substr(start, end - start));
    start = end + 1;
    if (step.empty()) {
      if (end == text.size()) break;
      throw InvalidArgument("empty step in script '" + text + "'");
    }
    const auto plus = step.find('+');
    ScriptStep s;
    s.alpha = parse_face(trim(step.substr(0, plus)));
    if (plus != std::string::npos) {
      const std::string label = trim(step.substr(plus + 1));
      if (label.empty() || label.size() > 2 || !std::all_of(label.begin(), label.end(), ::isdigit))
        throw InvalidArgument("bad new vertex in step '" + step + "'");
      s.fresh = std::stoi(label);
      if (*s.fresh > kMaxVertex) throw InvalidArgument("new vertex label out of range in '" + step + "'");
    }
    out.push_back(s);
  }
  return out;
}

std::string format_step(const ScriptStep& step) {
  std::string out = format_face(step.alpha);
  if (step.fresh) out += "+" + std::to_string(*step.fresh);
  return out;
}

std::string format_script(const MoveScript& script) {
  std::string out;
  for (const auto& s : script) {
    if (!out.empty()) out += ';';
    out += format_step(s);
  }
  return out;
}

std::optional<Move> is_removable(const Complex& k, Simplex alpha) {
  if (alpha.empty()) return std::nullopt;
  const int d = k.dim();
  if (alpha.size() == d + 1) {
    if (!k.has_facet(alpha)) return std::nullopt;
    const auto fresh = smallest_unused(k.vertex_set());
    if (!fresh) return std::nullopt;
    return Move{alpha, Simplex::single(*fresh), 0, d};
  }
  if (alpha.size() > d + 1) return std::nullopt;
  // lk(alpha) = boundary of beta exactly when alpha lies in |beta| facets
  // whose union spans |beta| further vertices
  const int beta_size = d + 2 - alpha.size();
  int count = 0;
  std::uint64_t span = 0;
  for (Simplex f : k.facets())
    if (f.contains(alpha)) {
      ++count;
      span |= f.mask();
    }
  if (count != beta_size) return std::nullopt;
  const Simplex beta = Simplex(span) - alpha;
  if (beta.size() != beta_size) return std::nullopt;
  if (k.has_face(beta)) return std::nullopt;
  return Move{alpha, beta, beta_size - 1, d};
}

Complex apply_move(const Complex& k, const Move& move) {
  std::vector<Simplex> out;
  out.reserve(k.num_facets() + move.alpha.size());
  for (Simplex f : k.facets())
    if (!f.contains(move.alpha)) out.push_back(f);
  for (Vertex v : move.alpha.vertices()) out.push_back(move.beta | move.alpha.without(v));
  return Complex(std::move(out));
}

Complex apply_move(const Complex& k, Simplex alpha, std::optional<Vertex> fresh) {
  auto move = is_removable(k, alpha);
  if (!move) {
    if (!k.has_face(alpha)) throw MoveError(format_face(alpha) + " is not a face");
    throw MoveError(format_face(alpha) + " is not removable");
  }
  if (move->i == 0 && fresh) {
    if (*fresh < 0 || *fresh > kMaxVertex || k.vertex_set().contains(*fresh))
      throw MoveError("new vertex " + std::to_string(*fresh) + " is already in use");
    move->beta = Simplex::single(*fresh);
  }
  return apply_move(k, *move);
}

Complex star_vertex(const Complex& k, Simplex facet, Vertex fresh) {
  if (!k.has_facet(facet)) throw MoveError(format_face(facet) + " is not a facet");
  return apply_move(k, facet, fresh);
}

Complex collapse_vertex(const Complex& k, Vertex u) {
  if (!k.vertex_set().contains(u)) throw MoveError("vertex " + std::to_string(u) + " is not in the complex");
  return apply_move(k, Simplex::single(u));
}

std::vector<Move> enumerate_moves(const Complex& k, int i) {
  const int d = k.dim();
  if (i < 0 || i > d) throw InvalidArgument("move index " + std::to_string(i) + " out of range");
  std::vector<Move> out;
  for (Simplex alpha : faces(k, d - i))
    if (auto m = is_removable(k, alpha)) out.push_back(*m);
  return out;
}

Complex run_script(const Complex& k, const MoveScript& script) {
  Complex cur = k;
  for (std::size_t n = 0; n < script.size(); ++n) {
    const ScriptStep& step = script[n];
    if (step.fresh && step.alpha.size() != cur.dim() + 1)
      throw ScriptError(n, format_step(step), "a new vertex only makes sense for a facet");
    try {
      cur = apply_move(cur, step.alpha, step.fresh);
    } catch (const MoveError& e) {
      throw ScriptError(n, format_step(step), e.what());
    }
  }
  return cur;
}

std::pair<Complex, MoveScript> neighbourly_ize(const Complex& k) {
  Complex cur = k;
  MoveScript script;
  while (!is_neighbourly(cur)) {
    const auto moves = enumerate_moves(cur, 1);
    if (moves.empty())
      throw NoOneMoveError("no bistellar 1-move on a non-neighbourly complex after " + std::to_string(script.size()) +
                           " moves");
    int min_degree = 64;
    for (Vertex v : cur.vertices()) min_degree = std::min(min_degree, degree(cur, Simplex::single(v)));
    const Move* pick = &moves.front();
    for (const Move& m : moves) {
      const auto ends = m.beta.vertices();
      const bool touches = std::any_of(ends.begin(), ends.end(), [&](Vertex v) {
        return degree(cur, Simplex::single(v)) == min_degree;
      });
      if (touches) {
        pick = &m;
        break;
      }
    }
    script.push_back({pick->alpha, std::nullopt});
    cur = apply_move(cur, *pick);
  }
  return {cur, script};
}

}  // namespace pmc
