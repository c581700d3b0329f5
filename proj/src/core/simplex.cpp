#include "pmc/simplex.hpp"

#include <cctype>
#include <sstream>

namespace pmc {

namespace {

void check_label(long v) {
  if (v < 0 || v > kMaxVertex)
    throw InvalidArgument("vertex label " + std::to_string(v) + " outside 0.." + std::to_string(kMaxVertex));
}

}  // namespace

Simplex Simplex::of(std::initializer_list<Vertex> vertices) {
  return from(std::vector<Vertex>(vertices));
}

Simplex Simplex::from(const std::vector<Vertex>& vertices) {
  std::uint64_t mask = 0;
  for (Vertex v : vertices) {
    check_label(v);
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (mask & bit) throw InvalidArgument("repeated vertex " + std::to_string(v) + " in simplex");
    mask |= bit;
  }
  return Simplex(mask);
}

std::vector<Vertex> Simplex::vertices() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string format_face(Simplex s) {
  std::string out;
  if (s.empty() || s.max_vertex() <= 9) {
    for (Vertex v : s.vertices()) out += static_cast<char>('0' + v);
    return out;
  }
  out = "{";
  bool first = true;
  for (Vertex v : s.vertices()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string format_face_spaced(Simplex s) {
  std::string out;
  for (Vertex v : s.vertices()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Simplex parse_face(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != '{' && c != '}') body += c;
  const bool separated = body.find_first_of(" ,\t") != std::string::npos;
  std::vector<Vertex> vs;
  if (!separated) {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidArgument("bad face '" + text + "'");
      vs.push_back(c - '0');
    }
  } else {
    std::string token;
    std::string normalized = body;
    for (char& c : normalized)
      if (c == ',') c = ' ';
    std::istringstream words(normalized);
    while (words >> token) {
      for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidArgument("bad face '" + text + "'");
      if (token.size() > 3) throw InvalidArgument("bad face '" + text + "'");
      vs.push_back(std::stoi(token));
    }
  }
  if (vs.empty()) throw InvalidArgument("empty face '" + text + "'");
  return Simplex::from(vs);
}

}  // namespace pmc
