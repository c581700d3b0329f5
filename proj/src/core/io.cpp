#include "pmc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pmc::io {

namespace {

using Json = nlohmann::json;

struct Token {
  long value;
  int column;
};

// Splits one line into integer tokens separated by single spaces.
std::vector<Token> tokenize(const std::string& line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ') {
      if (i == 0 || i + 1 == line.size() || line[i + 1] == ' ')
        throw ParseError(line_no, static_cast<int>(i) + 1, "labels must be separated by single spaces");
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(line_no, static_cast<int>(i) + 1, std::string("unexpected character '") + c + "'");
    const std::size_t start = i;
    long v = 0;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
      v = v * 10 + (line[i] - '0');
      if (v > kMaxVertex)
        throw ParseError(line_no, static_cast<int>(start) + 1, "vertex label exceeds " + std::to_string(kMaxVertex));
      ++i;
    }
    out.push_back({v, static_cast<int>(start) + 1});
  }
  return out;
}

Complex parse_text(const std::string& text) {
  std::vector<Simplex> facets;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int first_size = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    for (std::size_t i = 0; i < line.size(); ++i)
      if (static_cast<unsigned char>(line[i]) > 127) throw ParseError(line_no, static_cast<int>(i) + 1, "non-ASCII byte");
    const auto tokens = tokenize(line, line_no);
    std::uint64_t mask = 0;
    for (const Token& t : tokens) {
      const std::uint64_t bit = std::uint64_t{1} << t.value;
      if (mask & bit) throw ParseError(line_no, t.column, "repeated vertex " + std::to_string(t.value));
      mask |= bit;
    }
    const int size = static_cast<int>(tokens.size());
    if (first_size < 0) first_size = size;
    if (size != first_size)
      throw ParseError(line_no, 1, "facet has " + std::to_string(size) + " vertices, expected " + std::to_string(first_size));
    facets.emplace_back(mask);
  }
  if (facets.empty()) throw ParseError(line_no == 0 ? 1 : line_no, 1, "no facets");
  try {
    return Complex(std::move(facets));
  } catch (const InvalidArgument& e) {
    throw ParseError(line_no, 1, e.what());
  }
}

Complex parse_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte offsets are converted to line/column for consistency with the text format
    const std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    int line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, "invalid JSON");
  }
  if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
    throw ParseError(1, 1, "JSON complex needs a \"facets\" array");
  std::vector<Simplex> facets;
  for (const auto& f : doc["facets"]) {
    if (!f.is_array()) throw ParseError(1, 1, "facet is not an array");
    std::vector<Vertex> vs;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw ParseError(1, 1, "vertex label is not an integer");
      vs.push_back(v.get<int>());
    }
    try {
      facets.push_back(Simplex::from(vs));
    } catch (const InvalidArgument& e) {
      throw ParseError(1, 1, e.what());
    }
  }
  try {
    Complex k(std::move(facets));
    if (doc.contains("dim") && doc["dim"].get<int>() != k.dim())
      throw ParseError(1, 1, "declared dim does not match the facets");
    return k;
  } catch (const InvalidArgument& e) {
    throw ParseError(1, 1, e.what());
  }
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

Complex load_complex(const std::string& path) { return parse_complex(read_file(path)); }

std::string to_text(const Complex& k, const std::string& comment) {
  std::string out;
  if (!comment.empty()) out += "# " + comment + "\n";
  for (Simplex f : k.facets()) out += format_face_spaced(f) + "\n";
  return out;
}

std::string to_json(const Complex& k) {
  Json facets = Json::array();
  for (Simplex f : k.facets()) facets.push_back(f.vertices());
  Json doc = {{"dim", k.dim()}, {"facets", facets}};
  return doc.dump() + "\n";
}

std::vector<std::pair<Vertex, Vertex>> parse_vertex_map(const std::string& text) {
  std::vector<std::pair<Vertex, Vertex>> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::vector<std::pair<long, int>> nums;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(line[i])))
        throw ParseError(line_no, static_cast<int>(i) + 1, std::string("unexpected character '") + line[i] + "'");
      const std::size_t start = i;
      long v = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
        v = v * 10 + (line[i++] - '0');
        if (v > kMaxVertex) throw ParseError(line_no, static_cast<int>(start) + 1, "vertex label out of range");
      }
      nums.emplace_back(v, static_cast<int>(start) + 1);
    }
    if (nums.empty()) continue;
    if (nums.size() != 2) throw ParseError(line_no, 1, "expected a 'source target' pair");
    out.emplace_back(static_cast<Vertex>(nums[0].first), static_cast<Vertex>(nums[1].first));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << contents;
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace pmc::io
