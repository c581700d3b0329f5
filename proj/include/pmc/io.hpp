#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pmc/complex.hpp"

namespace pmc::io {

/// Parses either the facet-list text format (one facet per line, labels
/// separated by single spaces, '#' comments) or the JSON variant
/// {"dim": d, "facets": [[...], ...]}. Errors carry line and column.
Complex parse_complex(const std::string& text);
Complex load_complex(const std::string& path);

/// Facet-list text: facets in lexicographic order, labels ascending.
std::string to_text(const Complex& k, const std::string& comment = {});
std::string to_json(const Complex& k);

/// Whitespace separated "source target" vertex pairs, '#' comments allowed.
std::vector<std::pair<Vertex, Vertex>> parse_vertex_map(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace pmc::io
