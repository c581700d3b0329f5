// Exception-free C surface over the C++ core. Every entry point catches,
// records the message in a thread-local slot and returns a status code.

#include "pmc/pmc.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pmc/bistellar.hpp"
#include "pmc/catalog.hpp"
#include "pmc/classify.hpp"
#include "pmc/complex.hpp"
#include "pmc/covering.hpp"
#include "pmc/homology.hpp"
#include "pmc/io.hpp"
#include "pmc/iso.hpp"
#include "pmc/recognition.hpp"
#include "pmc/report.hpp"

struct pmc_complex {
  pmc::Complex k;
};

namespace {

using Json = nlohmann::ordered_json;
using pmc::Complex;
using pmc::Simplex;
using pmc::Vertex;

thread_local std::string g_last_error;

pmc_status fail(pmc_status s, const std::string& message) {
  g_last_error = message;
  return s;
}

// Runs body and translates exceptions into status codes.
template <class Fn>
pmc_status guarded(Fn&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const pmc::ParseError& e) {
    return fail(PMC_ERR_PARSE, e.what());
  } catch (const pmc::MoveError& e) {
    return fail(PMC_ERR_MOVE, e.what());
  } catch (const pmc::NoOneMoveError& e) {
    return fail(PMC_ERR_MOVE, e.what());
  } catch (const pmc::InvalidArgument& e) {
    return fail(PMC_ERR_USAGE, e.what());
  } catch (const pmc::IntegrityError& e) {
    return fail(PMC_ERR_INTEGRITY, e.what());
  } catch (const pmc::IoError& e) {
    return fail(PMC_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PMC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PMC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PMC_ERR_INTERNAL, "unknown exception");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

pmc_complex* wrap(Complex k) { return new pmc_complex{std::move(k)}; }

std::string pad(const std::string& key, std::size_t width) {
  return key + std::string(width > key.size() ? width - key.size() : 0, ' ') + " : ";
}

// Aligned "key : value" lines.
std::string aligned(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) out += pad(k, width) + v + "\n";
  return out;
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string link_label(const Complex& lk) {
  if (auto n = pmc::catalog::name_surface(lk)) return *n;
  return "-";
}

std::vector<Vertex> face_list(Simplex s) { return s.vertices(); }

#define PMC_REQUIRE(cond, msg) \
  if (!(cond)) return fail(PMC_ERR_USAGE, msg)

}  // namespace

extern "C" {

const char* pmc_version(void) { return "0.1.0"; }
const char* pmc_last_error(void) { return g_last_error.c_str(); }
void pmc_string_free(char* s) { std::free(s); }

pmc_status pmc_complex_parse(const char* text, pmc_complex** out) {
  PMC_REQUIRE(text && out, "null argument");
  return guarded([&] {
    *out = wrap(pmc::io::parse_complex(text));
    return PMC_OK;
  });
}

pmc_status pmc_complex_load(const char* path, pmc_complex** out) {
  PMC_REQUIRE(path && out, "null argument");
  return guarded([&] {
    const std::string text = pmc::io::read_file(path);
    try {
      *out = wrap(pmc::io::parse_complex(text));
    } catch (const pmc::ParseError& e) {
      return fail(PMC_ERR_PARSE, std::string(path) + ": " + e.what());
    }
    return PMC_OK;
  });
}

pmc_status pmc_complex_from_masks(const uint64_t* masks, size_t count, pmc_complex** out) {
  PMC_REQUIRE(out && (masks || count == 0), "null argument");
  return guarded([&] {
    std::vector<Simplex> facets;
    for (size_t i = 0; i < count; ++i) facets.emplace_back(masks[i]);
    *out = wrap(Complex(std::move(facets)));
    return PMC_OK;
  });
}

void pmc_complex_free(pmc_complex* k) { delete k; }

int pmc_complex_dim(const pmc_complex* k) { return k ? k->k.dim() : -1; }
size_t pmc_complex_num_facets(const pmc_complex* k) { return k ? k->k.num_facets() : 0; }
int pmc_complex_num_vertices(const pmc_complex* k) { return k ? k->k.num_vertices() : 0; }

uint64_t pmc_complex_facet(const pmc_complex* k, size_t index) {
  if (!k || index >= k->k.num_facets()) return 0;
  return k->k.facets()[index].mask();
}

int pmc_complex_equal(const pmc_complex* a, const pmc_complex* b) { return a && b && a->k == b->k; }

pmc_status pmc_complex_to_text(const pmc_complex* k, int json, char** out) {
  PMC_REQUIRE(k && out, "null argument");
  return guarded([&] {
    *out = dup(json ? pmc::io::to_json(k->k) : pmc::io::to_text(k->k));
    return PMC_OK;
  });
}

pmc_status pmc_complex_save(const pmc_complex* k, const char* path, int json) {
  PMC_REQUIRE(k && path, "null argument");
  return guarded([&] {
    pmc::io::write_file(path, json ? pmc::io::to_json(k->k) : pmc::io::to_text(k->k));
    return PMC_OK;
  });
}

pmc_status pmc_verify(const pmc_complex* k, int json, char** out) {
  PMC_REQUIRE(k && out, "null argument");
  return guarded([&] {
    const Complex& c = k->k;
    const pmc::RecognitionReport r = pmc::recognize(c);
    const auto f = pmc::f_vector(c);
    std::string manifold = "undecided";
    if (r.is_combinatorial_manifold) manifold = yes(*r.is_combinatorial_manifold);
    if (json) {
      Json sing = Json::array();
      for (const auto& s : r.singular_vertices)
        sing.push_back({{"vertex", s.vertex},
                        {"link", pmc::describe(s.link_type)},
                        {"name", link_label(pmc::link(c, Simplex::single(s.vertex)))}});
      Json doc = {{"dim", r.dim},
                  {"vertices", c.num_vertices()},
                  {"f_vector", f},
                  {"euler_characteristic", pmc::euler_characteristic(c)},
                  {"is_pure", r.is_pure},
                  {"is_weak_pm", r.is_weak_pm},
                  {"is_strongly_connected", r.is_strongly_connected},
                  {"is_pseudomanifold", r.is_pseudomanifold},
                  {"is_normal", r.is_normal},
                  {"is_neighbourly", pmc::is_neighbourly(c)},
                  {"is_combinatorial_manifold", r.is_combinatorial_manifold ? Json(*r.is_combinatorial_manifold) : Json()},
                  {"singular_vertices", sing}};
      *out = dup(doc.dump(2) + "\n");
    } else {
      std::vector<std::pair<std::string, std::string>> rows = {
          {"dim", std::to_string(r.dim)},
          {"vertices", std::to_string(c.num_vertices())},
          {"f_vector", pmc::format_tuple(f)},
          {"euler_characteristic", std::to_string(pmc::euler_characteristic(c))},
          {"is_pure", yes(r.is_pure)},
          {"is_weak_pm", yes(r.is_weak_pm)},
          {"is_strongly_connected", yes(r.is_strongly_connected)},
          {"is_pseudomanifold", yes(r.is_pseudomanifold)},
          {"is_normal", yes(r.is_normal)},
          {"is_neighbourly", yes(pmc::is_neighbourly(c))},
          {"is_combinatorial_manifold", manifold},
          {"singular_vertices", std::to_string(r.singular_vertices.size())},
      };
      for (const auto& s : r.singular_vertices)
        rows.emplace_back("singular " + std::to_string(s.vertex),
                          link_label(pmc::link(c, Simplex::single(s.vertex))) + " (" + pmc::describe(s.link_type) + ")");
      *out = dup(aligned(rows));
    }
    return r.is_normal ? PMC_OK : PMC_NEGATIVE;
  });
}

pmc_status pmc_links(const pmc_complex* k, int json, char** out) {
  PMC_REQUIRE(k && out, "null argument");
  return guarded([&] {
    const Complex& c = k->k;
    if (c.dim() < 1) throw pmc::InvalidArgument("vertex links need dimension >= 1");
    Json doc = Json::array();
    std::string text;
    for (Vertex v : c.vertices()) {
      const Complex lk = pmc::link(c, Simplex::single(v));
      const std::string kind = lk.dim() == 2 ? pmc::describe(pmc::classify_surface(lk)) : "-";
      const std::string name = link_label(lk);
      const auto f = pmc::f_vector(lk);
      doc.push_back({{"vertex", v}, {"name", name}, {"type", kind}, {"f_vector", f}, {"normal", pmc::is_normal(lk)}});
      text += std::to_string(v) + "  " + name + "  " + kind + "  " + pmc::format_tuple(f) + "\n";
    }
    *out = dup(json ? doc.dump(2) + "\n" : text);
    return PMC_OK;
  });
}

pmc_status pmc_moves(const pmc_complex* k, int i, int json, char** out) {
  PMC_REQUIRE(k && out, "null argument");
  return guarded([&] {
    const Complex& c = k->k;
    if (i > c.dim()) throw pmc::InvalidArgument("move index exceeds the dimension");
    std::vector<pmc::Move> moves;
    for (int j = 0; j <= c.dim(); ++j)
      if (i < 0 ? j > 0 : i == j)
        for (const pmc::Move& m : pmc::enumerate_moves(c, j)) moves.push_back(m);
    Json doc = Json::array();
    std::string text;
    for (const pmc::Move& m : moves) {
      doc.push_back({{"i", m.i}, {"alpha", face_list(m.alpha)}, {"beta", face_list(m.beta)}});
      text += std::to_string(m.i) + "-move  " + pmc::format_face(m.alpha) + " -> " + pmc::format_face(m.beta) + "\n";
    }
    *out = dup(json ? doc.dump(2) + "\n" : text);
    return PMC_OK;
  });
}

pmc_status pmc_homology(const pmc_complex* k, int json, char** out) {
  PMC_REQUIRE(k && out, "null argument");
  return guarded([&] {
    const pmc::HomologyProfile h = pmc::homology(k->k);
    Json groups = Json::array();
    std::string text;
    for (std::size_t i = 0; i < h.betti.size(); ++i) {
      Json torsion = Json::array();
      for (const auto& t : h.torsion[i]) torsion.push_back(t.str());
      groups.push_back({{"dim", i}, {"betti", h.betti[i]}, {"torsion", torsion}});
      text += "H_" + std::to_string(i) + " = " + pmc::format_group(h.betti[i], h.torsion[i]) + "\n";
    }
    Json doc = {{"convention", "unreduced"}, {"groups", groups}};
    *out = dup(json ? doc.dump(2) + "\n" : text);
    return PMC_OK;
  });
}

pmc_status pmc_iso(const pmc_complex* a, const pmc_complex* b, int json, char** out) {
  PMC_REQUIRE(a && b && out, "null argument");
  return guarded([&] {
    const pmc::IsoResult r = pmc::are_isomorphic(a->k, b->k, pmc::catalog::link_namer());
    if (json) {
      Json doc = {{"isomorphic", r.isomorphic}};
      if (r.isomorphic)
        doc["map"] = pmc::format_map(r.map);
      else
        doc["invariant"] = r.invariant, doc["detail"] = r.detail;
      *out = dup(doc.dump(2) + "\n");
    } else {
      *out = dup(r.isomorphic ? "isomorphic " + pmc::format_map(r.map) + "\n"
                              : "not isomorphic\n" + r.invariant + ": " + r.detail + "\n");
    }
    return r.isomorphic ? PMC_OK : PMC_NEGATIVE;
  });
}

pmc_status pmc_apply(const pmc_complex* k, const char* face, int fresh, pmc_complex** out) {
  PMC_REQUIRE(k && face && out, "null argument");
  return guarded([&] {
    std::optional<Vertex> label;
    if (fresh >= 0) label = fresh;
    *out = wrap(pmc::apply_move(k->k, pmc::parse_face(face), label));
    return PMC_OK;
  });
}

pmc_status pmc_script(const pmc_complex* k, const char* steps, pmc_complex** out) {
  PMC_REQUIRE(k && steps && out, "null argument");
  return guarded([&] {
    *out = wrap(pmc::run_script(k->k, pmc::parse_script(steps)));
    return PMC_OK;
  });
}

pmc_status pmc_cover_check(const pmc_complex* source, const pmc_complex* target, const char* map_text, int json,
                           char** out) {
  PMC_REQUIRE(source && target && map_text && out, "null argument");
  return guarded([&] {
    pmc::VertexMap map(pmc::kMaxVertex + 1, -1);
    for (const auto& [s, t] : pmc::io::parse_vertex_map(map_text)) {
      if (map[s] != -1 && map[s] != t) throw pmc::InvalidArgument("vertex " + std::to_string(s) + " mapped twice");
      map[s] = t;
    }
    const pmc::SimplicialMap f(source->k, target->k, map);
    const auto cert = pmc::check_branched_covering(f);
    Json doc = {{"covering", cert.has_value()}};
    std::string text;
    if (cert) {
      doc["k"] = cert->k;
      doc["branch_locus"] = face_list(cert->branch_locus);
      text = "k = " + std::to_string(cert->k) + "\nbranch locus = " +
             (cert->branch_locus.empty() ? std::string("{}") : pmc::format_face(cert->branch_locus)) + "\n";
    } else {
      text = "not a branched covering\n";
    }
    *out = dup(json ? doc.dump(2) + "\n" : text);
    return cert ? PMC_OK : PMC_NEGATIVE;
  });
}

pmc_status pmc_catalog_list(int json, char** out) {
  PMC_REQUIRE(out, "null argument");
  return guarded([&] {
    Json doc = Json::array();
    std::string text;
    for (const std::string& name : pmc::catalog::list()) {
      const std::string source = pmc::catalog::source_of(name);
      doc.push_back({{"name", name}, {"source", source}});
      text += name + "  " + source + "\n";
    }
    *out = dup(json ? doc.dump(2) + "\n" : text);
    return PMC_OK;
  });
}

pmc_status pmc_catalog_get(const char* name, pmc_complex** out) {
  PMC_REQUIRE(name && out, "null argument");
  return guarded([&] {
    *out = wrap(pmc::catalog::get(name));
    return PMC_OK;
  });
}

pmc_status pmc_catalog_verify(int json, char** out) {
  PMC_REQUIRE(out, "null argument");
  return guarded([&] {
    const auto results = pmc::catalog::verify_all();
    std::size_t failed = 0;
    Json checks = Json::array();
    std::string text;
    for (const auto& r : results) {
      failed += !r.ok;
      checks.push_back({{"entry", r.entry}, {"check", r.check}, {"ok", r.ok}, {"detail", r.detail}});
      text += std::string(r.ok ? "ok    " : "FAIL  ") + r.entry + "  " + r.check;
      if (!r.detail.empty()) text += "  " + r.detail;
      text += "\n";
    }
    text += std::to_string(results.size()) + " checks, " + std::to_string(failed) + " failed\n";
    Json doc = {{"total", results.size()}, {"failed", failed}, {"checks", checks}};
    *out = dup(json ? doc.dump(2) + "\n" : text);
    if (failed) g_last_error = std::to_string(failed) + " catalog checks failed";
    return failed ? PMC_ERR_INTEGRITY : PMC_OK;
  });
}

void pmc_classify_defaults(pmc_classify_options* options) {
  if (!options) return;
  options->vertices = 8;
  options->exhaustive = 0;
  options->symmetry = 1;
  options->jobs = 1;
}

pmc_status pmc_classify(const pmc_classify_options* options, const char* outdir, char** summary) {
  PMC_REQUIRE(options && outdir && summary, "null argument");
  PMC_REQUIRE(options->vertices == 8, "only --vertices 8 is supported");
  PMC_REQUIRE(options->jobs >= 1, "jobs must be positive");
  return guarded([&] {
    namespace fs = std::filesystem;
    if (!fs::is_directory(outdir)) throw pmc::IoError(std::string("not a directory: ") + outdir);
    namespace cl = pmc::classify;
    const cl::CensusReport report = cl::run_census({options->symmetry != 0, options->jobs});
    std::string text;
    if (options->exhaustive) {
      const auto flat = cl::enumerate_normal_3pm(8, options->jobs);
      std::set<std::vector<std::uint64_t>> a, b;
      for (const Complex& k : flat) a.insert(pmc::canonical_key(k));
      for (const auto& r : report.classes) b.insert(r.key);
      if (a != b)
        throw pmc::IntegrityError("flat search found " + std::to_string(a.size()) + " classes, the move census " +
                                  std::to_string(b.size()) + " (sets differ)");
      text += "exhaustive search agrees: " + std::to_string(a.size()) + " classes\n";
    }
    const fs::path dir(outdir);
    pmc::io::write_file((dir / "census.json").string(), cl::census_json(report));
    pmc::io::write_file((dir / "table1.txt").string(), cl::emit_table1(report));
    pmc::io::write_file((dir / "hasse_spheres.dot").string(), cl::emit_hasse(report, "S3_8_", "spheres"));
    pmc::io::write_file((dir / "hasse_normals.dot").string(), cl::emit_hasse(report, "N_", "normals"));
    int manifolds = 0;
    for (const auto& r : report.classes) manifolds += r.manifold;
    text += "classes " + std::to_string(report.classes.size()) + "\nmanifolds " + std::to_string(manifolds) +
            "\npseudomanifolds " + std::to_string(report.classes.size() - manifolds) + "\nposet edges " +
            std::to_string(report.edges.size()) + "\n";
    *summary = dup(text);
    return PMC_OK;
  });
}

pmc_status pmc_enumerate_surfaces(int n, int json, char** out) {
  PMC_REQUIRE(out, "null argument");
  PMC_REQUIRE(n >= 4 && n <= 10, "vertices must be between 4 and 10");
  return guarded([&] {
    Json classes = Json::array();
    std::string text;
    for (const Complex& k : pmc::classify::enumerate_weak_2pm(n)) {
      std::vector<int> deg;
      for (Vertex v : k.vertices()) deg.push_back(pmc::degree(k, Simplex::single(v)));
      const std::string degrees = pmc::format_degree_sequence(deg);
      const pmc::SurfaceType s = pmc::classify_surface(k);
      std::string type = pmc::describe(s);
      if (s.kind == pmc::SurfaceKind::not_a_surface)
        type = pmc::is_pseudomanifold(k) ? "pseudomanifold" : "weak pseudomanifold";
      const std::string name = link_label(k);
      Json facets = Json::array();
      for (Simplex f : k.facets()) facets.push_back(f.vertices());
      classes.push_back({{"name", name}, {"degrees", degrees}, {"type", type}, {"f_vector", pmc::f_vector(k)},
                         {"facets", facets}});
      text += name + "  " + degrees + "  " + type + "\n";
    }
    Json doc = {{"vertices", n}, {"count", classes.size()}, {"classes", classes}};
    text += std::to_string(classes.size()) + " classes\n";
    *out = dup(json ? doc.dump(2) + "\n" : text);
    return PMC_OK;
  });
}

}  // extern "C"
