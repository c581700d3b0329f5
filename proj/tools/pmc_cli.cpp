// pmc: command-line front end. Talks to the library only through pmc.h.
//
// Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 usage
// or input error, 3 integrity failure.

#include <cstdio>
#include <fstream>
#include <iterator>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "pmc/pmc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIntegrity = 3;

struct ComplexDeleter {
  void operator()(pmc_complex* k) const { pmc_complex_free(k); }
};
using ComplexPtr = std::unique_ptr<pmc_complex, ComplexDeleter>;

int exit_code(pmc_status s) {
  switch (s) {
    case PMC_OK: return kExitOk;
    case PMC_NEGATIVE: return kExitNegative;
    case PMC_ERR_INTEGRITY:
    case PMC_ERR_INTERNAL: return kExitIntegrity;
    default: return kExitUsage;
  }
}

int report_error(pmc_status s) {
  std::cerr << "pmc: " << pmc_last_error() << "\n";
  return exit_code(s);
}

// Prints a library-owned string and releases it.
void emit(char* text) {
  if (!text) return;
  std::fputs(text, stdout);
  pmc_string_free(text);
}

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

// Loads a complex; on failure returns the exit code through status.
ComplexPtr load(const std::string& path, int& code) {
  pmc_complex* k = nullptr;
  const pmc_status s = pmc_complex_load(path.c_str(), &k);
  if (s != PMC_OK) code = report_error(s);
  return ComplexPtr(k);
}

// Writes a complex to path, or to stdout when path is empty. The format
// follows the extension (.json) unless json is forced.
int write_complex(const pmc_complex* k, const std::string& path, bool json) {
  const bool as_json = json || ends_with(path, ".json");
  if (path.empty()) {
    char* text = nullptr;
    const pmc_status s = pmc_complex_to_text(k, as_json, &text);
    if (s != PMC_OK) return report_error(s);
    emit(text);
    return kExitOk;
  }
  const pmc_status s = pmc_complex_save(k, path.c_str(), as_json);
  return s == PMC_OK ? kExitOk : report_error(s);
}

// Runs a report call that fills a string, prints it and maps the status.
template <class Fn>
int run_report(Fn&& fn) {
  char* out = nullptr;
  const pmc_status s = fn(&out);
  emit(out);
  if (s == PMC_OK || s == PMC_NEGATIVE) return exit_code(s);
  return report_error(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial pseudomanifolds: recognition, bistellar moves, isomorphism, census"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pmc_version());

  std::string file, file_b, face, steps, output, name, map_file, outdir = ".";
  bool json = false, exhaustive = false, no_symmetry = false;
  int dim = -1, fresh = -1, vertices = 0, jobs = 1;

  auto* verify = app.add_subcommand("verify", "Recognition report; exit 0 iff a normal pseudomanifold");
  verify->add_option("file", file, "Facet-list or JSON complex")->required();
  verify->add_flag("--json", json, "JSON output");

  auto* links = app.add_subcommand("links", "Vertex links with their types");
  links->add_option("file", file)->required();
  links->add_flag("--json", json);

  auto* moves = app.add_subcommand("moves", "Removable faces");
  moves->add_option("file", file)->required();
  moves->add_option("--dim", dim, "Only i-moves for this i")->check(CLI::NonNegativeNumber);
  moves->add_flag("--json", json);

  auto* apply = app.add_subcommand("apply", "Apply the bistellar move on a face");
  apply->add_option("file", file)->required();
  apply->add_option("--face", face, "Face, e.g. \"5 8\"")->required();
  apply->add_option("--fresh", fresh, "Label of the new vertex for a facet")->check(CLI::NonNegativeNumber);
  apply->add_option("-o,--output", output, "Output file (stdout when omitted)");
  apply->add_flag("--json", json, "Write the JSON form");

  auto* script = app.add_subcommand("script", "Run a move script");
  script->add_option("file", file)->required();
  script->add_option("--steps", steps, "Steps separated by ';', e.g. \"67;56;238;348\"")->required();
  script->add_option("-o,--output", output);
  script->add_flag("--json", json);

  auto* iso = app.add_subcommand("iso", "Isomorphism test; exit 0 iff isomorphic");
  iso->add_option("a", file)->required();
  iso->add_option("b", file_b)->required();
  iso->add_flag("--json", json);

  auto* homology = app.add_subcommand("homology", "Integral homology");
  homology->add_option("file", file)->required();
  homology->add_flag("--json", json);

  auto* cover = app.add_subcommand("cover", "Branched coverings");
  cover->require_subcommand(1);
  auto* cover_check = cover->add_subcommand("check", "Certify a branched covering");
  cover_check->add_option("map", map_file, "File of 'source target' vertex pairs")->required();
  cover_check->add_option("source", file)->required();
  cover_check->add_option("target", file_b)->required();
  cover_check->add_flag("--json", json);

  auto* catalog = app.add_subcommand("catalog", "Named complexes");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "Entry names");
  cat_list->add_flag("--json", json);
  auto* cat_get = catalog->add_subcommand("get", "Print or write an entry");
  cat_get->add_option("name", name)->required();
  cat_get->add_option("-o,--output", output);
  cat_get->add_flag("--json", json);
  auto* cat_verify = catalog->add_subcommand("verify", "Full integrity suite; exit 3 on any failure");
  cat_verify->add_flag("--json", json);

  auto* classify = app.add_subcommand("classify", "Census of normal 3-pseudomanifolds");
  classify->add_option("--vertices", vertices)->required();
  classify->add_flag("--exhaustive", exhaustive, "Cross-check with the flat search");
  classify->add_flag("--no-symmetry", no_symmetry, "Disable automorphism pruning");
  classify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  classify->add_option("--out", outdir, "Directory for the output files")->check(CLI::ExistingDirectory);

  auto* surfaces = app.add_subcommand("enumerate-surfaces", "Weak 2-pseudomanifolds on n vertices");
  surfaces->add_option("--vertices", vertices)->required();
  surfaces->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  int code = kExitOk;
  auto one = [&](const std::string& path) { return load(path, code); };

  if (*verify || *links || *moves || *homology) {
    ComplexPtr k = one(file);
    if (!k) return code;
    if (*verify) return run_report([&](char** out) { return pmc_verify(k.get(), json, out); });
    if (*links) return run_report([&](char** out) { return pmc_links(k.get(), json, out); });
    if (*moves) return run_report([&](char** out) { return pmc_moves(k.get(), dim, json, out); });
    return run_report([&](char** out) { return pmc_homology(k.get(), json, out); });
  }
  if (*apply || *script) {
    ComplexPtr k = one(file);
    if (!k) return code;
    pmc_complex* moved = nullptr;
    const pmc_status s = *apply ? pmc_apply(k.get(), face.c_str(), fresh, &moved)
                                : pmc_script(k.get(), steps.c_str(), &moved);
    if (s != PMC_OK) return report_error(s);
    ComplexPtr result(moved);
    return write_complex(result.get(), output, json);
  }
  if (*iso) {
    ComplexPtr a = one(file);
    if (!a) return code;
    ComplexPtr b = one(file_b);
    if (!b) return code;
    return run_report([&](char** out) { return pmc_iso(a.get(), b.get(), json, out); });
  }
  if (*cover_check) {
    ComplexPtr src = one(file);
    if (!src) return code;
    ComplexPtr tgt = one(file_b);
    if (!tgt) return code;
    std::ifstream in(map_file);
    if (!in) {
      std::cerr << "pmc: cannot open " << map_file << "\n";
      return kExitUsage;
    }
    const std::string map_text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return run_report([&](char** out) { return pmc_cover_check(src.get(), tgt.get(), map_text.c_str(), json, out); });
  }
  if (*cat_list) return run_report([&](char** out) { return pmc_catalog_list(json, out); });
  if (*cat_verify) return run_report([&](char** out) { return pmc_catalog_verify(json, out); });
  if (*cat_get) {
    pmc_complex* k = nullptr;
    const pmc_status s = pmc_catalog_get(name.c_str(), &k);
    if (s != PMC_OK) return report_error(s);
    ComplexPtr entry(k);
    return write_complex(entry.get(), output, json);
  }
  if (*classify) {
    pmc_classify_options options;
    pmc_classify_defaults(&options);
    options.vertices = vertices;
    options.exhaustive = exhaustive;
    options.symmetry = !no_symmetry;
    options.jobs = jobs;
    return run_report([&](char** out) { return pmc_classify(&options, outdir.c_str(), out); });
  }
  if (*surfaces) return run_report([&](char** out) { return pmc_enumerate_surfaces(vertices, json, out); });
  return kExitUsage;
}
