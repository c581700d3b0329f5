#include "pmc/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pmc/bistellar.hpp"
#include "pmc/classify.hpp"
#include "pmc/covering.hpp"
#include "pmc/homology.hpp"
#include "pmc/io.hpp"
#include "pmc/recognition.hpp"
#include "pmc/report.hpp"

namespace pmc::catalog_data {
const std::map<std::string, std::string>& files();
}

namespace pmc::catalog {

namespace {

using nlohmann::json;

const json& manifest() {
  static const json m = json::parse(catalog_data::files().at("manifest.json"));
  return m;
}

const json& entry_of(const std::string& name) {
  for (const json& e : manifest()["entries"])
    if (e["name"] == name) return e;
  throw InvalidArgument("unknown catalog entry '" + name + "'");
}

const std::string& file_text(const std::string& file) {
  const auto& files = catalog_data::files();
  const auto it = files.find(file);
  if (it == files.end()) throw IntegrityError("catalog file " + file + " is missing");
  return it->second;
}

Complex shifted(const Complex& k, int by) {
  std::vector<Vertex> map(kMaxVertex + 1, -1);
  for (Vertex v : k.vertices()) map[v] = v + by;
  return k.relabeled(map);
}

std::vector<int> vertex_degrees(const Complex& k) {
  std::vector<int> d;
  for (Vertex v : k.vertices()) d.push_back(neighbours(k, v).size());
  std::sort(d.rbegin(), d.rend());
  return d;
}

// The 7-vertex weak 2-pseudomanifolds, computed once.
const std::vector<Complex>& seven_vertex_classes() {
  static const std::vector<Complex> classes = classify::enumerate_weak_2pm(7);
  return classes;
}

Complex surface_by_degrees(const std::string& seq, bool pseudomanifold) {
  std::vector<Complex> hits;
  for (const Complex& s : seven_vertex_classes())
    if (format_degree_sequence(vertex_degrees(s)) == seq && is_pseudomanifold(s) == pseudomanifold) hits.push_back(s);
  if (hits.size() != 1)
    throw IntegrityError(std::to_string(hits.size()) + " seven-vertex classes have degree sequence " + seq);
  return shifted(hits.front(), 1);
}

Complex torus7() {
  std::vector<Simplex> facets;
  for (int i = 0; i < 7; ++i) {
    auto v = [&](int j) { return (i + j) % 7 + 1; };
    facets.push_back(Simplex::of({v(0), v(1), v(3)}));
    facets.push_back(Simplex::of({v(0), v(2), v(3)}));
  }
  return Complex(std::move(facets));
}

Complex replaced(const json& src) {
  const Complex base = get(src["base"].get<std::string>());
  std::set<Simplex> facets(base.facets().begin(), base.facets().end());
  for (const auto& f : src["remove"]) {
    if (!facets.erase(parse_face(f.get<std::string>())))
      throw IntegrityError("facet " + f.get<std::string>() + " is not in " + src["base"].get<std::string>());
  }
  for (const auto& f : src["add"]) facets.insert(parse_face(f.get<std::string>()));
  return Complex({facets.begin(), facets.end()});
}

Complex materialize(const json& e) {
  const json& src = e["source"];
  if (src.contains("file")) return io::parse_complex(file_text(src["file"]));
  if (src.contains("script")) {
    const Complex parent = get(src["script"]["parent"].get<std::string>());
    try {
      return run_script(parent, parse_script(src["script"]["steps"].get<std::string>()));
    } catch (const ScriptError& err) {
      throw IntegrityError(e["name"].get<std::string>() + ": " + err.what());
    }
  }
  const std::string kind = src["constructor"];
  if (kind == "standard_sphere") {
    const Simplex vs = Simplex::from(src["vertices"].get<std::vector<Vertex>>());
    return standard_sphere(vs.size() - 2, vs);
  }
  if (kind == "rp2_6") return shifted(rp2_6(), 1);
  if (kind == "torus7") return torus7();
  if (kind == "surface_by_degrees") return surface_by_degrees(src["degrees"], src["pseudomanifold"]);
  if (kind == "k_manifold") return k_manifold(src["d"]);
  if (kind == "a_complex") return a_complex(src["d"]);
  if (kind == "replace") return replaced(src);
  throw IntegrityError("unknown constructor " + kind);
}

std::recursive_mutex& cache_mutex() {
  static std::recursive_mutex m;
  return m;
}
std::map<std::string, Complex>& cache() {
  static std::map<std::string, Complex> c;
  return c;
}

// ---- expectation checks ----

std::set<Simplex> edge_set(const json& list) {
  std::set<Simplex> out;
  for (const auto& e : list) out.insert(parse_face(e.get<std::string>()));
  return out;
}

std::string format_set(const std::set<Simplex>& s) {
  std::string out = "{";
  for (Simplex x : s) out += (out.size() > 1 ? "," : "") + format_face(x);
  return out + "}";
}

std::set<Simplex> graph_edges(const Graph& g) { return {g.edges.begin(), g.edges.end()}; }

std::set<Simplex> removable_edges(const Complex& k) {
  std::set<Simplex> out;
  for (const Move& m : enumerate_moves(k, k.dim() - 1)) out.insert(m.alpha);
  return out;
}

std::string name_or_describe(const Complex& lk) {
  if (const auto n = name_surface(lk)) return *n;
  return describe(classify_surface(lk));
}

std::string homology_text(const Complex& k) {
  const HomologyProfile h = homology(k);
  std::string out;
  for (std::size_t i = 0; i < h.betti.size(); ++i)
    out += (i ? ", " : "") + format_group(h.betti[i], h.torsion[i]);
  return out;
}

// Facet lines that may repeat (printed lists are checked as they stand).
std::vector<Simplex> listed_facets(const std::string& text, int& repeats) {
  std::vector<Simplex> out;
  std::istringstream in(text);
  std::string line;
  repeats = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<Vertex> vs;
    for (Vertex v; ls >> v;) vs.push_back(v);
    const Simplex s = Simplex::from(vs);
    if (std::find(out.begin(), out.end(), s) != out.end()) ++repeats;
    out.push_back(s);
  }
  return out;
}

bool check_map(const Complex& k, const Complex& l, const json& spec, std::string& detail) {
  const std::string text = spec["map"];
  const VertexMap m = parse_cycles(text, k.vertex_set() | l.vertex_set());
  const std::string direction = spec.value("direction", "forward");
  const bool ok = direction == "forward" ? is_isomorphism(k, l, m) : is_isomorphism(l, k, m);
  detail = text + " (" + direction + ")";
  return ok;
}

std::vector<CheckResult> run_checks(const std::string& name, const Complex& k, const json& expect) {
  std::vector<CheckResult> out;
  auto add = [&](const std::string& check, bool ok, std::string detail) { out.push_back({name, check, ok, std::move(detail)}); };
  auto compare = [&](const std::string& check, const std::string& got, const std::string& want) {
    add(check, got == want, got == want ? got : "got " + got + ", expected " + want);
  };
  auto flag = [&](const std::string& check, bool got, bool want) {
    compare(check, got ? "true" : "false", want ? "true" : "false");
  };

  for (const auto& [key, want] : expect.items()) {
    if (key == "degree_sequence") compare(key, format_degree_sequence(vertex_degrees(k)), want);
    else if (key == "surface") compare(key, to_string(classify_surface(k).kind), want);
    else if (key == "weak_pm") flag(key, is_weak_pseudomanifold(k), want);
    else if (key == "pseudomanifold") flag(key, is_pseudomanifold(k), want);
    else if (key == "normal") flag(key, is_normal(k), want);
    else if (key == "neighbourly") flag(key, is_neighbourly(k), want);
    else if (key == "combinatorial_manifold") flag(key, is_combinatorial_3_manifold(k), want);
    else if (key == "sphere") {
      const HomologyProfile sphere{{1, 0, 0, 1}, {{}, {}, {}, {}}};
      const bool manifold = k.dim() == 3 && is_combinatorial_3_manifold(k);
      const bool ok = manifold && homology(k) == sphere;
      add(key, ok == want.get<bool>(), std::string(manifold ? "combinatorial 3-manifold" : "not a combinatorial 3-manifold") +
                                           ", homology " + homology_text(k));
    } else if (key == "f0" || key == "vertices") compare(key, std::to_string(k.num_vertices()), std::to_string(want.get<int>()));
    else if (key == "num_facets") compare(key, std::to_string(k.num_facets()), std::to_string(want.get<int>()));
    else if (key == "f") {
      auto f = f_vector(k);
      compare(key, format_tuple(f), format_tuple(want.get<std::vector<long>>()));
    } else if (key == "chi") compare(key, std::to_string(euler_characteristic(k)), std::to_string(want.get<long>()));
    else if (key == "n_s") compare(key, std::to_string(singular_vertices(k).size()), std::to_string(want.get<int>()));
    else if (key == "all_links") {
      std::string bad;
      for (Vertex v : k.vertices()) {
        const std::string n = name_or_describe(link(k, Simplex::single(v)));
        if (n != want) bad += " lk(" + std::to_string(v) + ")=" + n;
      }
      add(key, bad.empty(), bad.empty() ? "every link is " + want.get<std::string>() : bad.substr(1));
    } else if (key == "singular_link_multiset" || key == "singular_links") {
      std::map<std::string, std::string> got_map;
      std::vector<std::string> got_list;
      for (const SingularVertex& s : singular_vertices(k)) {
        const std::string n = name_or_describe(link(k, Simplex::single(s.vertex)));
        got_map[std::to_string(s.vertex)] = n;
        got_list.push_back(n);
      }
      std::sort(got_list.begin(), got_list.end());
      if (key == "singular_links") {
        std::map<std::string, std::string> want_map = want.get<std::map<std::string, std::string>>();
        compare(key, json(got_map).dump(), json(want_map).dump());
      } else {
        auto want_list = want.get<std::vector<std::string>>();
        std::sort(want_list.begin(), want_list.end());
        compare(key, json(got_list).dump(), json(want_list).dump());
      }
    } else if (key == "homology") {
      std::string want_text;
      for (const auto& g : want) want_text += (want_text.empty() ? "" : ", ") + g.get<std::string>();
      compare(key, homology_text(k), want_text);
    } else if (key == "aut_order") compare(key, std::to_string(automorphisms(k).size()), std::to_string(want.get<int>()));
    else if (key == "automorphisms") {
      for (const auto& g : want) {
        const VertexMap m = parse_cycles(g, k.vertex_set());
        add(key, is_isomorphism(k, k, m), g.get<std::string>());
      }
    } else if (key == "not_automorphisms") {
      for (const auto& g : want) {
        const VertexMap m = parse_cycles(g, k.vertex_set());
        add("not automorphism", !is_isomorphism(k, k, m), g.get<std::string>());
      }
    } else if (key == "g_n") {
      for (const auto& [n, edges] : want.items())
        compare("G_" + n, format_set(graph_edges(g_n_graph(k, std::stoi(n)))), format_set(edge_set(edges)));
    } else if (key == "degree3_edges") compare(key, format_set(graph_edges(g_n_graph(k, 3))), format_set(edge_set(want)));
    else if (key == "degree3_edges_avoiding") {
      std::set<Simplex> got;
      for (Simplex e : g_n_graph(k, 3).edges)
        if (!e.contains(Vertex{want["vertex"].get<int>()})) got.insert(e);
      compare(key, format_set(got), format_set(edge_set(want["edges"])));
    } else if (key == "neg" || key == "non_edges") compare(key, format_set(graph_edges(non_edge_graph(k))), format_set(edge_set(want)));
    else if (key == "non_edge_count") compare(key, std::to_string(non_edge_graph(k).edges.size()), std::to_string(want.get<int>()));
    else if (key == "edge_degree") {
      for (const auto& [e, n] : want.items())
        compare("deg " + e, std::to_string(degree(k, parse_face(e))), std::to_string(n.get<int>()));
    } else if (key == "removable_edges") compare(key, format_set(removable_edges(k)), format_set(edge_set(want)));
    else if (key == "no_moves") {
      for (const auto& i : want) {
        const auto moves = enumerate_moves(k, i.get<int>());
        add(std::to_string(i.get<int>()) + "-moves", moves.empty(), std::to_string(moves.size()) + " available");
      }
    } else if (key == "equals_join_s0") {
      std::optional<Complex> j;
      for (const auto& p : want) {
        const Complex s0 = standard_sphere(0, Simplex::of({p[0].get<int>(), p[1].get<int>()}));
        j = j ? join(*j, s0) : s0;
      }
      add(key, *j == k, json(want).dump());
    } else if (key == "equals_suspension") {
      const Complex s = one_point_suspension(get(want["base"]), want["u"], want["v"]);
      add(key, s == k, "suspension of " + want["base"].get<std::string>());
    } else if (key == "iso_suspension") {
      const Complex base = get(want.get<std::string>());
      std::string found;
      for (Vertex u : base.vertices()) {
        const Vertex fresh = base.vertex_set().max_vertex() + 1;
        if (are_isomorphic(one_point_suspension(base, u, fresh), k).isomorphic) {
          found = "suspension at " + std::to_string(u);
          break;
        }
      }
      add(key, !found.empty(), found.empty() ? "no one-point suspension of " + want.get<std::string>() : found);
    } else if (key == "isomorphic_to") {
      const Complex other = get(want["name"]);
      if (want.contains("map")) {
        std::string detail;
        const bool ok = check_map(k, other, want, detail);
        add(key + " " + want["name"].get<std::string>(), ok, detail);
      } else {
        const IsoResult r = are_isomorphic(k, other, link_namer());
        add(key + " " + want["name"].get<std::string>(), r.isomorphic,
            r.isomorphic ? format_cycles(r.map) : r.invariant + ": " + r.detail);
      }
    } else if (key == "contains_file") {
      int repeats = 0;
      const auto listed = listed_facets(file_text(want["file"]), repeats);
      std::set<Simplex> cone;
      for (Simplex f : k.facets())
        if (f.contains(Vertex{0})) cone.insert(f);
      std::size_t missing = 0;
      std::set<Simplex> distinct(listed.begin(), listed.end());
      for (Simplex f : distinct) missing += !cone.count(f);
      const bool exact = want["exact"];
      const bool ok = missing == 0 && (!exact || distinct.size() == cone.size());
      add(key, ok,
          std::to_string(listed.size()) + " listed (" + std::to_string(repeats) + " repeated), " +
              std::to_string(cone.size()) + " cone facets, " + std::to_string(missing) + " listed facets missing");
    } else {
      add(key, false, "unknown expectation key");
    }
  }
  return out;
}

CheckResult check_relation(const json& rel) {
  const std::string from = rel["from"], to = rel["to"], move = rel["move"], kind = rel["kind"];
  const std::string label = "k" + move + "(" + from + ") " + (kind == "equal" ? "= " : "~ ") + to;
  try {
    const Complex moved = apply_move(get(from), parse_face(move));
    const Complex target = get(to);
    if (kind == "equal") return {"relation", label, moved == target, moved == target ? "facet sets agree" : "facet sets differ"};
    if (rel.contains("map")) {
      std::string detail;
      const bool ok = check_map(moved, target, rel, detail);
      return {"relation", label, ok, detail};
    }
    const IsoResult r = are_isomorphic(moved, target, link_namer());
    return {"relation", label, r.isomorphic, r.isomorphic ? "by " + format_cycles(r.map) : r.invariant + ": " + r.detail};
  } catch (const Error& err) {
    return {"relation", label, false, err.what()};
  }
}

std::string failures(const std::vector<CheckResult>& results) {
  std::string out;
  for (const CheckResult& r : results)
    if (!r.ok) out += "\n  " + r.entry + " " + r.check + ": " + r.detail;
  return out;
}

bool surface_name(const std::string& name) {
  static const std::set<std::string> names = {"S_1", "S_2", "S_3", "S_4", "S_5", "S_6", "S_7", "S_8", "S_9", "R_1",
                                              "R_2", "R_3", "R_4", "T",   "P_1", "P_2", "P_3", "P_4"};
  return names.count(name) > 0;
}

}  // namespace

std::vector<std::string> list() {
  std::vector<std::string> out;
  for (const json& e : manifest()["entries"]) out.push_back(e["name"]);
  return out;
}

bool contains(const std::string& name) {
  for (const json& e : manifest()["entries"])
    if (e["name"] == name) return true;
  return false;
}

std::string source_of(const std::string& name) {
  const json& src = entry_of(name)["source"];
  if (src.contains("file")) return "facet list " + src["file"].get<std::string>();
  if (src.contains("script"))
    return "script " + src["script"]["steps"].get<std::string>() + " from " + src["script"]["parent"].get<std::string>();
  std::string out = "constructor " + src["constructor"].get<std::string>();
  if (src.contains("d")) out += " d=" + std::to_string(src["d"].get<int>());
  if (src.contains("degrees")) out += " " + src["degrees"].get<std::string>();
  if (src.contains("base")) out += " on " + src["base"].get<std::string>();
  return out;
}

Complex build(const std::string& name) { return materialize(entry_of(name)); }

Complex get(const std::string& name) {
  std::lock_guard lock(cache_mutex());
  if (const auto it = cache().find(name); it != cache().end()) return it->second;
  const json& e = entry_of(name);
  Complex k = materialize(e);
  const auto results = run_checks(name, k, e["expect"]);
  if (const std::string bad = failures(results); !bad.empty()) throw IntegrityError("catalog entry " + name + " failed:" + bad);
  cache().emplace(name, k);
  return k;
}

Complex k_manifold(int d) {
  if (d < 2) throw InvalidArgument("K^d_{2d+3} needs d >= 2");
  const int n = 2 * d + 3;
  auto v = [n](int i) { return (i - 1) % n + 1; };
  std::set<Simplex> facets;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= i + d; ++j) {
      std::vector<Vertex> vs;
      for (int t = i; t <= i + d + 1; ++t)
        if (t != j) vs.push_back(v(t));
      facets.insert(Simplex::from(vs));
    }
  return Complex({facets.begin(), facets.end()});
}

Complex a_complex(int d) {
  std::vector<Simplex> ball;
  if (d == 3) {
    for (const char* f : {"1235", "2356", "3567", "3467", "4678"}) ball.push_back(parse_face(f));
  } else if (d == 4) {
    for (const char* f : {"12346", "23467", "34678", "46789", "45789", "5,7,8,9,10"}) ball.push_back(parse_face(f));
  } else {
    throw InvalidArgument("A^d_{2d+4} is provided for d = 3, 4");
  }
  const Complex k = k_manifold(d);
  std::set<Simplex> facets(k.facets().begin(), k.facets().end());
  std::map<Simplex, int> boundary;
  for (Simplex f : ball) {
    if (!facets.erase(f)) throw IntegrityError(format_face(f) + " is not a facet of K^" + std::to_string(d));
    for (Vertex v : f.vertices()) ++boundary[f.without(v)];
  }
  for (const auto& [ridge, count] : boundary)
    if (count == 1) facets.insert(ridge.with(0));
  return Complex({facets.begin(), facets.end()});
}

Complex b39() { return get("B_3_9"); }

Complex seven_vertex_surface(const std::string& name) {
  if (!surface_name(name)) throw InvalidArgument("'" + name + "' is not a catalog surface");
  return get(name);
}

std::optional<std::string> name_surface(const Complex& k) {
  static const std::map<std::vector<std::uint64_t>, std::string> names = [] {
    std::map<std::vector<std::uint64_t>, std::string> m;
    for (const std::string& name : list())
      if (surface_name(name)) m.emplace(canonical_key(build(name)), name);
    return m;
  }();
  if (k.dim() != 2) return std::nullopt;
  const auto it = names.find(canonical_key(k));
  if (it == names.end()) return std::nullopt;
  return it->second;
}

LinkNamer link_namer() {
  return [](const Complex& k) { return name_surface(k); };
}

std::vector<CheckResult> verify_entry(const std::string& name) {
  const json& e = entry_of(name);
  Complex k = [&] {
    try {
      return materialize(e);
    } catch (const Error& err) {
      throw IntegrityError(name + ": " + err.what());
    }
  }();
  return run_checks(name, k, e["expect"]);
}

std::vector<CheckResult> verify_all() {
  std::vector<CheckResult> out;
  for (const std::string& name : list()) {
    try {
      const auto r = verify_entry(name);
      out.insert(out.end(), r.begin(), r.end());
    } catch (const Error& err) {
      out.push_back({name, "materialize", false, err.what()});
    }
  }
  for (const json& rel : manifest()["relations"]) out.push_back(check_relation(rel));
  // printed claims that the data refutes; each must stay refuted
  for (const json& e : manifest()["errata"]) {
    if (e.contains("relation")) {
      const CheckResult r = check_relation(e["relation"]);
      out.push_back({"erratum", e["claim"], !r.ok, (r.ok ? "unexpectedly holds, " : "refuted, ") + r.detail});
      continue;
    }
    const std::string name = e["entry"];
    try {
      const auto r = run_checks(name, build(name), e["expect"]);
      std::string detail;
      bool refuted = false;
      for (const CheckResult& c : r) {
        refuted = refuted || !c.ok;
        detail += (detail.empty() ? "" : "; ") + c.check + ": " + c.detail;
      }
      out.push_back({"erratum", e["claim"], refuted, (refuted ? "refuted, " : "unexpectedly holds, ") + detail});
    } catch (const Error& err) {
      out.push_back({"erratum", e["claim"], false, err.what()});
    }
  }
  for (const std::string prefix : {"S3_8_", "N_"}) {
    std::map<std::vector<std::uint64_t>, std::string> seen;
    std::string clash;
    int count = 0;
    for (const std::string& name : list()) {
      if (name.rfind(prefix, 0) != 0 || name.find("prime") != std::string::npos) continue;
      ++count;
      try {
        const auto [it, fresh] = seen.emplace(canonical_key(get(name)), name);
        if (!fresh) clash += " " + it->second + "~" + name;
      } catch (const Error&) {
        // already reported above
      }
    }
    out.push_back({"pairwise", prefix + "* distinct", clash.empty() && static_cast<int>(seen.size()) == count,
                   clash.empty() ? std::to_string(seen.size()) + " classes" : clash.substr(1)});
  }
  return out;
}

}  // namespace pmc::catalog
