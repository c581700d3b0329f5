// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance            every criterion
//   acceptance 3 4        only the listed ones
//
// Exit status is 0 iff every selected criterion passed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "pmc/bistellar.hpp"
#include "pmc/catalog.hpp"
#include "pmc/classify.hpp"
#include "pmc/complex.hpp"
#include "pmc/covering.hpp"
#include "pmc/homology.hpp"
#include "pmc/iso.hpp"
#include "pmc/recognition.hpp"
#include "pmc/report.hpp"

using namespace pmc;
using Key = std::vector<std::uint64_t>;

namespace {

// Collects the reasons a criterion failed.
struct Verdict {
  std::vector<std::string> problems;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

const classify::CensusReport& census() {
  static const classify::CensusReport r = classify::run_census();
  return r;
}

std::string degrees_of(const Complex& k) {
  std::vector<int> d;
  for (Vertex v : k.vertices()) d.push_back(degree(k, Simplex::single(v)));
  return format_degree_sequence(d);
}

std::string join_names(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

// ---------------------------------------------------------------------------

void seven_vertex_surfaces(Verdict& v) {
  // the parenthesized sequences printed with the thirteen surfaces
  std::multiset<std::string> printed = {"6^7",         "6^2.4^3.3^2", "6.5^3.3^3",   "6.5^2.4^2.3^2", "5^3.4^3.3",
                                        "5^2.4^5",     "6^3.5^3.3",   "6^2.5^4.4",   "6^4.4^3",       "6.3^6",
                                        "6^2.4^3.3^2", "6.5^6",       "6^3.5^2.4^2"};
  const auto found = classify::enumerate_weak_2pm(7);
  std::multiset<std::string> got;
  for (const Complex& k : found) got.insert(degrees_of(k));
  v.expect(found.size() == 13, "found " + std::to_string(found.size()) + " classes");
  v.expect(got == printed, "degree sequences differ from the printed list");
  // S_5 and P_2 share a sequence; they must differ in strong connectivity
  int shared_pm = 0;
  for (const Complex& k : found)
    if (degrees_of(k) == "6^2.4^3.3^2") shared_pm += is_pseudomanifold(k);
  v.expect(shared_pm == 1, "6^2.4^3.3^2 pair not split by pseudomanifold status");
  v.note = std::to_string(found.size()) + " classes";
}

void neighbourly_census(Verdict& v) {
  const auto found = classify::enumerate_neighbourly_normal_8({true, 1});
  std::map<Key, std::string> wanted;
  for (const char* s : {"S3_8_35", "S3_8_36", "S3_8_37", "S3_8_38"}) wanted[canonical_key(catalog::get(s))] = s;
  for (int i = 1; i <= 15; ++i) {
    const std::string n = "N_" + std::to_string(i);
    wanted[canonical_key(catalog::get(n))] = n;
  }
  std::set<std::string> matched;
  int manifolds = 0;
  for (const Complex& k : found) {
    manifolds += is_combinatorial_3_manifold(k);
    const auto it = wanted.find(canonical_key(k));
    if (it == wanted.end())
      v.expect(false, "unmatched class");
    else
      v.expect(matched.insert(it->second).second, it->second + " matched twice");
  }
  v.expect(found.size() == 19, "found " + std::to_string(found.size()) + " classes");
  v.expect(manifolds == 4, std::to_string(manifolds) + " manifolds");
  v.expect(matched.size() == 19, std::to_string(matched.size()) + " catalog entries matched");
  v.note = std::to_string(found.size()) + " classes, " + std::to_string(manifolds) + " manifolds";
}

void full_census(Verdict& v) {
  const auto& r = census();
  std::map<int, int> spheres, normals;
  int nm = 0, ns = 0;
  for (const auto& c : r.classes) {
    if (c.manifold) {
      ++nm, ++spheres[c.non_edges];
      v.expect(c.name.rfind("S3_8_", 0) == 0, c.name + " is a manifold");
    } else {
      ++ns, ++normals[c.non_edges];
      v.expect(c.name.rfind("N_", 0) == 0, c.name + " is not a manifold");
    }
  }
  const std::map<int, int> want_s = {{0, 4}, {1, 5}, {2, 6}, {3, 8}, {4, 8}, {5, 5}, {6, 3}};
  const std::map<int, int> want_n = {{0, 15}, {1, 9}, {2, 7}, {3, 4}};
  v.expect(nm == 39, std::to_string(nm) + " sphere classes");
  v.expect(ns == 35, std::to_string(ns) + " N classes");
  v.expect(spheres == want_s, "sphere layer sizes differ");
  v.expect(normals == want_n, "N layer sizes differ");
  v.note = std::to_string(nm) + " + " + std::to_string(ns) + " classes";
}

void table_one(Verdict& v) {
  struct Row {
    int first, last;
    std::vector<long> f;
    long chi;
    std::size_t ns;
    std::string links;  // sorted names, or "R*" for "both in {R_1..R_4}"
  };
  const std::vector<Row> printed = {
      {1, 1, {28, 56, 28}, 8, 8, "T,T,T,T,T,T,T,T"},
      {2, 2, {28, 44, 22}, 2, 2, "T,T"},
      {3, 3, {28, 46, 23}, 3, 5, "R_2,R_2,R_3,R_3,T"},
      {4, 4, {28, 42, 21}, 1, 1, "T"},
      {5, 5, {28, 48, 24}, 4, 8, "R_4,R_4,R_4,R_4,R_4,R_4,R_4,R_4"},
      {6, 6, {28, 48, 24}, 4, 8, "R_3,R_3,R_3,R_3,R_3,R_3,R_3,R_3"},
      {7, 7, {28, 42, 21}, 1, 2, "R_4,R_4"},
      {8, 15, {28, 42, 21}, 1, 2, "R*"},
      {16, 24, {27, 40, 20}, 1, 2, "R*"},
      {25, 31, {26, 38, 19}, 1, 2, "R*"},
      {32, 35, {25, 36, 18}, 1, 2, "R*"},
  };
  std::map<std::string, const classify::ClassRecord*> by_name;
  for (const auto& c : census().classes) by_name[c.name] = &c;
  int rows = 0;
  for (const Row& row : printed)
    for (int i = row.first; i <= row.last; ++i) {
      const std::string name = "N_" + std::to_string(i);
      const auto it = by_name.find(name);
      if (it == by_name.end()) {
        v.expect(false, name + " missing from the census");
        continue;
      }
      const auto& c = *it->second;
      ++rows;
      v.expect(std::vector<long>(c.f.begin() + 1, c.f.end()) == row.f, name + " f-vector " + format_tuple(c.f));
      v.expect(c.chi == row.chi, name + " chi");
      v.expect(c.singular_links.size() == row.ns, name + " n_s");
      std::vector<std::string> names;
      for (const auto& [vx, n] : c.singular_links) names.push_back(n);
      if (row.links == "R*") {
        for (const auto& n : names) v.expect(n == "R_1" || n == "R_2" || n == "R_3" || n == "R_4", name + " link " + n);
      } else {
        v.expect(join_names(names) == row.links, name + " links " + join_names(names));
      }
    }
  // the regenerated table must carry the same data
  std::istringstream table(classify::emit_table1(census()));
  std::string line;
  int emitted = 0;
  while (std::getline(table, line)) {
    if (line.rfind("N_", 0) != 0) continue;
    ++emitted;
    std::istringstream fields(line);
    std::string name, f;
    fields >> name >> f;
    const auto it = by_name.find(name);
    v.expect(it != by_name.end() && "(" + std::to_string(it->second->f[1]) + "," + std::to_string(it->second->f[2]) +
                                            "," + std::to_string(it->second->f[3]) + ")" == f,
             "emitted row " + line);
  }
  v.expect(emitted == 35, "emitted table has " + std::to_string(emitted) + " rows");
  v.note = std::to_string(rows) + " rows";
}

void homology_checks(Verdict& v) {
  const HomologyProfile n1 = homology(catalog::get("N_1"));
  v.expect(n1.betti == std::vector<long>{1, 0, 8, 1} && n1.torsion[1].empty() && n1.torsion[2].empty() &&
               n1.torsion[3].empty(),
           "N_1 homology");
  const HomologyProfile n3 = homology(catalog::get("N_3"));
  v.expect(n3.betti == std::vector<long>{1, 0, 2, 0} && n3.torsion[1].empty() &&
               n3.torsion[2] == std::vector<BigInt>{2} && n3.torsion[3].empty(),
           "N_3 homology");
  int spheres = 0;
  for (const auto& c : census().classes) {
    if (!c.manifold) continue;
    ++spheres;
    const HomologyProfile h = homology(c.form);
    bool torsion_free = true;
    for (const auto& t : h.torsion) torsion_free &= t.empty();
    v.expect(h.betti == std::vector<long>{1, 0, 0, 1} && torsion_free, c.name + " homology");
  }
  v.expect(spheres == 39, std::to_string(spheres) + " spheres checked");
  v.note = "N_1, N_3 and " + std::to_string(spheres) + " spheres";
}

void obstructions(Verdict& v) {
  const Complex a3 = catalog::get("A_3_10");
  const Complex a4 = catalog::get("A_4_12");
  const Complex b = catalog::get("B_3_9");
  std::ostringstream note;
  const auto a3_moves = enumerate_moves(a3, 1);
  for (const Move& m : a3_moves)
    v.expect(false, "A_3_10 admits the 1-move " + format_face(m.alpha) + " -> " + format_face(m.beta));
  const auto a4_moves = enumerate_moves(a4, 1);
  for (const Move& m : a4_moves)
    v.expect(false, "A_4_12 admits the 1-move " + format_face(m.alpha) + " -> " + format_face(m.beta));
  const bool b_ok = enumerate_moves(b, 1).empty() && enumerate_moves(b, 2).empty();
  v.expect(b_ok, "B_3_9 admits a proper move");
  note << "B_3_9 " << (b_ok ? "has no proper move" : "has proper moves");
  v.note = note.str();
}

void script_fidelity(Verdict& v) {
  int scripts = 0;
  for (const std::string& name : catalog::list()) {
    if (catalog::source_of(name).rfind("script ", 0) != 0) continue;
    ++scripts;
    try {
      catalog::build(name);
    } catch (const Error& e) {
      v.expect(false, name + ": " + e.what());
    }
  }
  auto witness = [&](const Complex& from, const std::string& to, const char* map, const std::string& label) {
    v.expect(is_isomorphism(from, catalog::get(to), parse_cycles(map, from.vertex_set())), label);
  };
  witness(apply_move(catalog::get("N_11"), parse_face("67")), "N_18", "(2,4)(5,7)", "k67(N_11) -> N_18");
  witness(apply_move(catalog::get("S3_8_35"), parse_face("68")), "S3_8_30", "(1,7,3)(2,8,4,5,6)",
          "k68(S3_8_35) -> S3_8_30");
  const MoveScript thirteen = parse_script("158;138;135;13;268;02;68;035;03;07;156;08;0");
  v.expect(thirteen.size() == 13, "script length");
  witness(run_script(catalog::get("N_5_prime"), thirteen), "N_6", "(2,3)(5,8)", "13-step script from N_5'");
  v.note = std::to_string(scripts) + " scripts, 3 witnesses";
}

void covering_checks(Verdict& v) {
  const QuotientReport q = verify_n24_quotient();
  v.expect(q.certificate.k == 2, "k = " + std::to_string(q.certificate.k));
  v.expect(q.certificate.branch_locus == Simplex::of({3, 8}), "branch locus " + format_face(q.certificate.branch_locus));
  v.expect(q.cover.num_vertices() == 14 && q.cover_is_sphere, "cover is not a 14-vertex sphere");
  v.expect(enumerate_moves(q.covering.target(), 2).empty(), "N_24 has removable edges");
  int coverings = 0, lifts = 0;
  for (const auto& d : fixtures::derived_n24_coverings(q.covering)) {
    const auto cert = check_branched_covering(d.map);
    if (!cert) {
      v.expect(false, "derived covering on " + format_face(d.facet) + " not certified");
      continue;
    }
    ++coverings;
    for (const Move& e : enumerate_moves(d.map.target(), 2)) {
      try {
        const LiftedMove lm = lift_proper_move(d.map, e.alpha);
        v.expect(lm.certificate.k == 2 && cert->branch_locus.contains(lm.certificate.branch_locus),
                 "lift of " + format_face(e.alpha) + " changed the covering");
        ++lifts;
      } catch (const Error& err) {
        v.expect(false, "lift of " + format_face(e.alpha) + ": " + err.what());
      }
    }
  }
  v.expect(lifts > 0, "no edge lifts exercised");
  v.note = "locus 38, " + std::to_string(lifts) + " lifts over " + std::to_string(coverings) + " derived coverings";
}

// The t-th of a fixed sequence of permutations of the labels.
std::vector<Vertex> nth_permutation(std::vector<Vertex> labels, std::uint64_t t) {
  std::vector<Vertex> out;
  std::uint64_t x = t * 2654435761ULL + 12345;
  while (!labels.empty()) {
    const std::size_t i = x % labels.size();
    x = x / labels.size() * 6364136223846793005ULL + 1442695040888963407ULL;
    out.push_back(labels[i]);
    labels.erase(labels.begin() + static_cast<long>(i));
  }
  return out;
}

void property_suites(Verdict& v) {
  long moves = 0, one_moves = 0;
  for (const auto& c : census().classes) {
    const Complex& k = c.form;
    const auto f = f_vector(k);
    for (int i = 0; i <= k.dim(); ++i)
      for (const Move& m : enumerate_moves(k, i)) {
        ++moves;
        const Complex after = apply_move(k, m);
        v.expect(apply_move(after, m.beta) == k, c.name + " move on " + format_face(m.alpha) + " is not undone");
        if (i == 1) {
          ++one_moves;
          const auto g = f_vector(after);
          v.expect(g[0] == f[0] && g[1] == f[1] + 1 && g[2] == f[2] + 2 && g[3] == f[3] + 1,
                   c.name + " 1-move on " + format_face(m.alpha) + " f-vector change");
        }
      }
    const HomologyProfile h = homology(k);
    long alt = 0;
    for (std::size_t i = 0; i < h.betti.size(); ++i) alt += (i % 2 ? -1 : 1) * h.betti[i];
    v.expect(alt == euler_characteristic(k), c.name + " Euler-Poincare");
  }
  long perms = 0;
  for (const std::string& name : catalog::list()) {
    const Complex k = catalog::get(name);
    const Complex c = canonical_form(k);
    v.expect(canonical_form(c) == c, name + " canonical form not idempotent");
    const auto labels = k.vertices();
    for (std::uint64_t t = 0; t < 100; ++t) {
      const auto img = nth_permutation(labels, t);
      VertexMap m(kMaxVertex + 1, -1);
      for (std::size_t i = 0; i < labels.size(); ++i) m[labels[i]] = img[i];
      ++perms;
      if (canonical_form(k.relabeled(m)) != c) {
        v.expect(false, name + " canonical form moved under permutation " + std::to_string(t));
        break;
      }
    }
  }
  v.note = std::to_string(moves) + " moves, " + std::to_string(one_moves) + " 1-moves, " + std::to_string(perms) +
           " permutations";
}

void theorem_one(Verdict& v) {
  std::set<Key> tops;
  for (const auto& c : census().classes)
    if (c.neighbourly) tops.insert(c.key);
  int runs = 0;
  for (const auto& c : census().classes) {
    if (c.neighbourly) continue;
    ++runs;
    try {
      const auto [top, script] = neighbourly_ize(c.form);
      for (const ScriptStep& s : script) v.expect(s.alpha.size() == 3, c.name + " used a move other than a 1-move");
      v.expect(is_neighbourly(top) && tops.count(canonical_key(top)), c.name + " ended outside the 19 classes");
    } catch (const Error& e) {
      v.expect(false, c.name + ": " + e.what());
    }
  }
  v.expect(tops.size() == 19, std::to_string(tops.size()) + " neighbourly classes");
  v.expect(runs == 55, std::to_string(runs) + " non-neighbourly classes");
  v.note = std::to_string(runs) + " classes";
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;  // 0: none
  std::function<void(Verdict&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "7-vertex weak 2-pseudomanifolds", 10, seven_vertex_surfaces},
      {2, "neighbourly census", 60, neighbourly_census},
      {3, "2-move closure", 120, full_census},
      {4, "Table 1 regeneration", 0, table_one},
      {5, "homology", 0, homology_checks},
      {6, "obstruction fixtures", 0, obstructions},
      {7, "script fidelity", 0, script_fidelity},
      {8, "branched covering of N_24", 0, covering_checks},
      {9, "property suites", 0, property_suites},
      {10, "neighbourly_ize at scale", 0, theorem_one},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const Criterion& c : all) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0) v.expect(secs < c.budget_s, "over the time budget");
    const bool ok = v.problems.empty();
    failed += !ok;
    std::printf("[%s] %2d %-34s %-48s %7.2f s\n", ok ? "PASS" : "FAIL", c.id, c.title, v.note.c_str(), secs);
    for (const auto& p : v.problems) std::printf("         - %s\n", p.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
