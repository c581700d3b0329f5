#include "pmc/classify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pmc/bistellar.hpp"
#include "pmc/catalog.hpp"
#include "pmc/io.hpp"
#include "pmc/iso.hpp"
#include "pmc/recognition.hpp"
#include "pmc/report.hpp"

namespace pmc::classify {

using Key = std::vector<std::uint64_t>;

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

// Thread-safe set of canonical keys.
class KeySet {
 public:
  void insert(Key key) {
    std::lock_guard lock(mutex_);
    keys_.insert(std::move(key));
  }
  std::vector<Complex> forms() const {
    std::vector<Complex> out;
    for (const Key& k : keys_) {
      std::vector<Simplex> facets;
      for (std::uint64_t m : k) facets.emplace_back(m);
      out.emplace_back(std::move(facets));
    }
    return out;
  }

 private:
  std::mutex mutex_;
  std::set<Key> keys_;
};

std::vector<std::uint64_t> subsets_lex(int n, int k) {
  std::vector<Simplex> s;
  for_each_subset((std::uint64_t{1} << n) - 1, k, [&](Simplex x) { s.push_back(x); });
  std::sort(s.begin(), s.end());
  std::vector<std::uint64_t> out;
  for (Simplex x : s) out.push_back(x.mask());
  return out;
}

// Facet-completion state: chosen facets and how many of them contain each
// ridge, indexed directly by mask.
class Completion {
 public:
  Completion(int n, int d)
      : n_(n), count_(std::size_t{1} << n, 0), chosen_(std::size_t{1} << n, 0), forbidden_(std::size_t{1} << n, 0),
        ridges_(subsets_lex(n, d)), candidates_(subsets_lex(n, d + 1)) {}

  int n() const { return n_; }
  const std::vector<std::uint64_t>& facets() const { return facets_; }

  bool addable(std::uint64_t f) const {
    if (chosen_[f] || forbidden_[f]) return false;
    for (std::uint64_t b = f; b; b &= b - 1)
      if (count_[f & ~(b & -b)] >= 2) return false;
    return true;
  }
  void add(std::uint64_t f) {
    chosen_[f] = 1;
    for (std::uint64_t b = f; b; b &= b - 1) ++count_[f & ~(b & -b)];
    for (std::uint64_t b = f; b; b &= b - 1) ++used_[std::countr_zero(b)];
    facets_.push_back(f);
  }
  void remove(std::uint64_t f) {
    chosen_[f] = 0;
    for (std::uint64_t b = f; b; b &= b - 1) --count_[f & ~(b & -b)];
    for (std::uint64_t b = f; b; b &= b - 1) --used_[std::countr_zero(b)];
    facets_.pop_back();
  }
  void forbid(std::uint64_t f, bool on) { forbidden_[f] = on; }

  // Lexicographically least ridge lying in exactly one chosen facet, or 0.
  std::uint64_t deficient() const {
    for (std::uint64_t r : ridges_)
      if (count_[r] == 1) return r;
    return 0;
  }
  // Lexicographically least facet that could start a new component, or 0.
  std::uint64_t fresh_start() const {
    for (std::uint64_t f : candidates_)
      if (addable(f)) return f;
    return 0;
  }
  bool used(Vertex v) const { return used_[v] > 0; }
  bool all_used() const {
    for (int v = 0; v < n_; ++v)
      if (!used_[v]) return false;
    return true;
  }

 private:
  int n_;
  std::vector<std::uint8_t> count_;
  std::vector<std::uint8_t> chosen_;
  std::vector<std::uint8_t> forbidden_;
  std::vector<std::uint64_t> ridges_;
  std::vector<std::uint64_t> candidates_;
  std::vector<std::uint64_t> facets_;
  int used_[64] = {};
};

Complex from_masks(const std::vector<std::uint64_t>& masks) {
  std::vector<Simplex> s;
  for (std::uint64_t m : masks) s.emplace_back(m);
  return Complex(std::move(s));
}

// ---- 2-dimensional weak pseudomanifolds ----

// Every labelled complex is reached exactly once: a deficient edge has a
// unique completion in the final complex, and at a closed state each
// possible new start is either taken or forbidden.
void surfaces_rec(Completion& c, KeySet& out) {
  if (const std::uint64_t r = c.deficient()) {
    for (int w = 0; w < c.n(); ++w) {
      const std::uint64_t f = r | (std::uint64_t{1} << w);
      if (f == r || !c.addable(f)) continue;
      c.add(f);
      surfaces_rec(c, out);
      c.remove(f);
    }
    return;
  }
  if (const std::uint64_t t = c.fresh_start()) {
    c.add(t);
    surfaces_rec(c, out);
    c.remove(t);
    c.forbid(t, true);
    surfaces_rec(c, out);
    c.forbid(t, false);
    return;
  }
  if (c.facets().empty() || !c.all_used()) return;
  // some labelling of every class has degrees non-increasing in the label
  std::uint64_t nb[64] = {};
  for (std::uint64_t f : c.facets())
    for (std::uint64_t b = f; b; b &= b - 1) nb[std::countr_zero(b)] |= f;
  for (int v = 1; v < c.n(); ++v)
    if (std::popcount(nb[v]) > std::popcount(nb[v - 1])) return;
  out.insert(canonical_key(c.facets()));
}

// ---- 3-dimensional searches ----

bool is_neighbourly_masks(const std::vector<std::uint64_t>& facets, int n) {
  std::uint64_t nb[64] = {};
  for (std::uint64_t f : facets)
    for (std::uint64_t b = f; b; b &= b - 1) nb[std::countr_zero(b)] |= f;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (int v = 0; v < n; ++v)
    if (nb[v] != all) return false;
  return true;
}

std::uint64_t apply(const VertexMap& g, std::uint64_t m) {
  std::uint64_t out = 0;
  for (std::uint64_t b = m; b; b &= b - 1) out |= std::uint64_t{1} << g[std::countr_zero(b)];
  return out;
}

struct NeighbourlySearch {
  Completion& c;
  KeySet& out;
  bool symmetry;

  // group: automorphisms (of the fixed link, apex fixed) preserving the chosen facets
  void rec(const std::vector<VertexMap>& group) {
    const std::uint64_t r = c.deficient();
    if (!r) {
      leaf();
      return;
    }
    std::vector<VertexMap> stab;
    if (symmetry)
      for (const VertexMap& g : group)
        if (apply(g, r) == r) stab.push_back(g);
    for (int w = 0; w < c.n(); ++w) {
      const std::uint64_t f = r | (std::uint64_t{1} << w);
      if (f == r || !c.addable(f)) continue;
      bool rep = true;
      for (const VertexMap& g : stab)
        if (g[w] < w) rep = false;
      if (!rep) continue;
      c.add(f);
      std::vector<VertexMap> next;
      if (symmetry)
        for (const VertexMap& g : stab)
          if (g[w] == w) next.push_back(g);
      rec(next);
      c.remove(f);
    }
  }

  void leaf() {
    if (!is_neighbourly_masks(c.facets(), c.n())) return;
    if (!is_normal(from_masks(c.facets()))) return;
    out.insert(canonical_key(c.facets()));
  }
};

struct FlatSearch {
  Completion& c;
  KeySet& out;
  int split_depth = -1;  // when >= 0, collect prefixes instead of searching
  std::vector<std::vector<std::uint64_t>>* prefixes = nullptr;

  void rec(int depth) {
    if (depth == split_depth) {
      prefixes->push_back(c.facets());
      return;
    }
    const std::uint64_t r = c.deficient();
    if (!r) {
      if (!c.all_used()) return;
      if (!is_normal(from_masks(c.facets()))) return;
      out.insert(canonical_key(c.facets()));
      return;
    }
    bool tried_unused = false;
    for (int w = 0; w < c.n(); ++w) {
      const std::uint64_t f = r | (std::uint64_t{1} << w);
      if (f == r) continue;
      // unused vertices are interchangeable: try only the first
      if (!c.used(w)) {
        if (tried_unused) continue;
        tried_unused = true;
      }
      if (!c.addable(f)) continue;
      c.add(f);
      rec(depth + 1);
      c.remove(f);
    }
  }
};

}  // namespace

std::vector<Complex> enumerate_weak_2pm(int n) {
  if (n < 4 || n > 10) throw InvalidArgument("enumerate_weak_2pm needs 4 <= n <= 10");
  KeySet out;
  Completion c(n, 2);
  surfaces_rec(c, out);
  return out.forms();
}

std::vector<Complex> enumerate_neighbourly_normal_8(const SearchOptions& options) {
  std::vector<Complex> links;
  for (const Complex& s : enumerate_weak_2pm(7))
    if (classify_surface(s).kind != SurfaceKind::not_a_surface) links.push_back(s);

  // one task per (link, first completion) keeps the pool busy
  struct Task {
    std::size_t link;
    int w;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < links.size(); ++i)
    for (int w = 0; w < 7; ++w) tasks.push_back({i, w});

  std::vector<std::vector<VertexMap>> groups(links.size());
  for (std::size_t i = 0; i < links.size(); ++i)
    if (options.symmetry)
      for (VertexMap g : automorphisms(links[i])) {
        g[7] = 7;
        groups[i].push_back(std::move(g));
      }

  KeySet out;
  parallel_for(tasks.size(), options.jobs, [&](std::size_t t) {
    const Task& task = tasks[t];
    Completion c(8, 3);
    for (Simplex f : links[task.link].facets()) c.add(f.with(7).mask());
    NeighbourlySearch s{c, out, options.symmetry};
    // first branching done here so that each task owns one choice of w
    const std::uint64_t r = c.deficient();
    const std::uint64_t f = r | (std::uint64_t{1} << task.w);
    if (f == r || !c.addable(f)) return;
    std::vector<VertexMap> next;
    if (options.symmetry) {
      bool rep = true;
      for (const VertexMap& g : groups[task.link])
        if (apply(g, r) == r) {
          if (g[task.w] < task.w) rep = false;
          if (g[task.w] == task.w) next.push_back(g);
        }
      if (!rep) return;
    }
    c.add(f);
    s.rec(next);
  });
  return out.forms();
}

std::vector<Complex> enumerate_normal_3pm(int n, int jobs) {
  if (n < 5 || n > 10) throw InvalidArgument("enumerate_normal_3pm needs 5 <= n <= 10");
  KeySet out;
  std::vector<std::vector<std::uint64_t>> prefixes;
  {
    Completion c(n, 3);
    c.add(0b1111);
    FlatSearch s{c, out, 4, &prefixes};
    s.rec(0);
  }
  parallel_for(prefixes.size(), jobs, [&](std::size_t i) {
    Completion c(n, 3);
    for (std::uint64_t f : prefixes[i]) c.add(f);
    FlatSearch s{c, out};
    s.rec(4);
  });
  return out.forms();
}

namespace {

ClassRecord make_record(const Complex& form) {
  ClassRecord r{form, canonical_key(form), "UNMATCHED", 0, false, false, {}, 0, {}};
  const int n = form.num_vertices();
  r.f = f_vector(form);
  r.chi = euler_characteristic(form);
  r.non_edges = n * (n - 1) / 2 - static_cast<int>(r.f[1]);
  r.neighbourly = r.non_edges == 0;
  for (const SingularVertex& s : singular_vertices(form)) {
    const auto name = catalog::name_surface(link(form, Simplex::single(s.vertex)));
    r.singular_links.emplace_back(s.vertex, name.value_or(describe(s.link_type)));
  }
  r.manifold = r.singular_links.empty();
  return r;
}

}  // namespace

CensusReport close_under_2moves(const std::vector<Complex>& seeds, int jobs) {
  std::vector<Complex> forms;
  std::map<Key, int> index;
  auto intern = [&](const Complex& k) {
    const Canonical c = canonical_labeling(k);
    if (!is_isomorphism(k, c.form, c.labeling)) throw IntegrityError("canonical labelling failed to verify");
    Key key = canonical_key(c.form);
    const auto [it, fresh] = index.emplace(std::move(key), static_cast<int>(forms.size()));
    if (fresh) forms.push_back(c.form);
    return it->second;
  };
  for (const Complex& s : seeds) intern(s);

  std::map<std::pair<int, int>, Simplex> edges;
  std::size_t done = 0;
  while (done < forms.size()) {
    // one breadth-first layer at a time; children are interned in order
    const std::size_t end = forms.size();
    std::vector<std::vector<std::pair<Simplex, Complex>>> children(end - done);
    parallel_for(end - done, jobs, [&](std::size_t i) {
      const Complex& k = forms[done + i];
      for (const Move& m : enumerate_moves(k, 2)) children[i].emplace_back(m.alpha, apply_move(k, m));
    });
    for (std::size_t i = 0; i < children.size(); ++i)
      for (const auto& [alpha, child] : children[i]) {
        const int c = intern(child);
        edges.emplace(std::make_pair(static_cast<int>(done + i), c), alpha);
      }
    done = end;
  }

  std::vector<std::optional<ClassRecord>> records(forms.size());
  parallel_for(forms.size(), jobs, [&](std::size_t i) { records[i] = make_record(forms[i]); });
  std::vector<int> order(forms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(records[a]->non_edges, records[a]->key) < std::tie(records[b]->non_edges, records[b]->key);
  });
  std::vector<int> position(order.size());
  CensusReport report;
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i]] = static_cast<int>(i);
    report.classes.push_back(std::move(*records[order[i]]));
  }
  for (const auto& [pc, alpha] : edges) {
    const PosetEdge e{position[pc.first], position[pc.second], alpha, {}};
    // re-verify: the move applied to the parent lands on the child
    const Complex child = apply_move(report.classes[e.parent].form, alpha);
    if (canonical_key(child) != report.classes[e.child].key)
      throw IntegrityError("poset edge " + format_face(alpha) + " does not reproduce its child");
    report.edges.push_back(e);
  }
  std::sort(report.edges.begin(), report.edges.end(), [](const PosetEdge& a, const PosetEdge& b) {
    return std::tie(a.parent, a.child, a.alpha) < std::tie(b.parent, b.child, b.alpha);
  });
  return report;
}

void match_catalog(CensusReport& report) {
  std::map<Key, std::string> names;
  for (const std::string& name : catalog::list()) {
    const bool census_member = name.rfind("S3_8_", 0) == 0 || (name.rfind("N_", 0) == 0 && name.find("prime") == std::string::npos);
    if (census_member) names.emplace(canonical_key(catalog::get(name)), name);
  }
  std::set<std::string> hit;
  std::ostringstream problems;
  for (ClassRecord& r : report.classes) {
    const auto it = names.find(r.key);
    if (it == names.end()) {
      problems << "unmatched class:\n" << io::to_text(r.form) << "\n";
      continue;
    }
    r.name = it->second;
    if (!hit.insert(it->second).second) problems << "catalog entry " << it->second << " matched twice\n";
  }
  for (const auto& [key, name] : names)
    if (!hit.count(name)) problems << "catalog entry " << name << " matched by no class:\n" << io::to_text(catalog::get(name)) << "\n";
  if (!problems.str().empty()) throw IntegrityError("classification discrepancy\n" + problems.str());

  for (PosetEdge& e : report.edges) {
    const Complex parent = catalog::get(report.classes[e.parent].name);
    const Key& child = report.classes[e.child].key;
    e.named_alphas.clear();
    for (const Move& m : enumerate_moves(parent, 2))
      if (canonical_key(apply_move(parent, m)) == child) e.named_alphas.push_back(m.alpha);
    if (e.named_alphas.empty())
      throw IntegrityError("no move of " + report.classes[e.parent].name + " reaches " + report.classes[e.child].name);
  }
}

CensusReport run_census(const SearchOptions& options) {
  CensusReport report = close_under_2moves(enumerate_neighbourly_normal_8(options), options.jobs);
  match_catalog(report);
  return report;
}

namespace {

int series_number(const std::string& name) {
  const auto pos = name.find_last_of('_');
  return std::stoi(name.substr(pos + 1));
}

std::vector<std::string> sorted_link_names(const ClassRecord& r) {
  std::vector<std::string> names;
  for (const auto& [v, name] : r.singular_links) names.push_back(name);
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

std::string emit_table1(const CensusReport& report) {
  std::vector<const ClassRecord*> rows;
  for (const ClassRecord& r : report.classes)
    if (r.name.rfind("N_", 0) == 0) rows.push_back(&r);
  std::sort(rows.begin(), rows.end(),
            [](const ClassRecord* a, const ClassRecord* b) { return series_number(a->name) < series_number(b->name); });
  std::ostringstream out;
  out << "name  (f1,f2,f3)  chi  n_s  singular links\n";
  for (const ClassRecord* r : rows) {
    std::string links;
    for (const std::string& s : sorted_link_names(*r)) links += (links.empty() ? "" : ",") + s;
    out << r->name << "  " << format_tuple({r->f[1], r->f[2], r->f[3]}) << "  " << r->chi << "  "
        << r->singular_links.size() << "  " << links << "\n";
  }
  return out.str();
}

namespace {

std::string edge_label(const PosetEdge& e) {
  if (e.named_alphas.empty()) return format_face(e.alpha);
  std::string out;
  for (Simplex a : e.named_alphas) out += (out.empty() ? "" : ",") + format_face(a);
  return out;
}

}  // namespace

std::string emit_hasse(const CensusReport& report, const std::string& prefix, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n  rankdir=TB;\n";
  std::map<int, std::vector<std::string>> layers;
  for (const ClassRecord& r : report.classes)
    if (r.name.rfind(prefix, 0) == 0) layers[r.non_edges].push_back(r.name);
  for (auto& [layer, names] : layers) {
    std::sort(names.begin(), names.end(),
              [](const std::string& a, const std::string& b) { return series_number(a) < series_number(b); });
    out << "  { rank=same;";
    for (const std::string& n : names) out << " \"" << n << "\";";
    out << " }  // " << layer << " non-edges\n";
  }
  for (const PosetEdge& e : report.edges) {
    const ClassRecord& p = report.classes[e.parent];
    const ClassRecord& c = report.classes[e.child];
    if (p.name.rfind(prefix, 0) != 0) continue;
    out << "  \"" << p.name << "\" -> \"" << c.name << "\" [label=\"" << edge_label(e) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string census_json(const CensusReport& report) {
  using nlohmann::ordered_json;
  ordered_json classes = ordered_json::array();
  int spheres = 0;
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const ClassRecord& r = report.classes[i];
    spheres += r.manifold;
    ordered_json links = ordered_json::object();
    for (const auto& [v, name] : r.singular_links) links[std::to_string(v)] = name;
    ordered_json facets = ordered_json::array();
    for (Simplex f : r.form.facets()) facets.push_back(f.vertices());
    classes.push_back({{"index", i},
                       {"name", r.name},
                       {"non_edges", r.non_edges},
                       {"neighbourly", r.neighbourly},
                       {"manifold", r.manifold},
                       {"f", r.f},
                       {"chi", r.chi},
                       {"n_s", r.singular_links.size()},
                       {"singular_links", links},
                       {"facets", facets}});
  }
  ordered_json edges = ordered_json::array();
  for (const PosetEdge& e : report.edges) {
    ordered_json named = ordered_json::array();
    for (Simplex a : e.named_alphas) named.push_back(a.vertices());
    edges.push_back({{"parent", e.parent},
                     {"child", e.child},
                     {"faces", named},
                     {"canonical_face", e.alpha.vertices()}});
  }
  ordered_json doc = {{"vertices", 8},
                      {"counts",
                       {{"classes", report.classes.size()},
                        {"manifolds", spheres},
                        {"pseudomanifolds", static_cast<int>(report.classes.size()) - spheres}}},
                      {"classes", classes},
                      {"edges", edges}};
  return doc.dump(1) + "\n";
}

}  // namespace pmc::classify
