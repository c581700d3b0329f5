#include "pmc/iso.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "pmc/report.hpp"

namespace pmc {

VertexMap identity_map(Simplex domain) {
  VertexMap m(kMaxVertex + 1, -1);
  for (Vertex v : domain.vertices()) m[v] = v;
  return m;
}

std::string format_cycles(const VertexMap& map) {
  std::string out;
  std::vector<char> seen(map.size(), 0);
  for (std::size_t v = 0; v < map.size(); ++v) {
    if (seen[v] || map[v] < 0 || map[v] == static_cast<Vertex>(v)) continue;
    std::string cyc = "(";
    std::size_t w = v;
    while (!seen[w]) {
      seen[w] = 1;
      if (cyc.size() > 1) cyc += ',';
      cyc += std::to_string(w);
      w = static_cast<std::size_t>(map[w]);
      if (w >= map.size() || map[w] < 0) throw InvalidArgument("map is not a permutation");
    }
    out += cyc + ")";
  }
  return out.empty() ? "()" : out;
}

std::string format_map(const VertexMap& map) {
  bool permutation = true;
  for (std::size_t v = 0; v < map.size() && permutation; ++v)
    if (map[v] >= 0) permutation = static_cast<std::size_t>(map[v]) < map.size() && map[map[v]] >= 0;
  if (permutation) return format_cycles(map);
  std::string out;
  for (std::size_t v = 0; v < map.size(); ++v) {
    if (map[v] < 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(v) + "->" + std::to_string(map[v]);
  }
  return out;
}

VertexMap parse_cycles(const std::string& text, Simplex domain) {
  VertexMap m = identity_map(domain);
  std::size_t i = 0;
  std::set<Vertex> used;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidArgument("expected '(' in cycle notation '" + text + "'");
    ++i;
    std::vector<Vertex> cyc;
    while (true) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidArgument("bad cycle notation '" + text + "'");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v > kMaxVertex || !domain.contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " not in domain");
      if (!used.insert(v).second) throw InvalidArgument("vertex " + std::to_string(v) + " repeated in cycles");
      cyc.push_back(v);
      skip();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t j = 0; j < cyc.size(); ++j) m[cyc[j]] = cyc[(j + 1) % cyc.size()];
    skip();
  }
  return m;
}

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
  VertexMap out(kMaxVertex + 1, -1);
  for (std::size_t v = 0; v < inner.size(); ++v)
    if (inner[v] >= 0) out[v] = outer.at(static_cast<std::size_t>(inner[v]));
  return out;
}

VertexMap inverse(const VertexMap& map) {
  VertexMap out(kMaxVertex + 1, -1);
  for (std::size_t v = 0; v < map.size(); ++v)
    if (map[v] >= 0) {
      if (out[map[v]] >= 0) throw InvalidArgument("map is not injective");
      out[map[v]] = static_cast<Vertex>(v);
    }
  return out;
}

bool is_isomorphism(const Complex& k, const Complex& l, const VertexMap& map) {
  if (k.num_vertices() != l.num_vertices() || k.num_facets() != l.num_facets() || k.dim() != l.dim()) return false;
  std::uint64_t image = 0;
  for (Vertex v : k.vertices()) {
    if (static_cast<std::size_t>(v) >= map.size() || map[v] < 0) return false;
    image |= std::uint64_t{1} << map[v];
  }
  if (image != l.vertex_set().mask()) return false;
  try {
    return k.relabeled(map) == l;
  } catch (const InvalidArgument&) {
    return false;
  }
}

LinkType link_type(const Complex& lk) {
  LinkType t;
  if (lk.dim() == 2) t.kind = classify_surface(lk).kind;
  t.f = f_vector(lk);
  std::vector<int> deg;
  for (Vertex v : lk.vertices()) deg.push_back(lk.dim() == 0 ? 0 : degree(lk, Simplex::single(v)));
  std::sort(deg.rbegin(), deg.rend());
  t.degrees = std::move(deg);
  return t;
}

Fingerprint fingerprint(const Complex& k) {
  Fingerprint fp;
  fp.f = f_vector(k);
  for (Vertex v : k.vertices()) fp.vertex_degrees.push_back(degree(k, Simplex::single(v)));
  std::sort(fp.vertex_degrees.rbegin(), fp.vertex_degrees.rend());
  if (k.dim() >= 1) {
    for (Vertex v : k.vertices()) fp.links.push_back(link_type(link(k, Simplex::single(v))));
    std::sort(fp.links.begin(), fp.links.end());
  }
  if (k.dim() >= 2) {
    for (Simplex e : faces(k, 1)) fp.edge_degrees.push_back(degree(k, e));
    std::sort(fp.edge_degrees.rbegin(), fp.edge_degrees.rend());
    for (int n : std::set<int>(fp.edge_degrees.begin(), fp.edge_degrees.end()))
      fp.g_n[n] = g_n_graph(k, n).degree_sequence();
  }
  fp.neg = non_edge_graph(k).degree_sequence();
  return fp;
}

namespace {

constexpr std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Individualization-refinement over vertex colours. Colours are ranks of
// label-independent keys, so every step commutes with relabeling and the
// least leaf is a canonical form.
class CanonSearch {
 public:
  CanonSearch(const std::vector<std::uint64_t>& facets, bool collect)
      : collect_(collect) {
    std::uint64_t all = 0;
    for (auto f : facets) all |= f;
    n_ = std::popcount(all);
    labels_.fill(-1);
    int idx = 0;
    for (std::uint64_t m = all; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      labels_[v] = idx;
      original_[idx++] = v;
    }
    facets_.reserve(facets.size());
    for (auto f : facets) {
      std::uint64_t g = 0;
      for (std::uint64_t m = f; m; m &= m - 1) g |= std::uint64_t{1} << labels_[std::countr_zero(m)];
      facets_.push_back(g);
    }
    scratch_.resize(facets_.size());
  }

  void run() {
    Colours c{};
    std::array<std::uint64_t, 64> key{};
    // start from the number of facets through each vertex
    for (auto f : facets_)
      for (std::uint64_t m = f; m; m &= m - 1) ++key[std::countr_zero(m)];
    int cells = rerank(c, key);
    cells = refine(c, cells);
    search(c, cells);
  }

  const std::vector<std::uint64_t>& best() const { return best_; }
  // compact vertex -> canonical label for the first best leaf
  const std::array<int, 64>& best_perm() const { return best_perm_; }
  const std::vector<std::array<int, 64>>& best_leaves() const { return best_leaves_; }
  int n() const { return n_; }
  Vertex original(int idx) const { return original_[idx]; }

 private:
  using Colours = std::array<int, 64>;

  // Replaces colours by the ranks of (colour, key) pairs; returns the cell count.
  int rerank(Colours& c, const std::array<std::uint64_t, 64>& key) const {
    std::array<int, 64> order;
    std::iota(order.begin(), order.begin() + n_, 0);
    std::sort(order.begin(), order.begin() + n_, [&](int a, int b) {
      return c[a] != c[b] ? c[a] < c[b] : key[a] < key[b];
    });
    Colours out{};
    int rank = 0;
    for (int i = 0; i < n_; ++i) {
      if (i > 0 && (c[order[i]] != c[order[i - 1]] || key[order[i]] != key[order[i - 1]])) rank = i;
      out[order[i]] = rank;
    }
    int cells = 0;
    for (int i = 0; i < n_; ++i)
      if (i == 0 || out[order[i]] != out[order[i - 1]]) ++cells;
    c = out;
    return cells;
  }

  int refine(Colours& c, int cells) {
    while (cells < n_) {
      std::array<std::uint64_t, 64> acc{};
      for (auto f : facets_) {
        std::uint64_t s = 0;
        for (std::uint64_t m = f; m; m &= m - 1) s += mix(static_cast<std::uint64_t>(c[std::countr_zero(m)]));
        for (std::uint64_t m = f; m; m &= m - 1) {
          const int v = std::countr_zero(m);
          acc[v] += mix(s - mix(static_cast<std::uint64_t>(c[v])) + 0x51ed27);
        }
      }
      const int next = rerank(c, acc);
      if (next == cells) break;
      cells = next;
    }
    return cells;
  }

  void search(const Colours& c, int cells) {
    if (cells == n_) {
      leaf(c);
      return;
    }
    // first non-singleton cell
    std::array<int, 64> count{};
    for (int v = 0; v < n_; ++v) ++count[c[v]];
    int target = -1;
    for (int r = 0; r < n_; ++r)
      if (count[r] > 1) {
        target = r;
        break;
      }
    for (int v = 0; v < n_; ++v) {
      if (c[v] != target) continue;
      Colours child = c;
      std::array<std::uint64_t, 64> key{};
      for (int u = 0; u < n_; ++u) key[u] = (c[u] == target && u != v) ? 1 : 0;
      int child_cells = rerank(child, key);
      child_cells = refine(child, child_cells);
      search(child, child_cells);
    }
  }

  void leaf(const Colours& c) {
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      std::uint64_t g = 0;
      for (std::uint64_t m = facets_[i]; m; m &= m - 1) g |= std::uint64_t{1} << c[std::countr_zero(m)];
      scratch_[i] = g;
    }
    std::sort(scratch_.begin(), scratch_.end());
    if (best_.empty() || scratch_ < best_) {
      best_ = scratch_;
      best_perm_ = c;
      best_leaves_.clear();
      if (collect_) best_leaves_.push_back(c);
    } else if (collect_ && scratch_ == best_) {
      best_leaves_.push_back(c);
    }
  }

  bool collect_;
  int n_ = 0;
  std::array<int, 64> labels_{};
  std::array<Vertex, 64> original_{};
  std::vector<std::uint64_t> facets_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::uint64_t> best_;
  std::array<int, 64> best_perm_{};
  std::vector<std::array<int, 64>> best_leaves_;
};

std::vector<std::uint64_t> masks_of(const Complex& k) {
  std::vector<std::uint64_t> out;
  out.reserve(k.num_facets());
  for (Simplex f : k.facets()) out.push_back(f.mask());
  return out;
}

std::string link_multiset(const Complex& k, const LinkNamer& namer) {
  std::map<std::string, int> counts;
  for (Vertex v : k.vertices()) {
    const Complex lk = link(k, Simplex::single(v));
    std::optional<std::string> name;
    if (namer) name = namer(lk);
    if (!name) {
      const LinkType t = link_type(lk);
      name = (lk.dim() == 2 ? describe(SurfaceType{t.kind, lk.num_vertices(), 0}) : std::string("dim-") + std::to_string(lk.dim())) +
             "[" + format_degree_sequence(t.degrees) + "]";
    }
    ++counts[*name];
  }
  std::string out;
  for (const auto& [name, count] : counts) {
    if (!out.empty()) out += ' ';
    out += name + "^" + std::to_string(count);
  }
  return out;
}

}  // namespace

Canonical canonical_labeling(const Complex& k) {
  CanonSearch s(masks_of(k), false);
  s.run();
  VertexMap lab(kMaxVertex + 1, -1);
  for (int i = 0; i < s.n(); ++i) lab[s.original(i)] = s.best_perm()[i];
  std::vector<Simplex> facets;
  for (auto m : s.best()) facets.emplace_back(m);
  return {Complex(std::move(facets)), lab};
}

Complex canonical_form(const Complex& k) { return canonical_labeling(k).form; }

std::vector<std::uint64_t> canonical_key(std::vector<std::uint64_t> facets) {
  CanonSearch s(facets, false);
  s.run();
  return s.best();
}

std::vector<std::uint64_t> canonical_key(const Complex& k) { return canonical_key(masks_of(k)); }

std::vector<VertexMap> automorphisms(const Complex& k) {
  CanonSearch s(masks_of(k), true);
  s.run();
  const auto& first = s.best_leaves().front();
  std::array<int, 64> first_inv{};
  for (int i = 0; i < s.n(); ++i) first_inv[first[i]] = i;
  std::vector<VertexMap> out;
  for (const auto& leaf : s.best_leaves()) {
    VertexMap g(kMaxVertex + 1, -1);
    for (int i = 0; i < s.n(); ++i) g[s.original(i)] = s.original(first_inv[leaf[i]]);
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IsoResult are_isomorphic(const Complex& k, const Complex& l, const LinkNamer& namer) {
  IsoResult r;
  auto differ = [&](std::string invariant, std::string a, std::string b) {
    r.invariant = std::move(invariant);
    r.detail = a + " vs " + b;
    return r;
  };
  if (k.dim() != l.dim()) return differ("dimension", std::to_string(k.dim()), std::to_string(l.dim()));
  const Fingerprint a = fingerprint(k);
  const Fingerprint b = fingerprint(l);
  if (a.f != b.f) return differ("f-vector", format_tuple(a.f), format_tuple(b.f));
  if (a.vertex_degrees != b.vertex_degrees)
    return differ("vertex degrees", format_degree_sequence(a.vertex_degrees), format_degree_sequence(b.vertex_degrees));
  if (a.links != b.links) return differ("links", link_multiset(k, namer), link_multiset(l, namer));
  if (a.edge_degrees != b.edge_degrees)
    return differ("edge degrees", format_degree_sequence(a.edge_degrees), format_degree_sequence(b.edge_degrees));
  if (a.g_n != b.g_n) {
    std::set<int> ns;
    for (const auto& [n, seq] : a.g_n) ns.insert(n);
    for (const auto& [n, seq] : b.g_n) ns.insert(n);
    for (int n : ns) {
      const auto ia = a.g_n.find(n);
      const auto ib = b.g_n.find(n);
      const std::string sa = ia == a.g_n.end() ? "empty" : format_degree_sequence(ia->second);
      const std::string sb = ib == b.g_n.end() ? "empty" : format_degree_sequence(ib->second);
      if (sa != sb) return differ("G_" + std::to_string(n), sa, sb);
    }
  }
  if (a.neg != b.neg) return differ("NEG", format_degree_sequence(a.neg), format_degree_sequence(b.neg));
  const Canonical ck = canonical_labeling(k);
  const Canonical cl = canonical_labeling(l);
  if (ck.form != cl.form) return differ("canonical form", "exhaustive search", "no isomorphism");
  r.isomorphic = true;
  r.map = compose(inverse(cl.labeling), ck.labeling);
  if (!is_isomorphism(k, l, r.map)) throw IntegrityError("canonical labeling produced an invalid witness");
  return r;
}

}  // namespace pmc
