#include "pmc/homology.hpp"

#include <algorithm>
#include <utility>

namespace pmc {

BoundaryMatrix boundary_matrix(const Complex& k, int i) {
  if (i < 1 || i > k.dim()) throw InvalidArgument("boundary index " + std::to_string(i) + " out of range");
  BoundaryMatrix b;
  b.rows = faces(k, i - 1);
  b.cols = faces(k, i);
  b.entries.assign(b.rows.size(), std::vector<std::int64_t>(b.cols.size(), 0));
  for (std::size_t c = 0; c < b.cols.size(); ++c) {
    int pos = 0;
    for (Vertex v : b.cols[c].vertices()) {
      const auto it = std::lower_bound(b.rows.begin(), b.rows.end(), b.cols[c].without(v));
      b.entries[static_cast<std::size_t>(it - b.rows.begin())][c] = (pos % 2 == 0) ? 1 : -1;
      ++pos;
    }
  }
  return b;
}

namespace {

struct Overflow {};

// Checked arithmetic; the BigInt instantiation never overflows.
inline std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t p, r;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}
inline BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

inline std::int64_t magnitude(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return a < 0 ? -a : a;
}
inline BigInt magnitude(const BigInt& a) { return abs(a); }

// Diagonalizes by unimodular row and column operations, always pivoting on
// the entry of least absolute value. Returns the nonzero diagonal.
template <class T>
std::vector<T> diagonalize(std::vector<std::vector<T>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<T> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool found = false;
    std::size_t pr = t, pc = t;
    T best = 0;
    auto pick = [&](std::size_t r0, std::size_t c0, bool only_line) {
      found = false;
      for (std::size_t r = r0; r < rows; ++r)
        for (std::size_t c = c0; c < cols; ++c) {
          if (only_line && r != t && c != t) continue;
          if (a[r][c] == 0) continue;
          const T m = magnitude(a[r][c]);
          if (!found || m < best) {
            found = true;
            best = m;
            pr = r;
            pc = c;
          }
        }
    };
    pick(t, t, false);
    if (!found) break;
    while (true) {
      std::swap(a[t], a[pr]);
      if (pc != t)
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][t], a[r][pc]);
      const T p = a[t][t];
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        const T q = a[r][t] / p;
        for (std::size_t c = t; c < cols; ++c) a[r][c] = sub_mul(a[r][c], q, a[t][c]);
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        const T q = a[t][c] / p;
        for (std::size_t r = t; r < rows; ++r) a[r][c] = sub_mul(a[r][c], q, a[r][t]);
      }
      // remainders left in row or column t become the next pivot
      bool clean = true;
      for (std::size_t r = t + 1; r < rows && clean; ++r) clean = a[r][t] == 0;
      for (std::size_t c = t + 1; c < cols && clean; ++c) clean = a[t][c] == 0;
      if (clean) break;
      pick(t, t, true);
    }
    diag.push_back(magnitude(a[t][t]));
  }
  return diag;
}

BigInt to_big(std::int64_t v) { return BigInt(v); }

// Turns a diagonal into invariant factors d_1 | d_2 | ...
std::vector<BigInt> normalize(std::vector<BigInt> d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const BigInt g = gcd(d[i], d[j]);
      const BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out;
  std::vector<BigInt> diag;
  try {
    for (std::int64_t v : diagonalize(m)) diag.push_back(to_big(v));
  } catch (const Overflow&) {
    std::vector<std::vector<BigInt>> big(m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::int64_t v : m[r]) big[r].push_back(to_big(v));
    diag = diagonalize(std::move(big));
    out.used_bigint = true;
  }
  out.rank = diag.size();
  out.factors = normalize(std::move(diag));
  return out;
}

HomologyProfile homology(const Complex& k) {
  const int d = k.dim();
  const auto f = f_vector(k);
  std::vector<SmithForm> snf(d + 2);  // snf[i] for the boundary map out of dimension i
  for (int i = 1; i <= d; ++i) snf[i] = smith_normal_form(boundary_matrix(k, i).entries);
  HomologyProfile h;
  for (int i = 0; i <= d; ++i) {
    const long rank_in = static_cast<long>(snf[i].rank);
    const long rank_out = i + 1 <= d ? static_cast<long>(snf[i + 1].rank) : 0;
    h.betti.push_back(f[i] - rank_in - rank_out);
    std::vector<BigInt> tors;
    if (i + 1 <= d)
      for (const BigInt& x : snf[i + 1].factors)
        if (x > 1) tors.push_back(x);
    h.torsion.push_back(std::move(tors));
  }
  return h;
}

std::string format_group(long betti, const std::vector<BigInt>& torsion) {
  std::string out;
  if (betti == 1) out = "Z";
  else if (betti > 1) out = "Z^" + std::to_string(betti);
  for (const BigInt& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z_" + t.str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace pmc
