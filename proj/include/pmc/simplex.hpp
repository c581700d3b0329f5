#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pmc/error.hpp"

namespace pmc {

/// Vertex labels are small non-negative integers so that a simplex fits in a
/// single 64-bit mask.
using Vertex = int;
inline constexpr Vertex kMaxVertex = 63;

/// A simplex as a set of vertex labels, stored as a bit mask.
///
/// Ordering is lexicographic on the ascending vertex lists, which is the order
/// used everywhere a deterministic listing of faces is produced.
class Simplex {
 public:
  constexpr Simplex() noexcept = default;
  constexpr explicit Simplex(std::uint64_t mask) noexcept : mask_(mask) {}

  static Simplex of(std::initializer_list<Vertex> vertices);
  static Simplex from(const std::vector<Vertex>& vertices);
  static constexpr Simplex single(Vertex v) noexcept { return Simplex(std::uint64_t{1} << v); }

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr int dim() const noexcept { return size() - 1; }
  constexpr bool empty() const noexcept { return mask_ == 0; }

  constexpr bool contains(Vertex v) const noexcept { return (mask_ >> v) & 1U; }
  constexpr bool contains(Simplex s) const noexcept { return (s.mask_ & ~mask_) == 0; }
  constexpr bool disjoint(Simplex s) const noexcept { return (s.mask_ & mask_) == 0; }

  constexpr Simplex with(Vertex v) const noexcept { return Simplex(mask_ | (std::uint64_t{1} << v)); }
  constexpr Simplex without(Vertex v) const noexcept { return Simplex(mask_ & ~(std::uint64_t{1} << v)); }
  constexpr Vertex min_vertex() const noexcept { return std::countr_zero(mask_); }
  constexpr Vertex max_vertex() const noexcept { return 63 - std::countl_zero(mask_); }

  std::vector<Vertex> vertices() const;

  friend constexpr Simplex operator|(Simplex a, Simplex b) noexcept { return Simplex(a.mask_ | b.mask_); }
  friend constexpr Simplex operator&(Simplex a, Simplex b) noexcept { return Simplex(a.mask_ & b.mask_); }
  friend constexpr Simplex operator-(Simplex a, Simplex b) noexcept { return Simplex(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(Simplex a, Simplex b) noexcept = default;

  friend constexpr std::strong_ordering operator<=>(Simplex a, Simplex b) noexcept {
    const std::uint64_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return std::strong_ordering::equal;
    const int low = std::countr_zero(diff);
    // The set holding the first differing element is smaller, unless the other
    // set has run out of elements (it is then a proper prefix).
    const bool a_holds = (a.mask_ >> low) & 1U;
    const std::uint64_t other = a_holds ? b.mask_ : a.mask_;
    const bool other_is_prefix = (other >> low) == 0;
    const bool a_smaller = a_holds != other_is_prefix;
    return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uint64_t mask_ = 0;
};

/// Paper-style compact notation ("1248") when every label is a single digit,
/// otherwise a braced comma list ("{1,10,12}").
std::string format_face(Simplex s);

/// Space separated labels, as used by the facet-list file format.
std::string format_face_spaced(Simplex s);

/// Parses "5 8", "58" (single-digit labels) or "5,8" / "{5,8}".
Simplex parse_face(const std::string& text);

/// Calls fn(Simplex) for every k-element subset of the given mask.
template <class Fn>
void for_each_subset(std::uint64_t mask, int k, Fn&& fn) {
  Vertex bits[64];
  int n = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) bits[n++] = std::countr_zero(m);
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Simplex{});
    return;
  }
  int idx[64];
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t s = 0;
    for (int i = 0; i < k; ++i) s |= std::uint64_t{1} << bits[idx[i]];
    fn(Simplex(s));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace pmc
