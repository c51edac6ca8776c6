#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "orcycle/cycle.hpp"
#include "orcycle/error.hpp"

namespace orcycle {

namespace detail {

inline void check_enumeration_length(int n) {
  if (n < 3 || n > 24) {
    throw Error(errc::bad_n, "enumeration length must lie in [3, 24], got " + std::to_string(n));
  }
}

// Orientation strings are ordered like binary numbers with '-' = 0 and
// '+' = 1, most significant character first. That makes "full mode" a plain
// counter and gives canonical mode a total order to minimize over.
inline std::uint32_t cycle_bits(const OrientedCycle& c) {
  std::uint32_t bits = 0;
  for (int i = 0; i < c.size(); ++i) {
    if (c.arc(i) == Direction::forward) bits |= 1u << (c.size() - 1 - i);
  }
  return bits;
}

inline OrientedCycle cycle_from_bits(std::uint32_t bits, int n) {
  std::vector<Direction> arcs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    arcs[static_cast<std::size_t>(i)] =
        (bits >> (n - 1 - i)) & 1u ? Direction::forward : Direction::backward;
  }
  return OrientedCycle(std::move(arcs));
}

inline std::uint32_t rotl_bits(std::uint32_t v, int r, int n) {
  const std::uint32_t mask = (n == 32) ? ~0u : (1u << n) - 1;
  r %= n;
  if (r == 0) return v & mask;
  return ((v << r) | (v >> (n - r))) & mask;
}

inline std::uint32_t reverse_bits(std::uint32_t v, int n) {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i) {
    out = (out << 1) | (v & 1u);
    v >>= 1;
  }
  return out;
}

// All images of `v` under the symmetry group: rotations of the string, the
// string reversed (traversal reflection composed with a flip), the global
// direction flip, and their compositions - 4n images in total.
inline void orbit_images(std::uint32_t v, int n, std::vector<std::uint32_t>& out) {
  const std::uint32_t mask = (1u << n) - 1;
  const std::uint32_t variants[4] = {v, ~v & mask, reverse_bits(v, n),
                                     ~reverse_bits(v, n) & mask};
  out.clear();
  for (std::uint32_t base : variants) {
    for (int r = 0; r < n; ++r) out.push_back(rotl_bits(base, r, n));
  }
}

inline bool is_canonical_bits(std::uint32_t v, int n) {
  const std::uint32_t mask = (1u << n) - 1;
  const std::uint32_t variants[4] = {v, ~v & mask, reverse_bits(v, n),
                                     ~reverse_bits(v, n) & mask};
  for (std::uint32_t base : variants) {
    for (int r = 0; r < n; ++r) {
      if (rotl_bits(base, r, n) < v) return false;
    }
  }
  return true;
}

}  // namespace detail

// Representative of the cycle's equivalence class under rotation, traversal
// reflection and global arc flip: the member with the smallest orientation
// string ('-' before '+').
inline std::string canonical_form(const OrientedCycle& c) {
  detail::check_enumeration_length(c.size());
  std::vector<std::uint32_t> images;
  detail::orbit_images(detail::cycle_bits(c), c.size(), images);
  std::uint32_t best = *std::min_element(images.begin(), images.end());
  return detail::cycle_from_bits(best, c.size()).render();
}

// Number of distinct orientation strings in the cycle's equivalence class.
inline int orbit_size(const OrientedCycle& c) {
  detail::check_enumeration_length(c.size());
  std::vector<std::uint32_t> images;
  detail::orbit_images(detail::cycle_bits(c), c.size(), images);
  std::sort(images.begin(), images.end());
  return static_cast<int>(std::unique(images.begin(), images.end()) - images.begin());
}

// Visits orientations of length n in ascending string order: all 2^n of them
// in full mode, one canonical representative per equivalence class in
// canonical mode.
template <typename Fn>
void for_each_orientation(int n, bool canonical, Fn&& fn) {
  detail::check_enumeration_length(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < total; ++v) {
    auto bits = static_cast<std::uint32_t>(v);
    if (canonical && !detail::is_canonical_bits(bits, n)) continue;
    fn(detail::cycle_from_bits(bits, n));
  }
}

inline std::vector<OrientedCycle> enumerate_orientations(int n, bool canonical = false) {
  std::vector<OrientedCycle> out;
  for_each_orientation(n, canonical, [&](const OrientedCycle& c) { out.push_back(c); });
  return out;
}

}  // namespace orcycle
