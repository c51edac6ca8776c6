#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orcycle/cycle.hpp"
#include "orcycle/error.hpp"
#include "orcycle/target.hpp"

namespace orcycle {

// One above the largest value the classifier can produce, so a bug that
// pushes a cycle past 5 colors is reported instead of masked.
inline constexpr int kOracleDefaultMaxColors = 6;

namespace detail {

// Backtracking state for the minimum-coloring search: colors assigned in
// vertex order with v0 pinned to 0, plus a count matrix of realized ordered
// color pairs for the antisymmetry check.
struct ChiSearch {
  const OrientedCycle& c;
  int k;
  std::vector<int> colors;
  std::array<std::array<int, 8>, 8> pair_count{};

  explicit ChiSearch(const OrientedCycle& cycle, int palette)
      : c(cycle), k(palette), colors(static_cast<std::size_t>(cycle.size()), -1) {}

  // Registers the ordered pair realized by arc `i` if it keeps the coloring
  // valid so far; returns false (without registering) otherwise.
  bool add_arc(int i) {
    auto [a, b] = arc_pair(i);
    if (a == b) return false;
    if (pair_count[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] > 0) return false;
    ++pair_count[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    return true;
  }

  void remove_arc(int i) {
    auto [a, b] = arc_pair(i);
    --pair_count[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  std::pair<int, int> arc_pair(int i) const {
    int u = i;
    int w = (i + 1) % c.size();
    int cu = colors[static_cast<std::size_t>(u)];
    int cw = colors[static_cast<std::size_t>(w)];
    return c.arc(i) == Direction::forward ? std::pair{cu, cw} : std::pair{cw, cu};
  }

  bool extend(int v) {
    const int n = c.size();
    if (v == n) return true;
    for (int x = 0; x < k; ++x) {
      colors[static_cast<std::size_t>(v)] = x;
      if (!add_arc(v - 1)) continue;
      if (v == n - 1) {
        // Wrap arc closes the cycle.
        if (add_arc(n - 1)) {
          if (extend(v + 1)) return true;
          remove_arc(n - 1);
        }
      } else {
        if (extend(v + 1)) return true;
      }
      remove_arc(v - 1);
    }
    colors[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  bool run() {
    colors[0] = 0;  // color relabeling symmetry
    return extend(1);
  }
};

}  // namespace detail

// Smallest k <= max_k admitting a valid oriented coloring, found by
// exhaustive backtracking; nullopt when even max_k colors do not suffice.
// Independent of the classifier and the witness constructions.
inline std::optional<int> brute_force_chi(const OrientedCycle& c,
                                          int max_k = kOracleDefaultMaxColors) {
  if (max_k < 2 || max_k > 8) {
    throw Error(errc::bad_max_k, "max colors must lie in [2, 8], got " + std::to_string(max_k));
  }
  for (int k = 2; k <= max_k; ++k) {
    detail::ChiSearch search(c, k);
    if (search.run()) return k;
  }
  return std::nullopt;
}

// Exhaustive check for a homomorphism from the cycle into an arbitrary small
// target: vertices are mapped in order, each image constrained by the arc to
// its predecessor and, at the last vertex, by the wrap arc back to v0.
inline bool homomorphism_exists(const OrientedCycle& c, const TargetGraph& t) {
  const int n = c.size();
  std::vector<int> image(static_cast<std::size_t>(n), -1);

  auto arc_ok = [&](int arc, int from_vertex, int to_vertex) {
    int u = image[static_cast<std::size_t>(from_vertex)];
    int w = image[static_cast<std::size_t>(to_vertex)];
    return c.arc(arc) == Direction::forward ? t.has_arc(u, w) : t.has_arc(w, u);
  };

  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int x = 0; x < t.order(); ++x) {
      image[static_cast<std::size_t>(v)] = x;
      if (v > 0 && !arc_ok(v - 1, v - 1, v)) continue;
      if (v == n - 1 && !arc_ok(n - 1, n - 1, 0)) continue;
      if (self(self, v + 1)) return true;
    }
    image[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  return extend(extend, 0);
}

}  // namespace orcycle
