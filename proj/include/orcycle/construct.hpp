#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orcycle/coloring.hpp"
#include "orcycle/cycle.hpp"
#include "orcycle/error.hpp"
#include "orcycle/target.hpp"

namespace orcycle {

// A coloring together with the target it maps into. Colors are always
// reported in the input cycle's own vertex indexing; `rotation` records the
// internal start offset used by the mixed 4-color construction (vertex
// (j + rotation) mod n of the input played path position j), 0 elsewhere.
struct Witness {
  Coloring coloring;
  TargetGraph target;
  int rotation = 0;
};

namespace detail {
inline int mod3(int x) { return ((x % 3) + 3) % 3; }
}  // namespace detail

// 2-coloring of an alternating cycle into K2: sources get 0, sinks get 1,
// so every arc realizes 0->1.
inline Witness color_two(const OrientedCycle& c) {
  if (!is_alternating(c)) {
    throw Error(errc::not_alternating, "2-coloring requires an alternating orientation");
  }
  DegreeProfile deg = degree_profile(c);
  std::vector<int> colors(static_cast<std::size_t>(c.size()));
  for (int v = 0; v < c.size(); ++v) {
    colors[static_cast<std::size_t>(v)] = deg.indegree[v] == 2 ? 1 : 0;
  }
  return Witness{Coloring{std::move(colors), 2}, builtin_target("K2"), 0};
}

// 3-coloring into the directed triangle: vertex k gets the prefix sum of
// arc signs up to k, reduced mod 3, starting from 0 at v0. Every arc then
// steps +1 mod 3; the wrap arc closes exactly because lambda is divisible
// by 3.
inline Witness color_via_c3(const OrientedCycle& c) {
  if (lambda(c) % 3 != 0) {
    throw Error(errc::lambda_not_zero_mod3,
                "C3 coloring requires lambda divisible by 3, got " + std::to_string(lambda(c)));
  }
  const int n = c.size();
  std::vector<int> colors(static_cast<std::size_t>(n));
  int sum = 0;
  colors[0] = 0;
  for (int k = 1; k < n; ++k) {
    sum += c.arc_sign(k - 1);
    colors[static_cast<std::size_t>(k)] = detail::mod3(sum);
  }
  return Witness{Coloring{std::move(colors), 3}, builtin_target("C3"), 0};
}

// 3-coloring into the transitive triangle: each vertex gets its indegree.
// Valid exactly when no three consecutive arcs share a direction.
inline Witness color_via_v3(const OrientedCycle& c) {
  if (has_three_consecutive_same(c)) {
    throw Error(errc::has_three_run,
                "V3 coloring requires no three consecutive same-direction arcs");
  }
  DegreeProfile deg = degree_profile(c);
  return Witness{Coloring{std::move(deg.indegree), 3}, builtin_target("V3"), 0};
}

// Deterministic n = 3a + 4b with the smallest b: b = n mod 3 (as 0, 1 or 2).
// n = 5 is the only length >= 3 with no solution.
inline std::pair<int, int> decompose_3_4(int n) {
  if (n < 3) throw Error(errc::bad_n, "decomposition needs n >= 3");
  const int b = n % 3;
  const int rest = n - 4 * b;
  if (rest < 0) {
    throw Error(errc::no_decomposition, "n = " + std::to_string(n) + " has no 3a + 4b split");
  }
  return {rest / 3, b};
}

namespace detail {
// Writes colors assigned along the traversal w_0..w_{n-1} back into the
// input indexing. Forward traversal is the identity; backward traversal
// keeps v0 first and walks the cycle the other way: w_j = v_{(n-j) mod n}.
inline std::vector<int> from_traversal(const std::vector<int>& along, bool forward) {
  const int n = static_cast<int>(along.size());
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    int v = forward ? j : (n - j) % n;
    colors[static_cast<std::size_t>(v)] = along[static_cast<std::size_t>(j)];
  }
  return colors;
}
}  // namespace detail

// 4-coloring of a directed cycle into Q4: split n = 3a + 4b and lay down a
// blocks (0,1,2) followed by b blocks (0,1,2,3) along the direction of
// travel. Block boundaries realize 2->0 or 3->0, both arcs of Q4.
inline Witness color_via_q4(const OrientedCycle& c) {
  if (!is_directed(c)) {
    throw Error(errc::not_directed, "Q4 coloring requires a directed cycle");
  }
  auto [a, b] = decompose_3_4(c.size());
  std::vector<int> along;
  along.reserve(static_cast<std::size_t>(c.size()));
  for (int i = 0; i < a; ++i) {
    for (int x : {0, 1, 2}) along.push_back(x);
  }
  for (int i = 0; i < b; ++i) {
    for (int x : {0, 1, 2, 3}) along.push_back(x);
  }
  bool forward = c.arc(0) == Direction::forward;
  return Witness{Coloring{detail::from_traversal(along, forward), 4}, builtin_target("Q4"), 0};
}

// 4-coloring of a cycle with arcs in both directions: rotate the smallest
// outdegree-0 vertex to position n-1, give it color 3 (both incident arcs
// point into it), and color the remaining open path by prefix sums mod 3.
inline Witness color_mixed_four(const OrientedCycle& c) {
  if (is_directed(c)) {
    throw Error(errc::is_directed, "mixed 4-coloring requires arcs in both directions");
  }
  const int n = c.size();
  DegreeProfile deg = degree_profile(c);
  int sink = -1;
  for (int v = 0; v < n; ++v) {
    if (deg.outdegree[v] == 0) {
      sink = v;
      break;
    }
  }
  const int rotation = (sink + 1) % n;
  OrientedCycle rc = rotated(c, rotation);

  std::vector<int> path(static_cast<std::size_t>(n));
  int sum = 0;
  path[0] = 0;
  for (int j = 1; j <= n - 2; ++j) {
    sum += rc.arc_sign(j - 1);
    path[static_cast<std::size_t>(j)] = detail::mod3(sum);
  }
  path[static_cast<std::size_t>(n - 1)] = 3;

  std::vector<int> colors(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    colors[static_cast<std::size_t>((j + rotation) % n)] = path[static_cast<std::size_t>(j)];
  }
  return Witness{Coloring{std::move(colors), 4}, builtin_target("T4"), rotation};
}

// The directed 5-cycle needs all five colors; the identity coloring along
// the direction of travel maps into K5dir.
inline Witness color_five_c5(const OrientedCycle& c) {
  if (c.size() != 5 || !is_directed(c)) {
    throw Error(errc::not_directed_c5, "5-coloring is defined only for the directed 5-cycle");
  }
  std::vector<int> along{0, 1, 2, 3, 4};
  bool forward = c.arc(0) == Direction::forward;
  return Witness{Coloring{detail::from_traversal(along, forward), 5}, builtin_target("K5dir"), 0};
}

// Dispatch over the constructions above:
//   2 -> color_two
//   3 -> color_via_c3 when lambda is divisible by 3, else color_via_v3
//   4 -> color_via_q4 for directed cycles, else color_mixed_four
//   5 -> color_five_c5
// A failed branch precondition surfaces as unachievable_chi.
inline Witness construct_witness(const OrientedCycle& c, int chi) {
  try {
    switch (chi) {
      case 2:
        return color_two(c);
      case 3:
        return lambda(c) % 3 == 0 ? color_via_c3(c) : color_via_v3(c);
      case 4:
        return is_directed(c) ? color_via_q4(c) : color_mixed_four(c);
      case 5:
        return color_five_c5(c);
      default:
        throw Error(errc::unachievable_chi,
                    "no construction for chi = " + std::to_string(chi) + " (expected 2..5)");
    }
  } catch (const Error& e) {
    if (e.code() == errc::unachievable_chi) throw;
    throw Error(errc::unachievable_chi, "chi = " + std::to_string(chi) +
                                            " is not achievable for this cycle: " + e.what());
  }
}

}  // namespace orcycle
