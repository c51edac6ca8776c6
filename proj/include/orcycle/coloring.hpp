#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orcycle/cycle.hpp"
#include "orcycle/error.hpp"
#include "orcycle/target.hpp"

namespace orcycle {

// One color index per cycle vertex, all below palette_size.
struct Coloring {
  std::vector<int> colors;
  int palette_size = 0;

  // Palette sized to the largest color used.
  static Coloring with_palette(std::vector<int> colors) {
    int max = -1;
    for (int x : colors) max = x > max ? x : max;
    return Coloring{std::move(colors), max + 1};
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Strict "d(,d)*" grammar, decimal nonnegative color per vertex.
inline Coloring parse_coloring(std::string_view text) {
  std::vector<int> colors;
  std::size_t pos = 0;
  while (true) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    std::size_t used = static_cast<std::size_t>(ptr - (text.data() + pos));
    if (ec != std::errc() || used == 0 || value < 0) {
      throw Error(errc::bad_coloring_text,
                  "expected a nonnegative decimal color at position " + std::to_string(pos),
                  static_cast<int>(pos));
    }
    colors.push_back(value);
    pos += used;
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw Error(errc::bad_coloring_text,
                  std::string("unexpected character '") + text[pos] + "' at position " +
                      std::to_string(pos),
                  static_cast<int>(pos));
    }
    ++pos;
  }
  return Coloring::with_palette(std::move(colors));
}

inline std::string render_coloring(const Coloring& col) {
  std::string out;
  for (std::size_t i = 0; i < col.colors.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(col.colors[i]);
  }
  return out;
}

enum class ViolationKind {
  none,
  adjacent_same_color,  // condition (a): an arc joins two equal colors
  antisymmetry,         // condition (b): two arcs realize opposite color pairs
};

struct VerifyResult {
  bool valid = false;
  ViolationKind kind = ViolationKind::none;
  // Offending arc index(es); arc_b is -1 for condition (a).
  int arc_a = -1;
  int arc_b = -1;
  std::string message;
};

namespace detail {
// Ordered color pair realized by arc i under `col`.
inline std::pair<int, int> realized_pair(const OrientedCycle& c, const std::vector<int>& col,
                                         int i) {
  int u = i;
  int w = (i + 1) % c.size();
  return c.arc(i) == Direction::forward ? std::pair{col[static_cast<std::size_t>(u)],
                                                     col[static_cast<std::size_t>(w)]}
                                        : std::pair{col[static_cast<std::size_t>(w)],
                                                    col[static_cast<std::size_t>(u)]};
}
}  // namespace detail

// Checks the two oriented-coloring conditions in a fixed scan order so that
// the first reported violation is deterministic: (a) over arcs 0..n-1, then
// (b) over arc pairs in lexicographic order.
inline VerifyResult verify_coloring(const OrientedCycle& c, const Coloring& col) {
  const int n = c.size();
  if (static_cast<int>(col.colors.size()) != n) {
    throw Error(errc::length_mismatch, "coloring has " + std::to_string(col.colors.size()) +
                                           " entries but the cycle has " + std::to_string(n) +
                                           " vertices");
  }
  for (int i = 0; i < n; ++i) {
    auto [a, b] = detail::realized_pair(c, col.colors, i);
    if (a == b) {
      return {false, ViolationKind::adjacent_same_color, i, -1,
              "arc " + std::to_string(i) + " joins two vertices of color " + std::to_string(a)};
    }
  }
  for (int i = 0; i < n; ++i) {
    auto [a1, b1] = detail::realized_pair(c, col.colors, i);
    for (int j = i + 1; j < n; ++j) {
      auto [a2, b2] = detail::realized_pair(c, col.colors, j);
      if (a1 == b2 && b1 == a2) {
        return {false, ViolationKind::antisymmetry, i, j,
                "arcs " + std::to_string(i) + " and " + std::to_string(j) +
                    " realize opposite color pairs (" + std::to_string(a1) + "," +
                    std::to_string(b1) + ") and (" + std::to_string(a2) + "," +
                    std::to_string(b2) + ")"};
      }
    }
  }
  return {true, ViolationKind::none, -1, -1, ""};
}

// True iff every cycle arc maps to an arc of `t` under `col`.
inline bool is_homomorphism(const OrientedCycle& c, const Coloring& col, const TargetGraph& t) {
  const int n = c.size();
  if (static_cast<int>(col.colors.size()) != n) {
    throw Error(errc::length_mismatch, "coloring has " + std::to_string(col.colors.size()) +
                                           " entries but the cycle has " + std::to_string(n) +
                                           " vertices");
  }
  for (int i = 0; i < n; ++i) {
    auto [a, b] = detail::realized_pair(c, col.colors, i);
    if (!t.has_arc(a, b)) return false;
  }
  return true;
}

// Target induced by a valid coloring: palette_size vertices, one arc per
// realized color pair. Throws std::invalid_argument (via TargetGraph) when
// the coloring is not a valid oriented coloring.
inline TargetGraph induced_target(const OrientedCycle& c, const Coloring& col) {
  const int n = c.size();
  if (static_cast<int>(col.colors.size()) != n) {
    throw Error(errc::length_mismatch, "coloring length differs from cycle length");
  }
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) {
    auto p = detail::realized_pair(c, col.colors, i);
    bool seen = false;
    for (auto q : arcs) seen = seen || q == p;
    if (!seen) arcs.push_back(p);
  }
  return TargetGraph("induced", col.palette_size, std::move(arcs));
}

}  // namespace orcycle
