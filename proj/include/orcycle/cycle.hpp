#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orcycle/error.hpp"

namespace orcycle {

enum class Direction : std::uint8_t { forward, backward };

inline Direction opposite(Direction d) {
  return d == Direction::forward ? Direction::backward : Direction::forward;
}

// An oriented cycle on vertices v0..v(n-1), n >= 3. Arc i joins vertex i and
// vertex (i+1) mod n; forward means the arc points from i to i+1, backward
// means it points from i+1 to i. Immutable after construction.
class OrientedCycle {
 public:
  explicit OrientedCycle(std::vector<Direction> arcs) : arcs_(std::move(arcs)) {
    if (arcs_.size() < 3) {
      throw Error(errc::too_short, "an oriented cycle needs at least 3 arcs, got " +
                                       std::to_string(arcs_.size()));
    }
  }

  // Accepts '+', 'F', '>' for forward and '-', 'B', '<' for backward.
  // Surrounding whitespace is trimmed; anything else (including interior
  // whitespace) is rejected with the offending position in `text`.
  static OrientedCycle parse(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (end - begin < 3) {
      throw Error(errc::too_short, "an oriented cycle needs at least 3 arcs, got " +
                                       std::to_string(end - begin));
    }
    std::vector<Direction> arcs;
    arcs.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      switch (text[i]) {
        case '+':
        case 'F':
        case '>':
          arcs.push_back(Direction::forward);
          break;
        case '-':
        case 'B':
        case '<':
          arcs.push_back(Direction::backward);
          break;
        default:
          throw Error(errc::bad_character,
                      std::string("bad character '") + text[i] + "' at position " +
                          std::to_string(i) + " (expected one of + - F B > <)",
                      static_cast<int>(i));
      }
    }
    return OrientedCycle(std::move(arcs));
  }

  // Canonical text form: '+' and '-' only. parse(render()) == *this.
  std::string render() const {
    std::string out;
    out.reserve(arcs_.size());
    for (Direction d : arcs_) out.push_back(d == Direction::forward ? '+' : '-');
    return out;
  }

  int size() const { return static_cast<int>(arcs_.size()); }

  Direction arc(int i) const { return arcs_[static_cast<std::size_t>(i)]; }

  // +1 for a forward arc, -1 for a backward arc.
  int arc_sign(int i) const { return arcs_[static_cast<std::size_t>(i)] == Direction::forward ? 1 : -1; }

  const std::vector<Direction>& arcs() const { return arcs_; }

  friend bool operator==(const OrientedCycle&, const OrientedCycle&) = default;

 private:
  std::vector<Direction> arcs_;
};

// Per-vertex in/out degrees; indegree[v] + outdegree[v] == 2 for every v.
struct DegreeProfile {
  std::vector<int> indegree;
  std::vector<int> outdegree;
};

// Number of forward arcs minus number of backward arcs.
inline int lambda(const OrientedCycle& c) {
  int sum = 0;
  for (int i = 0; i < c.size(); ++i) sum += c.arc_sign(i);
  return sum;
}

// True iff every pair of cyclically consecutive arcs points in opposite
// directions. The wrap-around pair (arc n-1, arc 0) counts, so odd cycles
// are never alternating.
inline bool is_alternating(const OrientedCycle& c) {
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    if (c.arc(i) == c.arc((i + 1) % n)) return false;
  }
  return true;
}

// True iff some three cyclically consecutive arcs share a direction.
inline bool has_three_consecutive_same(const OrientedCycle& c) {
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    Direction d = c.arc(i);
    if (c.arc((i + 1) % n) == d && c.arc((i + 2) % n) == d) return true;
  }
  return false;
}

inline bool is_directed(const OrientedCycle& c) {
  const int n = c.size();
  for (int i = 1; i < n; ++i) {
    if (c.arc(i) != c.arc(0)) return false;
  }
  return true;
}

inline DegreeProfile degree_profile(const OrientedCycle& c) {
  const int n = c.size();
  DegreeProfile deg{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (int v = 0; v < n; ++v) {
    // Arc (v-1) mod n points into v when forward, arc v points into v when
    // backward.
    int in = 0;
    if (c.arc((v + n - 1) % n) == Direction::forward) ++in;
    if (c.arc(v) == Direction::backward) ++in;
    deg.indegree[v] = in;
    deg.outdegree[v] = 2 - in;
  }
  return deg;
}

// Cycle re-indexed to start traversal at vertex `offset`: new vertex j is old
// vertex (j + offset) mod n.
inline OrientedCycle rotated(const OrientedCycle& c, int offset) {
  const int n = c.size();
  offset = ((offset % n) + n) % n;
  std::vector<Direction> arcs(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) arcs[static_cast<std::size_t>(j)] = c.arc((j + offset) % n);
  return OrientedCycle(std::move(arcs));
}

// Every arc direction toggled. Negates lambda.
inline OrientedCycle flipped(const OrientedCycle& c) {
  std::vector<Direction> arcs;
  arcs.reserve(static_cast<std::size_t>(c.size()));
  for (Direction d : c.arcs()) arcs.push_back(opposite(d));
  return OrientedCycle(std::move(arcs));
}

// Traversal order reversed, keeping v0 first: new vertex j is old vertex
// (n - j) mod n. Equivalent to reversing the arc string and toggling every
// direction, so lambda negates.
inline OrientedCycle reflected(const OrientedCycle& c) {
  const int n = c.size();
  std::vector<Direction> arcs(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) arcs[static_cast<std::size_t>(j)] = opposite(c.arc(n - 1 - j));
  return OrientedCycle(std::move(arcs));
}

}  // namespace orcycle
