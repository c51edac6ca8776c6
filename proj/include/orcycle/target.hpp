#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orcycle/error.hpp"

namespace orcycle {

// A small fixed oriented graph used as a homomorphism target. Construction
// rejects loops and digons (a pair of opposite arcs), so any instance is a
// genuine oriented graph.
class TargetGraph {
 public:
  TargetGraph(std::string name, int order, std::vector<std::pair<int, int>> arcs)
      : name_(std::move(name)), order_(order), arcs_(std::move(arcs)),
        adj_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0) {
    if (order_ < 1) throw std::invalid_argument("target graph needs at least one vertex");
    for (auto [a, b] : arcs_) {
      if (a < 0 || b < 0 || a >= order_ || b >= order_)
        throw std::invalid_argument("target arc endpoint out of range");
      if (a == b) throw std::invalid_argument("target graph must not contain loops");
      if (adj_[index(b, a)]) throw std::invalid_argument("target graph must not contain digons");
      if (adj_[index(a, b)]) throw std::invalid_argument("duplicate arc in target graph");
      adj_[index(a, b)] = 1;
    }
  }

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

  bool has_arc(int a, int b) const {
    if (a < 0 || b < 0 || a >= order_ || b >= order_) return false;
    return adj_[index(a, b)] != 0;
  }

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(b);
  }

  std::string name_;
  int order_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<std::uint8_t> adj_;
};

// The fixed targets the witness constructions color into:
//   K2    - single arc 0->1, the 2-color target
//   C3    - directed triangle
//   V3    - transitive triangle (indegree coloring target)
//   Q4    - directed 4-cycle plus chord 2->0
//   T4    - C3 plus vertex 3 with all arcs incoming
//   K5dir - directed 5-cycle plus all length-2 shortcuts (a tournament)
inline TargetGraph builtin_target(std::string_view name) {
  if (name == "K2") return TargetGraph("K2", 2, {{0, 1}});
  if (name == "C3") return TargetGraph("C3", 3, {{0, 1}, {1, 2}, {2, 0}});
  if (name == "V3") return TargetGraph("V3", 3, {{0, 1}, {1, 2}, {0, 2}});
  if (name == "Q4") return TargetGraph("Q4", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 0}});
  if (name == "T4")
    return TargetGraph("T4", 4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
  if (name == "K5dir")
    return TargetGraph("K5dir", 5,
                       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                        {0, 2}, {1, 3}, {2, 4}, {3, 0}, {4, 1}});
  throw Error(errc::unknown_target, "unknown target graph: " + std::string(name));
}

}  // namespace orcycle
