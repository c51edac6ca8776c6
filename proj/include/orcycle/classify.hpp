#pragma once

#include "orcycle/construct.hpp"
#include "orcycle/cycle.hpp"

namespace orcycle {

// Structural facts plus the resulting oriented chromatic number and a
// machine-checkable witness coloring.
struct Classification {
  int n;
  int lambda;
  bool alternating;
  bool three_run;
  bool directed;
  int chi;
  Witness witness;
};

// O(n) decision ladder:
//   1. alternating                             -> chi = 2
//   2. lambda divisible by 3, or no three-run  -> chi = 3
//   3. directed 5-cycle                        -> chi = 5
//   4. otherwise                               -> chi = 4
// Always attaches the dispatched witness, so every answer carries its own
// certificate.
inline Classification classify(const OrientedCycle& c) {
  const int n = c.size();
  const int lam = lambda(c);
  const bool alternating = is_alternating(c);
  const bool three_run = has_three_consecutive_same(c);
  const bool directed = is_directed(c);
  int chi;
  if (alternating) {
    chi = 2;
  } else if (lam % 3 == 0 || !three_run) {
    chi = 3;
  } else if (n == 5 && directed) {
    chi = 5;
  } else {
    chi = 4;
  }
  return Classification{n, lam, alternating, three_run, directed, chi,
                        construct_witness(c, chi)};
}

// The value an older published rule predicts: 3-colorable only when lambda
// is exactly 0. Kept for cross-checking against the oracle; the sweep
// reports where it disagrees.
inline int classify_legacy(const OrientedCycle& c) {
  if (is_alternating(c)) return 2;
  if (lambda(c) == 0) return 3;
  if (c.size() == 5 && is_directed(c)) return 5;
  return 4;
}

}  // namespace orcycle
