#pragma once

#include <stdexcept>
#include <string>

namespace orcycle {

// Machine-checkable failure reasons. CLI layers map these onto exit codes,
// tests assert on them directly.
enum class errc {
  too_short,             // orientation text shorter than 3 arcs
  bad_character,         // orientation text contains a character outside +-FB<>
  bad_coloring_text,     // coloring text is not "d(,d)*"
  unknown_target,        // no builtin target with that name
  length_mismatch,       // coloring length differs from cycle length
  not_alternating,       // 2-color construction needs an alternating cycle
  lambda_not_zero_mod3,  // C3 construction needs lambda divisible by 3
  has_three_run,         // V3 construction forbids three same-direction arcs
  no_decomposition,      // n = 3a + 4b has no nonnegative solution (n = 5)
  not_directed,          // Q4 construction needs a directed cycle
  is_directed,           // mixed 4-color construction needs opposite arcs
  not_directed_c5,       // 5-color construction is only for the directed 5-cycle
  unachievable_chi,      // no construction produces the requested palette
  bad_max_k,             // oracle color bound outside [2, 8]
  bad_n,                 // enumeration length outside [3, 24]
  bad_range,             // sweep bounds out of range
};

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message, int position = -1)
      : std::runtime_error(std::move(message)), code_(code), position_(position) {}

  errc code() const noexcept { return code_; }

  // Index into the offending input text, -1 when not applicable.
  int position() const noexcept { return position_; }

 private:
  errc code_;
  int position_;
};

}  // namespace orcycle
