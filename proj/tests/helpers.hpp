#pragma once

#include <random>
#include <string_view>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "orcycle/orcycle.hpp"

inline orcycle::OrientedCycle cyc(std::string_view s) { return orcycle::OrientedCycle::parse(s); }

inline orcycle::OrientedCycle random_cycle(std::mt19937& rng, int n) {
  std::vector<orcycle::Direction> arcs(static_cast<std::size_t>(n));
  for (auto& d : arcs) {
    d = (rng() & 1u) ? orcycle::Direction::forward : orcycle::Direction::backward;
  }
  return orcycle::OrientedCycle(std::move(arcs));
}

template <typename Fn>
orcycle::errc error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const orcycle::Error& e) {
    return e.code();
  }
  FAIL("expected an orcycle::Error");
  return orcycle::errc::too_short;  // unreachable
}
