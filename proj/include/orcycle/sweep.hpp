#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orcycle/classify.hpp"
#include "orcycle/coloring.hpp"
#include "orcycle/enumerate.hpp"
#include "orcycle/error.hpp"
#include "orcycle/oracle.hpp"

namespace orcycle {

struct SweepMismatch {
  std::string orientation;
  int chi_classifier;
  int chi_oracle;  // -1 when the oracle found nothing within max_k
};

struct LegacyDisagreement {
  std::string orientation;
  int chi_legacy;
  int chi_oracle;
};

// Per-length aggregate of the classifier / oracle / witness cross-check.
// mismatches and witness_failures stay empty when everything is correct;
// legacy_disagreements are expected findings, not errors.
struct SweepReport {
  int n = 0;
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> chi_histogram;  // keyed by oracle chi
  std::vector<SweepMismatch> mismatches;
  std::vector<LegacyDisagreement> legacy_disagreements;
  std::vector<std::string> witness_failures;
};

struct SweepOptions {
  int max_k = kOracleDefaultMaxColors;
  bool canonical = false;
  bool compare_legacy = false;
};

// A constructed witness must verify, map into its declared target, and use a
// palette of exactly the claimed chi.
inline bool witness_checks_out(const OrientedCycle& c, const Classification& cls) {
  const Witness& w = cls.witness;
  return verify_coloring(c, w.coloring).valid && is_homomorphism(c, w.coloring, w.target) &&
         w.coloring.palette_size == cls.chi && w.target.order() == cls.chi;
}

// Full mode is capped at n = 16 (65536 cycles per length), canonical mode at
// n = 20; the oracle bound must stay at least 5 so that no cycle is missed.
inline void check_sweep_range(int n_min, int n_max, const SweepOptions& opt) {
  const int cap = opt.canonical ? 20 : 16;
  if (n_min < 3 || n_min > n_max || n_max > cap) {
    throw Error(errc::bad_range, "sweep range must satisfy 3 <= min <= max <= " +
                                     std::to_string(cap) + ", got [" + std::to_string(n_min) +
                                     ", " + std::to_string(n_max) + "]");
  }
  if (opt.max_k < 5 || opt.max_k > 8) {
    throw Error(errc::bad_range,
                "sweep max colors must lie in [5, 8], got " + std::to_string(opt.max_k));
  }
}

// Cross-checks one length. `row` observes every enumerated cycle in order,
// with the classification, oracle answer, optional legacy answer and witness
// verdict; CSV output hangs off this hook.
template <typename RowFn>
SweepReport sweep_one(int n, const SweepOptions& opt, RowFn&& row) {
  check_sweep_range(n, n, opt);
  SweepReport report;
  report.n = n;
  for_each_orientation(n, opt.canonical, [&](const OrientedCycle& c) {
    ++report.total;
    Classification cls = classify(c);
    std::optional<int> oracle = brute_force_chi(c, opt.max_k);
    const int oracle_chi = oracle.value_or(-1);
    ++report.chi_histogram[oracle_chi];

    if (oracle_chi != cls.chi) {
      report.mismatches.push_back({c.render(), cls.chi, oracle_chi});
    }
    bool witness_ok = witness_checks_out(c, cls);
    if (!witness_ok) report.witness_failures.push_back(c.render());

    std::optional<int> legacy;
    if (opt.compare_legacy) {
      legacy = classify_legacy(c);
      if (*legacy != oracle_chi) {
        report.legacy_disagreements.push_back({c.render(), *legacy, oracle_chi});
      }
    }
    row(c, cls, oracle_chi, legacy, witness_ok);
  });
  return report;
}

inline SweepReport sweep_one(int n, const SweepOptions& opt) {
  return sweep_one(n, opt, [](const OrientedCycle&, const Classification&, int,
                              const std::optional<int>&, bool) {});
}

inline std::vector<SweepReport> sweep(int n_min, int n_max, const SweepOptions& opt = {}) {
  check_sweep_range(n_min, n_max, opt);
  std::vector<SweepReport> reports;
  reports.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) reports.push_back(sweep_one(n, opt));
  return reports;
}

}  // namespace orcycle
