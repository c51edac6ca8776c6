#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace orcycle;

TEST_CASE("sweep histograms match the oracle", "[sweep]") {
  SweepOptions opt;

  SweepReport n3 = sweep_one(3, opt);
  CHECK(n3.total == 8);
  CHECK(n3.chi_histogram == std::map<int, std::uint64_t>{{3, 8}});

  SweepReport n4 = sweep_one(4, opt);
  CHECK(n4.total == 16);
  CHECK(n4.chi_histogram == std::map<int, std::uint64_t>{{2, 2}, {3, 4}, {4, 10}});

  SweepReport n5 = sweep_one(5, opt);
  CHECK(n5.total == 32);
  CHECK(n5.chi_histogram == std::map<int, std::uint64_t>{{3, 20}, {4, 10}, {5, 2}});
}

TEST_CASE("sweep finds no mismatches and no witness failures", "[sweep]") {
  for (const SweepReport& report : sweep(3, 8)) {
    CHECK(report.mismatches.empty());
    CHECK(report.witness_failures.empty());
  }
}

TEST_CASE("legacy disagreements at n=3 cover all eight cycles", "[sweep]") {
  SweepOptions opt;
  opt.compare_legacy = true;
  SweepReport report = sweep_one(3, opt);
  REQUIRE(report.legacy_disagreements.size() == 8);
  for (const LegacyDisagreement& d : report.legacy_disagreements) {
    CHECK(d.chi_legacy == 4);
    CHECK(d.chi_oracle == 3);
  }
}

TEST_CASE("legacy disagreements are exactly the predicted set", "[sweep]") {
  SweepOptions opt;
  opt.compare_legacy = true;
  for (int n = 3; n <= 8; ++n) {
    std::set<std::string> reported;
    SweepReport report = sweep_one(n, opt);
    for (const LegacyDisagreement& d : report.legacy_disagreements) reported.insert(d.orientation);

    std::set<std::string> predicted;
    for (const OrientedCycle& c : enumerate_orientations(n)) {
      int lam = lambda(c);
      if (lam != 0 && (lam % 3 == 0 || !has_three_consecutive_same(c)) && !is_alternating(c)) {
        predicted.insert(c.render());
      }
    }
    CHECK(reported == predicted);
  }
}

TEST_CASE("canonical sweep re-expands to the full histogram", "[sweep]") {
  SweepOptions canonical;
  canonical.canonical = true;

  std::map<int, std::uint64_t> expanded;
  sweep_one(6, canonical, [&](const OrientedCycle& c, const Classification&, int oracle_chi,
                              const std::optional<int>&, bool) {
    expanded[oracle_chi] += static_cast<std::uint64_t>(orbit_size(c));
  });
  CHECK(expanded == sweep_one(6, SweepOptions{}).chi_histogram);
}

TEST_CASE("sweep validates its range and palette bound", "[sweep]") {
  CHECK(error_code_of([] { sweep(2, 5); }) == errc::bad_range);
  CHECK(error_code_of([] { sweep(6, 5); }) == errc::bad_range);
  CHECK(error_code_of([] { sweep(3, 17); }) == errc::bad_range);

  SweepOptions canonical;
  canonical.canonical = true;
  CHECK(error_code_of([&] { sweep(3, 21, canonical); }) == errc::bad_range);
  CHECK_NOTHROW(check_sweep_range(3, 20, canonical));  // canonical mode reaches further

  SweepOptions low_k;
  low_k.max_k = 4;
  CHECK(error_code_of([&] { sweep(3, 4, low_k); }) == errc::bad_range);
}

TEST_CASE("the row hook observes every cycle in enumeration order", "[sweep]") {
  std::vector<std::string> seen;
  sweep_one(3, SweepOptions{}, [&](const OrientedCycle& c, const Classification& cls,
                                   int oracle_chi, const std::optional<int>& legacy, bool ok) {
    CHECK(cls.chi == oracle_chi);
    CHECK_FALSE(legacy.has_value());
    CHECK(ok);
    seen.push_back(c.render());
  });
  CHECK(seen == std::vector<std::string>{"---", "--+", "-+-", "-++", "+--", "+-+", "++-", "+++"});
}
