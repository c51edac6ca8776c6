#include "helpers.hpp"

using namespace orcycle;

TEST_CASE("parse maps one character per arc and accepts aliases", "[cycle]") {
  OrientedCycle c = cyc("+-+-");
  REQUIRE(c.size() == 4);
  CHECK(c.arc(0) == Direction::forward);
  CHECK(c.arc(1) == Direction::backward);
  CHECK(c.arc(2) == Direction::forward);
  CHECK(c.arc(3) == Direction::backward);

  CHECK(cyc("FB>").render() == "+-+");
  CHECK(cyc("<B-").render() == "---");
  CHECK(cyc("  +++ \n").render() == "+++");
}

TEST_CASE("parse rejects malformed orientation strings", "[cycle]") {
  CHECK(error_code_of([] { cyc("+-"); }) == errc::too_short);
  CHECK(error_code_of([] { cyc("   "); }) == errc::too_short);
  CHECK(error_code_of([] { cyc(""); }) == errc::too_short);
  CHECK(error_code_of([] { cyc("++x+"); }) == errc::bad_character);
  CHECK(error_code_of([] { cyc("++ -"); }) == errc::bad_character);

  try {
    cyc(" +x+ ");
    FAIL("expected bad_character");
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_character);
    CHECK(e.position() == 2);  // index into the text as given
  }
}

TEST_CASE("render emits only + and - and round-trips", "[cycle]") {
  CHECK(OrientedCycle({Direction::forward, Direction::backward, Direction::forward,
                       Direction::backward})
            .render() == "+-+-");
  CHECK(OrientedCycle({Direction::forward, Direction::forward, Direction::forward}).render() ==
        "+++");
  CHECK(OrientedCycle({Direction::backward, Direction::backward, Direction::backward}).render() ==
        "---");

  std::mt19937 rng(20240817);
  for (int iter = 0; iter < 300; ++iter) {
    OrientedCycle c = random_cycle(rng, 3 + static_cast<int>(rng() % 22));
    CHECK(OrientedCycle::parse(c.render()) == c);
  }
}

TEST_CASE("lambda counts forward minus backward arcs", "[cycle]") {
  CHECK(lambda(cyc("+++++")) == 5);
  CHECK(lambda(cyc("+-+-")) == 0);
  CHECK(lambda(cyc("++-")) == 1);
}

TEST_CASE("lambda has the parity of n and magnitude at most n", "[cycle]") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 3 + static_cast<int>(rng() % 20);
    OrientedCycle c = random_cycle(rng, n);
    int lam = lambda(c);
    CHECK((lam - n) % 2 == 0);
    CHECK(lam <= n);
    CHECK(lam >= -n);
  }
}

TEST_CASE("alternation needs opposite consecutive arcs, wrap included", "[cycle]") {
  CHECK(is_alternating(cyc("+-+-")));
  CHECK_FALSE(is_alternating(cyc("+--+")));
  CHECK_FALSE(is_alternating(cyc("+-+")));  // odd length: the wrap pair agrees
}

TEST_CASE("alternating cycles have lambda 0, no three-run, even length", "[cycle]") {
  for (int n = 3; n <= 10; ++n) {
    for (const OrientedCycle& c : enumerate_orientations(n)) {
      if (!is_alternating(c)) continue;
      CHECK(lambda(c) == 0);
      CHECK_FALSE(has_three_consecutive_same(c));
      CHECK(n % 2 == 0);
    }
  }
}

TEST_CASE("three-run detection wraps around", "[cycle]") {
  CHECK(has_three_consecutive_same(cyc("+++--")));
  CHECK_FALSE(has_three_consecutive_same(cyc("++-+-")));
  CHECK(has_three_consecutive_same(cyc("++--+")));  // arcs 4, 0, 1 all forward
}

TEST_CASE("degree profile counts incident arcs pointing in", "[cycle]") {
  CHECK(degree_profile(cyc("++-")).indegree == std::vector<int>{0, 1, 2});
  CHECK(degree_profile(cyc("+++")).indegree == std::vector<int>{1, 1, 1});
  CHECK(degree_profile(cyc("+-+-")).indegree == std::vector<int>{0, 2, 0, 2});

  std::mt19937 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 3 + static_cast<int>(rng() % 20);
    OrientedCycle c = random_cycle(rng, n);
    DegreeProfile deg = degree_profile(c);
    int in_sum = 0;
    for (int v = 0; v < n; ++v) {
      CHECK(deg.indegree[v] + deg.outdegree[v] == 2);
      in_sum += deg.indegree[v];
    }
    CHECK(in_sum == n);  // each arc contributes exactly one indegree
  }
}

TEST_CASE("directed means all arcs share one direction", "[cycle]") {
  CHECK(is_directed(cyc("+++++")));
  CHECK(is_directed(cyc("-----")));
  CHECK_FALSE(is_directed(cyc("++-")));

  std::mt19937 rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 3 + static_cast<int>(rng() % 14);
    OrientedCycle c = random_cycle(rng, n);
    CHECK(is_directed(c) == (lambda(c) == n || lambda(c) == -n));
  }
}

TEST_CASE("rotation, reflection and flip act as expected", "[cycle]") {
  CHECK(rotated(cyc("+-++"), 2).render() == "+++-");
  CHECK(flipped(cyc("++-")).render() == "--+");
  CHECK(reflected(cyc("++-")).render() == "+--");

  std::mt19937 rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 3 + static_cast<int>(rng() % 16);
    OrientedCycle c = random_cycle(rng, n);
    int r = static_cast<int>(rng() % static_cast<unsigned>(n));

    CHECK(lambda(rotated(c, r)) == lambda(c));
    CHECK(lambda(flipped(c)) == -lambda(c));
    CHECK(lambda(reflected(c)) == -lambda(c));

    for (const OrientedCycle& t : {rotated(c, r), flipped(c), reflected(c)}) {
      CHECK(is_alternating(t) == is_alternating(c));
      CHECK(has_three_consecutive_same(t) == has_three_consecutive_same(c));
      CHECK(is_directed(t) == is_directed(c));
    }

    // rotation permutes the degree profile along with the vertices
    DegreeProfile deg = degree_profile(c);
    DegreeProfile rdeg = degree_profile(rotated(c, r));
    for (int j = 0; j < n; ++j) CHECK(rdeg.indegree[j] == deg.indegree[(j + r) % n]);
  }
}
