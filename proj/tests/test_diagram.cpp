#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rbd/diagram.hpp"
#include "rbd/laws.hpp"

using namespace rbd;

namespace {

StateAssignment state_of(std::initializer_list<std::pair<int, bool>> bits) {
  StateAssignment s;
  for (auto [i, b] : bits) s.set(ComponentId(i), b);
  return s;
}

}  // namespace

TEST_CASE("component ids validate and compare by index") {
  CHECK_THROWS_AS(ComponentId(0), std::invalid_argument);
  CHECK_THROWS_AS(ComponentId(-3), std::invalid_argument);
  CHECK(ComponentId(2) == ComponentId(2));
  CHECK(ComponentId(1) != ComponentId(2));
  CHECK(ComponentId(1) < ComponentId(2));
}

TEST_CASE("generating set rejects duplicates and keeps order") {
  CHECK_THROWS_AS(GeneratingSet({ComponentId(1), ComponentId(1)}), std::invalid_argument);
  const GeneratingSet g = GeneratingSet::first_n(3);
  CHECK(g.size() == 3);
  CHECK(g.at(0) == ComponentId(1));
  CHECK(g.position(ComponentId(3)) == 2);
  CHECK(!g.position(ComponentId(4)));
  CHECK(g.contains(ComponentId(2)));
}

TEST_CASE("built_upon") {
  const GeneratingSet g = GeneratingSet::first_n(2);
  CHECK(built_upon(Diagram::elementary(1) * Diagram::elementary(2), g));
  CHECK(!built_upon(Diagram::elementary(3), g));
  CHECK(built_upon(Diagram::one(), GeneratingSet{}));
}

TEST_CASE("components_of") {
  const Diagram a1 = Diagram::elementary(1);
  const Diagram a2 = Diagram::elementary(2);
  CHECK(components_of(a1 * (a2 + ~a1)) == std::set<ComponentId>{ComponentId(1), ComponentId(2)});
  CHECK(components_of(Diagram::zero()).empty());
  CHECK(components_of(~Diagram::elementary(5)) == std::set<ComponentId>{ComponentId(5)});
}

TEST_CASE("structure function on constants and connectives") {
  const StateAssignment empty;
  CHECK(evaluate(Diagram::series(Diagram::one(), Diagram::zero()), empty) == 0);
  CHECK(evaluate(Diagram::parallel(Diagram::zero(), Diagram::one()), empty) == 1);
  CHECK(evaluate(~Diagram::elementary(1), state_of({{1, true}})) == 0);
  CHECK(evaluate(~Diagram::elementary(1), state_of({{1, false}})) == 1);
}

TEST_CASE("missing component state is an error") {
  CHECK_THROWS_AS(evaluate(Diagram::elementary(2), state_of({{1, true}})), MissingComponentError);
}

TEST_CASE("extra state entries are ignored") {
  CHECK(evaluate(Diagram::elementary(1), state_of({{1, true}, {7, false}})) == 1);
}

TEST_CASE("series associativity agrees on all 8 states") {
  const Diagram a1 = Diagram::elementary(1), a2 = Diagram::elementary(2), a3 = Diagram::elementary(3);
  const GeneratingSet g = GeneratingSet::first_n(3);
  for (std::uint64_t k = 0; k < 8; ++k) {
    const StateAssignment s = StateAssignment::from_index(g, k);
    CHECK(evaluate((a1 * a2) * a3, s) == evaluate(a1 * (a2 * a3), s));
  }
}

TEST_CASE("truth tables") {
  const Diagram a1 = Diagram::elementary(1), a2 = Diagram::elementary(2);
  CHECK(truth_table(a1, GeneratingSet::first_n(1)) == std::vector<bool>{false, true});
  CHECK(truth_table(a1 * a2, GeneratingSet::first_n(2)) ==
        std::vector<bool>{false, false, false, true});
  CHECK(truth_table(a1 + ~a1, GeneratingSet::first_n(1)) == std::vector<bool>{true, true});
  CHECK(truth_table(Diagram::one(), GeneratingSet{}) == std::vector<bool>{true});
}

TEST_CASE("truth table cap") {
  CHECK_THROWS_AS(truth_table(Diagram::one(), GeneratingSet::first_n(5), 4), CapExceededError);
}

TEST_CASE("homomorphism properties on random terms") {
  std::mt19937_64 rng(20240811);
  const GeneratingSet g = GeneratingSet::first_n(4);
  for (int t = 0; t < 200; ++t) {
    const Diagram d1 = random_diagram(rng, 4, 5);
    const Diagram d2 = random_diagram(rng, 4, 5);
    for (std::uint64_t k = 0; k < 16; ++k) {
      const StateAssignment s = StateAssignment::from_index(g, k);
      const int v1 = evaluate(d1, s), v2 = evaluate(d2, s);
      REQUIRE(evaluate(d1 * d2, s) == std::min(v1, v2));
      REQUIRE(evaluate(d1 + d2, s) == std::max(v1, v2));
      REQUIRE(evaluate(~d1, s) == 1 - v1);
    }
    const auto table = truth_table(d1, g);
    REQUIRE(table.size() == 16);
    for (std::uint64_t k = 0; k < 16; ++k)
      REQUIRE(table[k] == (evaluate(d1, StateAssignment::from_index(g, k)) == 1));
  }
}

TEST_CASE("structural equality distinguishes term shape") {
  const Diagram a1 = Diagram::elementary(1);
  CHECK(structurally_equal(a1, Diagram::elementary(1)));
  CHECK(!structurally_equal(a1, ~~a1));
  CHECK(!structurally_equal(a1 * a1, a1 + a1));
}
