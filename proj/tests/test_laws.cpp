#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rbd/laws.hpp"

using namespace rbd;

namespace {

const std::vector<std::string> kAxiomNames = {
    "commutativity-series",
    "commutativity-parallel",
    "associativity-series",
    "associativity-parallel",
    "distributivity-series-over-parallel",
    "distributivity-parallel-over-series",
    "neutral-series",
    "neutral-parallel",
    "complement-join",
    "complement-meet",
};

}  // namespace

TEST_CASE("diagram algebra satisfies all ten axioms") {
  const auto reports = check_diagram_algebra(100, 1, 3);
  REQUIRE(reports.size() == 10);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].law == kAxiomNames[i]);
    CHECK(reports[i].trials == 100);
    CHECK(reports[i].failures == 0);
    CHECK(!reports[i].first_counterexample);
  }
}

TEST_CASE("reliability algebra satisfies all ten axioms with numeric shadow") {
  const auto reports = check_reliability_algebra(50, 1, 3);
  REQUIRE(reports.size() == 10);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].law == kAxiomNames[i]);
    CHECK(reports[i].failures == 0);
  }
}

TEST_CASE("structure function is a homomorphism onto {0,1}") {
  const auto report = check_structure_homomorphism(200, 1, 3);
  CHECK(report.law == "phi-homomorphism");
  CHECK(report.failures == 0);
}

TEST_CASE("an injected false law is caught with a counterexample") {
  // d1 * d2 vs d2 + d1 is not a law; the checker must find a witness.
  const auto report = check_diagram_law(
      "corrupted", 200, 3, 2, 2,
      [](const std::vector<Diagram>& o) { return std::pair{o[0] * o[1], o[1] + o[0]}; });
  CHECK(report.failures >= 1);
  REQUIRE(report.first_counterexample);
  CHECK(!report.first_counterexample->lhs.empty());
  CHECK(!report.first_counterexample->context.empty());
}

TEST_CASE("reports are deterministic given trials, seed and n") {
  const auto a = check_diagram_algebra(50, 9, 4);
  const auto b = check_diagram_algebra(50, 9, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].law == b[i].law);
    CHECK(a[i].failures == b[i].failures);
  }
  const auto r1 = check_structure_homomorphism(50, 4, 3);
  const auto r2 = check_structure_homomorphism(50, 4, 3);
  CHECK(r1.failures == r2.failures);
}

TEST_CASE("report rendering") {
  LawReport pass{"complement-join", 500, 0, std::nullopt};
  CHECK(render_report(pass) == "complement-join: PASS (trials=500)");

  LawReport fail{"corrupted", 10, 2,
                 LawCounterexample{"A1 * A2", "A2 + A1", "01", 3}};
  CHECK(render_report(fail) == "corrupted: FAIL trial=3 lhs=A1 * A2 rhs=A2 + A1 state=01");
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(check_diagram_algebra(0, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(check_diagram_algebra(10, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_diagram_algebra(10, 1, 9), std::invalid_argument);
  CHECK_THROWS_AS(check_structure_homomorphism(10, 1, 9), std::invalid_argument);
}

TEST_CASE("random diagrams exercise every constructor") {
  std::mt19937_64 rng(6);
  bool saw[6] = {};
  for (int t = 0; t < 500; ++t) {
    auto mark = [&](auto&& self, const Diagram& d) -> void {
      saw[static_cast<int>(d.kind())] = true;
      switch (d.kind()) {
        case DiagramKind::series:
        case DiagramKind::parallel:
          self(self, d.left());
          self(self, d.right());
          break;
        case DiagramKind::complement:
          self(self, d.left());
          break;
        default:
          break;
      }
    };
    mark(mark, random_diagram(rng, 3));
  }
  for (bool b : saw) CHECK(b);
}
