// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are fixed at 1e-12 for all reliability comparisons.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "rbd/rbd.hpp"

using namespace rbd;

namespace {

constexpr double kTol = 1e-12;

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << "criterion " << criterion << " (" << name << "): " << (ok ? "PASS" : "FAIL");
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

ReliabilityAssignment random_probs(const GeneratingSet& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ReliabilityAssignment p;
  for (std::size_t i = 0; i < g.size(); ++i) p.set(g.at(i), unit(rng));
  return p;
}

// --- criterion 1: 2^(2^n) classes, distinct roots, n = 1..4 ---------------

void criterion_counting() {
  const std::uint64_t expected[] = {4, 16, 256, 65536};
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 4; ++n) {
    // enumerate_classes throws if two functions share a canonical root
    const auto enumeration = enumerate_classes(n);
    if (enumeration.count != expected[n - 1]) {
      ok = false;
      detail = "n=" + std::to_string(n) + " count=" + std::to_string(enumeration.count);
    }
  }
  report(1, "counting-claim", ok, detail);
}

// --- criterion 2: diagram algebra laws + mutation test --------------------

void criterion_diagram_algebra() {
  const auto reports = check_diagram_algebra(1000, 20260823, 4);
  bool ok = reports.size() == 10;
  std::string detail;
  for (const auto& r : reports)
    if (r.failures != 0) {
      ok = false;
      detail = render_report(r);
    }
  const auto corrupted = check_diagram_law(
      "corrupted", 1000, 20260823, 4, 2,
      [](const std::vector<Diagram>& o) { return std::pair{o[0] * o[1], o[1] + o[0]}; });
  if (corrupted.failures < 1) {
    ok = false;
    detail = "mutation test not caught";
  }
  report(2, "diagram-boolean-algebra", ok, detail);
}

// --- criterion 3: reliability algebra laws + numeric shadow ---------------

void criterion_reliability_algebra() {
  const auto reports = check_reliability_algebra(500, 20260823, 4);
  bool ok = reports.size() == 10;
  std::string detail;
  for (const auto& r : reports)
    if (r.failures != 0) {
      ok = false;
      detail = render_report(r);
    }
  report(3, "reliability-boolean-algebra", ok, detail);
}

// --- criterion 4: structure-function homomorphism -------------------------

void criterion_homomorphism() {
  const auto r = check_structure_homomorphism(1000, 20260823, 4);
  report(4, "phi-isomorphism", r.failures == 0, render_report(r));
}

// --- criterion 5: exact vs brute-force oracle -----------------------------

void criterion_oracle_equivalence() {
  std::mt19937_64 rng(20260823);
  bool ok = true;
  std::string detail;
  for (int t = 0; t < 10000 && ok; ++t) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const GeneratingSet g = GeneratingSet::first_n(n);
    const Diagram d = random_diagram(rng, n, 6);
    const auto p = random_probs(g, rng);
    const double exact = reliability_exact(d, g, p);
    const double brute = reliability_bruteforce(d, g, p);
    if (std::abs(exact - brute) > kTol) {
      ok = false;
      detail = "trial " + std::to_string(t) + " diff=" + std::to_string(exact - brute) +
               " expr=" + render(d);
    }
  }
  report(5, "oracle-equivalence", ok, detail);
}

// --- criterion 6: well-definedness on the quotient ------------------------

// One random Boolean-axiom rewrite applied at a random subterm; repeated
// applications generate nontrivially equal pairs.
Diagram rewrite(const Diagram& d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto descend = [&](auto&& self, const Diagram& node) -> Diagram {
    const bool here = unit(rng) < 0.4;
    if (here) {
      switch (static_cast<int>(rng() % 8)) {
        case 0:  // commutativity
          if (node.kind() == DiagramKind::series) return node.right() * node.left();
          if (node.kind() == DiagramKind::parallel) return node.right() + node.left();
          break;
        case 1:  // associativity rotation
          if (node.kind() == DiagramKind::series && node.left().kind() == DiagramKind::series)
            return node.left().left() * (node.left().right() * node.right());
          if (node.kind() == DiagramKind::parallel && node.left().kind() == DiagramKind::parallel)
            return node.left().left() + (node.left().right() + node.right());
          break;
        case 2:  // neutral element introduction
          return rng() % 2 ? node * Diagram::one() : node + Diagram::zero();
        case 3:  // neutral element elimination
          if (node.kind() == DiagramKind::series && node.right().kind() == DiagramKind::one)
            return node.left();
          if (node.kind() == DiagramKind::parallel && node.right().kind() == DiagramKind::zero)
            return node.left();
          break;
        case 4:  // distributivity expansion
          if (node.kind() == DiagramKind::series && node.right().kind() == DiagramKind::parallel)
            return node.left() * node.right().left() + node.left() * node.right().right();
          break;
        case 5:  // double complement introduction
          return ~~node;
        case 6:  // double complement elimination
          if (node.kind() == DiagramKind::complement && node.left().kind() == DiagramKind::complement)
            return node.left().left();
          break;
        case 7:  // complement law: x + ~x for a copy of this node replaces 1
          if (node.kind() == DiagramKind::one) return node + ~node;
          break;
      }
    }
    switch (node.kind()) {
      case DiagramKind::series:
        return rng() % 2 ? self(self, node.left()) * node.right()
                         : node.left() * self(self, node.right());
      case DiagramKind::parallel:
        return rng() % 2 ? self(self, node.left()) + node.right()
                         : node.left() + self(self, node.right());
      case DiagramKind::complement:
        return ~self(self, node.left());
      default:
        return node;
    }
  };
  return descend(descend, d);
}

void criterion_quotient_well_definedness() {
  std::mt19937_64 rng(20260823);
  const GeneratingSet g = GeneratingSet::first_n(4);
  bool ok = true;
  std::string detail;
  for (int t = 0; t < 1000 && ok; ++t) {
    const Diagram d1 = random_diagram(rng, 4, 5);
    Diagram d2 = d1;
    const int steps = 1 + static_cast<int>(rng() % 6);
    for (int s = 0; s < steps; ++s) d2 = rewrite(d2, rng);
    if (!equals(d1, d2, g)) {
      ok = false;
      detail = "rewrite produced unequal diagrams: " + render(d1) + " vs " + render(d2);
      break;
    }
    for (int a = 0; a < 8; ++a) {
      const auto p = random_probs(g, rng);
      if (std::abs(reliability_exact(d1, g, p) - reliability_exact(d2, g, p)) > kTol) {
        ok = false;
        detail = "trial " + std::to_string(t) + ": " + render(d1) + " vs " + render(d2);
        break;
      }
    }
  }
  report(6, "quotient-well-definedness", ok, detail);
}

// --- criterion 7: repeated components -------------------------------------

void criterion_repeated_components() {
  bool ok = true;
  std::string detail;
  const GeneratingSet g1 = GeneratingSet::first_n(1);
  ReliabilityAssignment p1;
  p1.set(ComponentId(1), 0.9);
  const double r1 = reliability_exact(parse("A1*A1"), g1, p1);
  if (std::abs(r1 - 0.9) > kTol) {
    ok = false;
    detail = "A1*A1 gave " + std::to_string(r1);
  }

  const GeneratingSet g3 = GeneratingSet::first_n(3);
  ReliabilityAssignment p3;
  p3.set(ComponentId(1), 0.9);
  p3.set(ComponentId(2), 0.8);
  p3.set(ComponentId(3), 0.5);
  const Diagram shared = parse("(A1*A2)+(A1*A3)");
  const double exact = reliability_exact(shared, g3, p3);
  const double brute = reliability_bruteforce(shared, g3, p3);
  if (std::abs(exact - brute) > kTol || std::abs(exact - 0.81) > kTol) {
    ok = false;
    detail = "shared-component value " + std::to_string(exact);
  }
  report(7, "repeated-component-correctness", ok, detail);
}

// --- criterion 8: parser round trip + fuzz --------------------------------

void criterion_parser() {
  std::mt19937_64 rng(20260823);
  bool ok = true;
  std::string detail;
  for (int t = 0; t < 10000 && ok; ++t) {
    const Diagram d = random_diagram(rng, 8);
    if (!structurally_equal(parse(render(d)), d)) {
      ok = false;
      detail = "round trip failed for " + render(d);
    }
  }
  std::uniform_int_distribution<int> len(0, 40);
  std::uniform_int_distribution<int> byte(0, 255);
  const std::string alphabet = "A0123456789*+~&|() ";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int t = 0; t < 100000 && ok; ++t) {
    std::string input;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
      input += (t % 2 == 0) ? static_cast<char>(byte(rng)) : alphabet[pick(rng)];
    const auto outcome = try_parse(input);
    if (outcome.diagram.has_value() == outcome.error.has_value()) {
      ok = false;
      detail = "fuzz input neither parsed nor errored";
    }
  }
  report(8, "parser-round-trip-and-fuzz", ok, detail);
}

// --- criterion 9: Monte Carlo calibration ---------------------------------

void criterion_monte_carlo() {
  const GeneratingSet g = GeneratingSet::first_n(3);
  const Diagram d = parse("(A1*A2)+(A1*A3)");
  ReliabilityAssignment p;
  p.set(ComponentId(1), 0.9);
  p.set(ComponentId(2), 0.8);
  p.set(ComponentId(3), 0.5);
  const double exact = reliability_exact(d, g, p);
  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto mc = reliability_montecarlo(d, g, p, 10000, seed);
    if (std::abs(mc.estimate - exact) <= 4 * mc.standard_error) ++covered;
  }
  report(9, "monte-carlo-calibration", covered >= 99,
         "covered " + std::to_string(covered) + "/100");
}

}  // namespace

int main() {
  criterion_counting();
  criterion_diagram_algebra();
  criterion_reliability_algebra();
  criterion_homomorphism();
  criterion_oracle_equivalence();
  criterion_quotient_well_definedness();
  criterion_repeated_components();
  criterion_parser();
  criterion_monte_carlo();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
