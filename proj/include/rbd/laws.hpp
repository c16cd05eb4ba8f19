#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rbd/canonical.hpp"
#include "rbd/diagram.hpp"
#include "rbd/parser.hpp"
#include "rbd/reliability.hpp"

namespace rbd {

// The ten Boolean-algebra axioms checked on the diagram and reliability
// algebras: commutativity, associativity and distributivity for both
// connectives, the neutral element laws x*1 = x and x+0 = x, and the
// complement laws x+~x = 1 and x*~x = 0.

struct LawCounterexample {
  std::string lhs;
  std::string rhs;
  std::string context;  // state bits or reliability assignment
  std::uint64_t trial = 0;
};

struct LawReport {
  std::string law;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::optional<LawCounterexample> first_counterexample;
};

inline std::string render_report(const LawReport& r) {
  if (r.failures == 0) return r.law + ": PASS (trials=" + std::to_string(r.trials) + ")";
  const auto& ce = *r.first_counterexample;
  std::string line = r.law + ": FAIL trial=" + std::to_string(ce.trial) + " lhs=" + ce.lhs +
                     " rhs=" + ce.rhs;
  if (!ce.context.empty()) line += " state=" + ce.context;
  return line;
}

// Size-bounded random term: max depth 7; operator mix 0.3 series, 0.3
// parallel, 0.2 complement, 0.2 leaf; leaves pick each constant with weight
// 0.1 and otherwise a uniform component.
inline Diagram random_diagram(std::mt19937_64& rng, int component_count, int max_depth = 7) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto leaf = [&]() -> Diagram {
    const double roll = unit(rng);
    if (roll < 0.1) return Diagram::zero();
    if (roll < 0.2) return Diagram::one();
    std::uniform_int_distribution<int> pick(1, component_count);
    return Diagram::elementary(pick(rng));
  };
  auto rec = [&](auto&& self, int depth) -> Diagram {
    if (depth >= max_depth) return leaf();
    const double roll = unit(rng);
    if (roll < 0.3) return Diagram::series(self(self, depth + 1), self(self, depth + 1));
    if (roll < 0.6) return Diagram::parallel(self(self, depth + 1), self(self, depth + 1));
    if (roll < 0.8) return Diagram::complement(self(self, depth + 1));
    return leaf();
  };
  return rec(rec, 0);
}

// One law instance: given `arity` fresh random diagrams, produce the two
// sides to compare. Exposed so tests can inject a deliberately false law.
using DiagramLaw = std::function<std::pair<Diagram, Diagram>(const std::vector<Diagram>&)>;

inline LawReport check_diagram_law(const std::string& law, std::uint64_t trials,
                                   std::uint64_t seed, int n, int arity,
                                   const DiagramLaw& sides) {
  std::mt19937_64 rng(seed);
  const GeneratingSet g = GeneratingSet::first_n(n);
  LawReport report{law, trials, 0, std::nullopt};
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<Diagram> operands;
    for (int i = 0; i < arity; ++i) operands.push_back(random_diagram(rng, n));
    const auto [lhs, rhs] = sides(operands);
    const auto lt = truth_table(lhs, g);
    const auto rt = truth_table(rhs, g);
    if (equals(lhs, rhs, g) && lt == rt) continue;
    ++report.failures;
    if (!report.first_counterexample) {
      std::string bits;
      for (std::size_t k = 0; k < lt.size(); ++k)
        if (lt[k] != rt[k]) {
          for (std::size_t i = 0; i < g.size(); ++i) bits += ((k >> i) & 1u) ? '1' : '0';
          break;
        }
      report.first_counterexample = LawCounterexample{render(lhs), render(rhs), bits, t};
    }
  }
  return report;
}

namespace detail {

struct NamedLaw {
  std::string name;
  int arity;
  DiagramLaw sides;
};

inline std::vector<NamedLaw> boolean_axioms() {
  auto d = [](const std::vector<Diagram>& ops, std::size_t i) { return ops[i]; };
  return {
      {"commutativity-series", 2,
       [d](const auto& o) { return std::pair{d(o, 0) * d(o, 1), d(o, 1) * d(o, 0)}; }},
      {"commutativity-parallel", 2,
       [d](const auto& o) { return std::pair{d(o, 0) + d(o, 1), d(o, 1) + d(o, 0)}; }},
      {"associativity-series", 3,
       [d](const auto& o) { return std::pair{(d(o, 0) * d(o, 1)) * d(o, 2), d(o, 0) * (d(o, 1) * d(o, 2))}; }},
      {"associativity-parallel", 3,
       [d](const auto& o) { return std::pair{(d(o, 0) + d(o, 1)) + d(o, 2), d(o, 0) + (d(o, 1) + d(o, 2))}; }},
      {"distributivity-series-over-parallel", 3,
       [d](const auto& o) { return std::pair{d(o, 0) * (d(o, 1) + d(o, 2)), d(o, 0) * d(o, 1) + d(o, 0) * d(o, 2)}; }},
      {"distributivity-parallel-over-series", 3,
       [d](const auto& o) { return std::pair{d(o, 0) + d(o, 1) * d(o, 2), (d(o, 0) + d(o, 1)) * (d(o, 0) + d(o, 2))}; }},
      {"neutral-series", 1,
       [d](const auto& o) { return std::pair{d(o, 0) * Diagram::one(), d(o, 0)}; }},
      {"neutral-parallel", 1,
       [d](const auto& o) { return std::pair{d(o, 0) + Diagram::zero(), d(o, 0)}; }},
      {"complement-join", 1,
       [d](const auto& o) { return std::pair{d(o, 0) + ~d(o, 0), Diagram::one()}; }},
      {"complement-meet", 1,
       [d](const auto& o) { return std::pair{d(o, 0) * ~d(o, 0), Diagram::zero()}; }},
  };
}

}  // namespace detail

// Checks every Boolean-algebra axiom on random diagram terms with equals().
inline std::vector<LawReport> check_diagram_algebra(std::uint64_t trials, std::uint64_t seed, int n) {
  if (trials < 1 || n < 1 || n > 8) throw std::invalid_argument("need trials >= 1 and 1 <= n <= 8");
  std::vector<LawReport> reports;
  std::uint64_t law_index = 0;
  for (const auto& law : detail::boolean_axioms())
    reports.push_back(check_diagram_law(law.name, trials, seed + law_index++, n, law.arity, law.sides));
  return reports;
}

inline constexpr double kReliabilityTolerance = 1e-12;

// Same axiom list on canonical forms with meet/join/complement and
// identical-root equality, plus a numeric shadow: both sides of each axiom
// must produce reliabilities within 1e-12 under random assignments.
inline std::vector<LawReport> check_reliability_algebra(std::uint64_t trials, std::uint64_t seed,
                                                        int n, int assignments_per_trial = 8) {
  if (trials < 1 || n < 1 || n > 8) throw std::invalid_argument("need trials >= 1 and 1 <= n <= 8");
  const GeneratingSet g = GeneratingSet::first_n(n);
  std::vector<LawReport> reports;
  std::uint64_t law_index = 0;
  for (const auto& law : detail::boolean_axioms()) {
    std::mt19937_64 rng(seed + law_index++);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    LawReport report{law.name, trials, 0, std::nullopt};
    NodeStore store(g);
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::vector<Diagram> operands;
      for (int i = 0; i < law.arity; ++i) operands.push_back(random_diagram(rng, n));
      const auto [lhs_d, rhs_d] = law.sides(operands);
      const CanonicalForm lhs = store.canonicalize(lhs_d);
      const CanonicalForm rhs = store.canonicalize(rhs_d);
      bool ok = lhs == rhs;
      std::string context;
      for (int a = 0; a < assignments_per_trial && ok; ++a) {
        ReliabilityAssignment p;
        for (std::size_t i = 0; i < g.size(); ++i) p.set(g.at(i), unit(rng));
        const double rl = form_reliability(lhs, p);
        const double rr = form_reliability(rhs, p);
        if (std::abs(rl - rr) > kReliabilityTolerance) {
          ok = false;
          context = "assignment#" + std::to_string(a);
        }
      }
      if (ok) continue;
      ++report.failures;
      if (!report.first_counterexample)
        report.first_counterexample = LawCounterexample{render(lhs_d), render(rhs_d), context, t};
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

// The structure function respects all operations and constants and is onto
// {0,1}; checked over random diagram pairs with exhaustive states.
inline LawReport check_structure_homomorphism(std::uint64_t trials, std::uint64_t seed, int n) {
  if (trials < 1 || n < 1 || n > 8) throw std::invalid_argument("need trials >= 1 and 1 <= n <= 8");
  std::mt19937_64 rng(seed);
  const GeneratingSet g = GeneratingSet::first_n(n);
  LawReport report{"phi-homomorphism", trials, 0, std::nullopt};
  bool saw_zero = false, saw_one = false;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Diagram d1 = random_diagram(rng, n);
    const Diagram d2 = random_diagram(rng, n);
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << g.size()); ++k) {
      const StateAssignment s = StateAssignment::from_index(g, k);
      const int v1 = evaluate(d1, s);
      const int v2 = evaluate(d2, s);
      saw_zero |= v1 == 0;
      saw_one |= v1 == 1;
      const bool ok = evaluate(d1 * d2, s) == std::min(v1, v2) &&
                      evaluate(d1 + d2, s) == std::max(v1, v2) &&
                      evaluate(~d1, s) == 1 - v1 &&
                      evaluate(Diagram::zero(), s) == 0 && evaluate(Diagram::one(), s) == 1;
      if (ok) continue;
      ++report.failures;
      if (!report.first_counterexample) {
        std::string bits;
        for (std::size_t i = 0; i < g.size(); ++i) bits += ((k >> i) & 1u) ? '1' : '0';
        report.first_counterexample = LawCounterexample{render(d1), render(d2), bits, t};
      }
      break;
    }
  }
  if (!(saw_zero && saw_one)) {
    ++report.failures;
    if (!report.first_counterexample)
      report.first_counterexample = LawCounterexample{"surjectivity", "{0,1}", "", 0};
  }
  return report;
}

}  // namespace rbd
