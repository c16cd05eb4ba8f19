// rbd — reliability block diagram calculator.
//
// Exit codes: 0 success, 1 domain failure (law violation, NOT EQUAL),
// 2 usage or parse error, 3 resource cap exceeded.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rbd/rbd.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

// Shortest round-trip decimal for a binary64 value.
std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

rbd::Diagram parse_or_exit(const std::string& text) {
  try {
    return rbd::parse(text);
  } catch (const rbd::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(kExitUsage);
  }
}

// Distinct components of the expression in ascending index order.
rbd::GeneratingSet generating_set_of(const rbd::Diagram& d) {
  const auto comps = rbd::components_of(d);
  return rbd::GeneratingSet(std::vector<rbd::ComponentId>(comps.begin(), comps.end()));
}

rbd::StateAssignment state_from_bits(const rbd::GeneratingSet& g, const std::string& bits) {
  if (bits.size() != g.size()) {
    std::cerr << "error: state string has " << bits.size() << " bits, expression has "
              << g.size() << " distinct components\n";
    std::exit(kExitUsage);
  }
  rbd::StateAssignment s;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      std::cerr << "error: state string must contain only 0 and 1\n";
      std::exit(kExitUsage);
    }
    s.set(g.at(i), bits[i] == '1');
  }
  return s;
}

rbd::ReliabilityAssignment load_probs(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open probability file " << path << "\n";
    std::exit(kExitUsage);
  }
  try {
    return rbd::parse_reliability_file(in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    std::exit(kExitUsage);
  }
}

int run_rel(const std::string& expr, const std::string& probs_path, const std::string& method,
            std::uint64_t samples, std::uint64_t seed) {
  const rbd::Diagram d = parse_or_exit(expr);
  const rbd::GeneratingSet g = generating_set_of(d);
  const rbd::ReliabilityAssignment p = load_probs(probs_path);
  if (method == "exact") {
    std::cout << format_double(rbd::reliability_exact(d, g, p)) << "\n";
  } else if (method == "brute") {
    std::cout << format_double(rbd::reliability_bruteforce(d, g, p)) << "\n";
  } else if (method == "mc") {
    const auto report = rbd::reliability_montecarlo(d, g, p, samples, seed);
    std::cout << "estimate=" << format_double(report.estimate)
              << " standard_error=" << format_double(report.standard_error)
              << " samples=" << report.samples << " seed=" << report.seed << "\n";
  } else {
    std::cerr << "error: unknown method '" << method << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_laws(const std::string& target, std::uint64_t trials, std::uint64_t seed, int n) {
  std::vector<rbd::LawReport> reports;
  if (target == "diagrams") {
    reports = rbd::check_diagram_algebra(trials, seed, n);
  } else if (target == "reliability") {
    reports = rbd::check_reliability_algebra(trials, seed, n);
  } else if (target == "phi") {
    reports.push_back(rbd::check_structure_homomorphism(trials, seed, n));
  } else {
    std::cerr << "error: unknown laws target '" << target << "'\n";
    return kExitUsage;
  }
  bool failed = false;
  for (const auto& r : reports) {
    std::cout << rbd::render_report(r) << "\n";
    failed |= r.failures > 0;
  }
  return failed ? kExitDomainFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reliability block diagram calculator"};
  app.require_subcommand(1);
  app.footer(
      "Expression syntax: components A1, A2, ...; constants 1 and 0; ~ complement,\n"
      "* series, + parallel (aliases & and |); series binds tighter than parallel.\n"
      "State bit-strings and probability files address components in ascending\n"
      "index order; truth tables are little-endian in that order.");

  std::string expr, expr2, bits, probs_path, method = "exact", target;
  std::uint64_t samples = 100000, seed = 0, trials = 500;
  int n = 0, components = 4;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression under a component state");
  eval->add_option("expr", expr)->required();
  eval->add_option("state", bits, "one bit per distinct component, ascending index")->required();

  auto* table = app.add_subcommand("table", "Print the truth table of an expression");
  table->add_option("expr", expr)->required();

  auto* equal = app.add_subcommand("equal", "Decide whether two expressions are equal as Boolean terms");
  equal->add_option("expr1", expr)->required();
  equal->add_option("expr2", expr2)->required();

  auto* canon = app.add_subcommand("canon", "Print the canonical form as an adjacency list");
  canon->add_option("expr", expr)->required();

  auto* rel = app.add_subcommand("rel", "Compute the reliability of an expression");
  rel->add_option("expr", expr)->required();
  rel->add_option("--probs", probs_path, "probability file: one `A<k> = <p>` per line")->required();
  rel->add_option("--method", method, "exact | brute | mc")->capture_default_str();
  rel->add_option("--samples", samples)->capture_default_str();
  rel->add_option("--seed", seed)->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo reliability (rel --method mc)");
  simulate->add_option("expr", expr)->required();
  simulate->add_option("--probs", probs_path)->required();
  simulate->add_option("--samples", samples)->capture_default_str();
  simulate->add_option("--seed", seed)->capture_default_str();

  auto* poly = app.add_subcommand("poly", "Print the reliability polynomial");
  poly->add_option("expr", expr)->required();

  auto* enum_cmd = app.add_subcommand("enum", "Count the equivalence classes over n components");
  enum_cmd->add_option("n", n, "1 <= n <= 4")->required();

  auto* laws = app.add_subcommand("laws", "Check the Boolean-algebra laws");
  laws->add_option("target", target, "diagrams | reliability | phi")->required();
  laws->add_option("--trials", trials)->capture_default_str();
  laws->add_option("--seed", seed)->capture_default_str();
  laws->add_option("--components", components)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      const rbd::Diagram d = parse_or_exit(expr);
      const rbd::GeneratingSet g = generating_set_of(d);
      std::cout << rbd::evaluate(d, state_from_bits(g, bits)) << "\n";
      return kExitOk;
    }
    if (table->parsed()) {
      const rbd::Diagram d = parse_or_exit(expr);
      const rbd::GeneratingSet g = generating_set_of(d);
      for (bool bit : rbd::truth_table(d, g, 10)) std::cout << (bit ? '1' : '0');
      std::cout << "\n";
      return kExitOk;
    }
    if (equal->parsed()) {
      const rbd::Diagram d1 = parse_or_exit(expr);
      const rbd::Diagram d2 = parse_or_exit(expr2);
      auto comps = rbd::components_of(d1);
      const auto comps2 = rbd::components_of(d2);
      comps.insert(comps2.begin(), comps2.end());
      const rbd::GeneratingSet g(std::vector<rbd::ComponentId>(comps.begin(), comps.end()));
      const auto t1 = rbd::truth_table(d1, g);
      const auto t2 = rbd::truth_table(d2, g);
      if (rbd::equals(d1, d2, g)) {
        std::cout << "EQUAL\n";
        return kExitOk;
      }
      for (std::size_t k = 0; k < t1.size(); ++k) {
        if (t1[k] == t2[k]) continue;
        std::string witness;
        for (std::size_t i = 0; i < g.size(); ++i) witness += ((k >> i) & 1u) ? '1' : '0';
        std::cout << "NOT EQUAL witness=" << witness << "\n";
        break;
      }
      return kExitDomainFailure;
    }
    if (canon->parsed()) {
      const rbd::Diagram d = parse_or_exit(expr);
      rbd::NodeStore store(generating_set_of(d));
      std::cout << rbd::export_adjacency(store.canonicalize(d));
      return kExitOk;
    }
    if (rel->parsed()) return run_rel(expr, probs_path, method, samples, seed);
    if (simulate->parsed()) return run_rel(expr, probs_path, "mc", samples, seed);
    if (poly->parsed()) {
      const rbd::Diagram d = parse_or_exit(expr);
      std::cout << rbd::reliability_polynomial(d, generating_set_of(d)).str() << "\n";
      return kExitOk;
    }
    if (enum_cmd->parsed()) {
      std::cout << rbd::enumerate_classes(n).count << "\n";
      return kExitOk;
    }
    if (laws->parsed()) return run_laws(target, trials, seed, components);
  } catch (const rbd::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const rbd::StoreCapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const rbd::OutOfRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
