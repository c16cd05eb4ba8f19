#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rbd/canonical.hpp"
#include "rbd/diagram.hpp"

namespace rbd {

// Component functioning probabilities r_1,...,r_n; each in [0,1].
class ReliabilityAssignment {
 public:
  ReliabilityAssignment() = default;

  void set(ComponentId c, double p) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("probability for A" + std::to_string(c.index()) +
                                  " must lie in [0,1]");
    probs_[c.index()] = p;
  }

  double get(ComponentId c) const {
    auto it = probs_.find(c.index());
    if (it == probs_.end()) throw MissingComponentError(c);
    return it->second;
  }

  bool has(ComponentId c) const { return probs_.count(c.index()) > 0; }
  std::size_t size() const { return probs_.size(); }

 private:
  std::map<int, double> probs_;
};

// File format: one `A<k> = <decimal in [0,1]>` per line, `#` starts a
// comment, blank lines ignored, duplicate keys rejected.
inline ReliabilityAssignment parse_reliability_file(std::istream& in) {
  ReliabilityAssignment result;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key, eq;
    if (!(ls >> key)) continue;  // blank
    double p;
    if (key.size() < 2 || key[0] != 'A' || !(ls >> eq) || eq != "=" || !(ls >> p))
      throw std::runtime_error("bad probability line " + std::to_string(lineno));
    std::string rest;
    if (ls >> rest) throw std::runtime_error("trailing text on line " + std::to_string(lineno));
    int index;
    try {
      std::size_t used = 0;
      index = std::stoi(key.substr(1), &used);
      if (used != key.size() - 1) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw std::runtime_error("bad component name '" + key + "' on line " + std::to_string(lineno));
    }
    const ComponentId c(index);
    if (result.has(c))
      throw std::runtime_error("duplicate key " + key + " on line " + std::to_string(lineno));
    result.set(c, p);
  }
  return result;
}

inline ReliabilityAssignment parse_reliability_text(const std::string& text) {
  std::istringstream in(text);
  return parse_reliability_file(in);
}

// Exact rational, normalized with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    return is_integer() ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
};

// Expanded multilinear polynomial in the positive reliability literals r_i.
// Monomials are index-sorted component sets; equal diagrams always expand to
// the identical polynomial.
class ReliabilityPolynomial {
 public:
  using Monomial = std::vector<int>;  // strictly increasing component indices

  static ReliabilityPolynomial constant(Rational c) {
    ReliabilityPolynomial p;
    if (!c.is_zero()) p.terms_[{}] = c;
    return p;
  }

  static ReliabilityPolynomial variable(int index) {
    ReliabilityPolynomial p;
    p.terms_[{index}] = Rational(1);
    return p;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool is_multilinear() const {
    for (const auto& [mono, coeff] : terms_) {
      (void)coeff;
      for (std::size_t i = 1; i < mono.size(); ++i)
        if (mono[i] <= mono[i - 1]) return false;
    }
    return true;
  }

  friend ReliabilityPolynomial operator+(const ReliabilityPolynomial& a, const ReliabilityPolynomial& b) {
    ReliabilityPolynomial r = a;
    for (const auto& [mono, coeff] : b.terms_) r.add_term(mono, coeff);
    return r;
  }

  friend ReliabilityPolynomial operator-(const ReliabilityPolynomial& a, const ReliabilityPolynomial& b) {
    ReliabilityPolynomial r = a;
    for (const auto& [mono, coeff] : b.terms_) r.add_term(mono, Rational(0) - coeff);
    return r;
  }

  // Monomial product merges index sets; repeated indices collapse (r_i is
  // idempotent over {0,1}-valued structure functions).
  friend ReliabilityPolynomial operator*(const ReliabilityPolynomial& a, const ReliabilityPolynomial& b) {
    ReliabilityPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial merged;
        std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged));
        r.add_term(merged, ca * cb);
      }
    return r;
  }

  friend bool operator==(const ReliabilityPolynomial& a, const ReliabilityPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  double evaluate(const ReliabilityAssignment& p) const {
    double total = 0.0;
    for (const auto& [mono, coeff] : terms_) {
      double term = coeff.to_double();
      for (int index : mono) term *= p.get(ComponentId(index));
      total += term;
    }
    return total;
  }

  // Graded-lex term order: constant first, then by degree, then by indices.
  // Coefficient 1 is omitted on non-constant monomials; non-integer
  // coefficients print as p/q.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
      return a.first < b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : ordered) {
      const bool negative = coeff.num < 0;
      Rational mag = negative ? Rational(0) - coeff : coeff;
      if (first) {
        if (negative) out += "-";
        first = false;
      } else {
        out += negative ? " - " : " + ";
      }
      std::string body;
      if (mono.empty() || !(mag == Rational(1))) body = mag.str();
      for (int index : mono) {
        if (!body.empty()) body += "*";
        body += "r" + std::to_string(index);
      }
      out += body;
    }
    return out;
  }

 private:
  void add_term(const Monomial& mono, Rational coeff) {
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      if (!coeff.is_zero()) terms_.emplace(mono, coeff);
      return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<Monomial, Rational> terms_;
};

namespace detail {

inline void require_probs(const Diagram& d, const ReliabilityAssignment& p) {
  for (const auto& c : components_of(d))
    if (!p.has(c)) throw MissingComponentError(c);
}

}  // namespace detail

// Exact reliability as the expectation of the structure function over all
// 2^|g| independent component states. The independent oracle for the
// Shannon-decomposition path.
inline double reliability_bruteforce(const Diagram& d, const GeneratingSet& g,
                                     const ReliabilityAssignment& p) {
  for (const auto& c : components_of(d))
    if (!g.contains(c)) throw NotBuiltUponError(c);
  if (g.size() > 20)
    throw CapExceededError("brute-force reliability capped at 20 components");
  detail::require_probs(d, p);
  double total = 0.0;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << g.size()); ++k) {
    const StateAssignment s = StateAssignment::from_index(g, k);
    if (evaluate(d, s) != 1) continue;
    double weight = 1.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double pi = p.get(g.at(i));
      weight *= ((k >> i) & 1u) ? pi : 1.0 - pi;
    }
    total += weight;
  }
  return total;
}

// Shannon decomposition over a canonical form, memoized per node:
// r(node) = p_i * r(high) + (1 - p_i) * r(low).
inline double form_reliability(const CanonicalForm& c, const ReliabilityAssignment& p) {
  const NodeStore& store = *c.store();
  std::unordered_map<std::uint32_t, double> memo;
  auto rec = [&](auto&& self, std::uint32_t r) -> double {
    if (r == NodeStore::kZero) return 0.0;
    if (r == NodeStore::kOne) return 1.0;
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    const double pi = p.get(store.order().at(static_cast<std::size_t>(store.level_of(r))));
    const double value = pi * self(self, store.high_of(r)) + (1.0 - pi) * self(self, store.low_of(r));
    memo.emplace(r, value);
    return value;
  };
  return rec(rec, c.root());
}

// Exact reliability via the canonical form. Correct for repeated component
// occurrences, where naive series/parallel product formulas are not.
inline double reliability_exact(const Diagram& d, const GeneratingSet& g,
                                const ReliabilityAssignment& p) {
  detail::require_probs(d, p);
  NodeStore store(g);
  return form_reliability(store.canonicalize(d), p);
}

inline ReliabilityPolynomial form_polynomial(const CanonicalForm& c) {
  const NodeStore& store = *c.store();
  std::unordered_map<std::uint32_t, ReliabilityPolynomial> memo;
  auto rec = [&](auto&& self, std::uint32_t r) -> const ReliabilityPolynomial& {
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    ReliabilityPolynomial result;
    if (r == NodeStore::kOne) {
      result = ReliabilityPolynomial::constant(Rational(1));
    } else if (r != NodeStore::kZero) {
      const int index = store.order().at(static_cast<std::size_t>(store.level_of(r))).index();
      const auto ri = ReliabilityPolynomial::variable(index);
      const auto& high = self(self, store.high_of(r));
      const auto& low = self(self, store.low_of(r));
      result = low + ri * (high - low);
    }
    return memo.emplace(r, std::move(result)).first->second;
  };
  return rec(rec, c.root());
}

// The reliability term of d's equivalence class as a multilinear polynomial
// in r_1,...,r_n; equal diagrams yield the identical polynomial.
inline ReliabilityPolynomial reliability_polynomial(const Diagram& d, const GeneratingSet& g) {
  NodeStore store(g);
  return form_polynomial(store.canonicalize(d));
}

struct MonteCarloReport {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Seeded simulation: each sample draws one uniform double per component of g
// in generating-set order from a single mt19937_64 stream. Bit-identical
// reports for identical (d, g, p, samples, seed).
inline MonteCarloReport reliability_montecarlo(const Diagram& d, const GeneratingSet& g,
                                               const ReliabilityAssignment& p,
                                               std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  detail::require_probs(d, p);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uint64_t functioning = 0;
  for (std::uint64_t trial = 0; trial < samples; ++trial) {
    StateAssignment s;
    for (std::size_t i = 0; i < g.size(); ++i) s.set(g.at(i), unit(rng) < p.get(g.at(i)));
    functioning += static_cast<std::uint64_t>(evaluate(d, s));
  }
  MonteCarloReport report;
  report.samples = samples;
  report.seed = seed;
  report.estimate = static_cast<double>(functioning) / static_cast<double>(samples);
  report.standard_error =
      std::sqrt(report.estimate * (1.0 - report.estimate) / static_cast<double>(samples));
  return report;
}

}  // namespace rbd
