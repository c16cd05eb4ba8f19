#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rbd/diagram.hpp"

namespace rbd {

class NotBuiltUponError : public std::runtime_error {
 public:
  explicit NotBuiltUponError(ComponentId c)
      : std::runtime_error("diagram uses component A" + std::to_string(c.index()) +
                           " outside the generating set") {}
};

class StoreMismatchError : public std::runtime_error {
 public:
  StoreMismatchError() : std::runtime_error("canonical forms belong to different node stores") {}
};

class StoreCapacityError : public std::runtime_error {
 public:
  explicit StoreCapacityError(std::size_t cap)
      : std::runtime_error("node store capacity " + std::to_string(cap) + " exceeded") {}
};

class NodeStore;

// Handle to a reduced ordered decision node inside one NodeStore. Two forms
// from the same store compute the same Boolean function iff their roots are
// the identical node.
class CanonicalForm {
 public:
  CanonicalForm() = default;

  const NodeStore* store() const { return store_; }
  std::uint32_t root() const { return root_; }

  bool is_zero() const { return root_ == 0; }
  bool is_one() const { return root_ == 1; }

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.store_ == b.store_ && a.root_ == b.root_;
  }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) { return !(a == b); }

 private:
  friend class NodeStore;
  CanonicalForm(const NodeStore* store, std::uint32_t root) : store_(store), root_(root) {}

  const NodeStore* store_ = nullptr;
  std::uint32_t root_ = 0;
};

inline constexpr std::size_t kDefaultStoreCapacity = std::size_t{1} << 22;

// Hash-consed store of decision nodes over a fixed variable order (the
// generating-set order). Refs 0 and 1 are the ZERO and ONE terminals.
// Construction (canonicalize, meet, join, complement) needs exclusive
// access; a store that is no longer growing may be read concurrently.
class NodeStore {
 public:
  using Ref = std::uint32_t;
  static constexpr Ref kZero = 0;
  static constexpr Ref kOne = 1;

  explicit NodeStore(GeneratingSet order, std::size_t capacity = kDefaultStoreCapacity)
      : order_(std::move(order)), capacity_(capacity) {
    if (capacity_ > kDefaultStoreCapacity)
      throw std::invalid_argument("node store capacity cannot exceed 2^22");
    const int terminal_level = static_cast<int>(order_.size());
    nodes_.push_back({terminal_level, kZero, kZero});
    nodes_.push_back({terminal_level, kOne, kOne});
  }

  NodeStore(const NodeStore&) = delete;
  NodeStore& operator=(const NodeStore&) = delete;

  const GeneratingSet& order() const { return order_; }
  std::size_t node_count() const { return nodes_.size(); }

  CanonicalForm zero() const { return {this, kZero}; }
  CanonicalForm one() const { return {this, kOne}; }

  int level_of(Ref r) const { return nodes_[r].level; }
  Ref low_of(Ref r) const { return nodes_[r].low; }
  Ref high_of(Ref r) const { return nodes_[r].high; }
  bool is_terminal(Ref r) const { return r < 2; }

  // Reduced, hash-consed node creation.
  Ref make(int level, Ref low, Ref high) {
    if (low == high) return low;
    const std::uint64_t key = pack(static_cast<std::uint32_t>(level), low, high);
    auto it = unique_.find(key);
    if (it != unique_.end()) return it->second;
    if (nodes_.size() >= capacity_) throw StoreCapacityError(capacity_);
    const Ref r = static_cast<Ref>(nodes_.size());
    nodes_.push_back({level, low, high});
    unique_.emplace(key, r);
    return r;
  }

  CanonicalForm canonicalize(const Diagram& d) {
    for (const auto& c : components_of(d))
      if (!order_.contains(c)) throw NotBuiltUponError(c);
    return {this, build(d)};
  }

  CanonicalForm meet(const CanonicalForm& a, const CanonicalForm& b) {
    check_owned(a);
    check_owned(b);
    return {this, apply(Op::meet, a.root(), b.root())};
  }

  CanonicalForm join(const CanonicalForm& a, const CanonicalForm& b) {
    check_owned(a);
    check_owned(b);
    return {this, apply(Op::join, a.root(), b.root())};
  }

  CanonicalForm complement(const CanonicalForm& a) {
    check_owned(a);
    return {this, negate(a.root())};
  }

  // Builds the canonical form of an arbitrary truth table over the first
  // var_count variables of the order (little-endian entry numbering).
  CanonicalForm from_truth_table(const std::vector<bool>& table, int var_count) {
    if (table.size() != (std::size_t{1} << var_count))
      throw std::invalid_argument("truth table length must be 2^var_count");
    if (static_cast<std::size_t>(var_count) > order_.size())
      throw std::invalid_argument("var_count exceeds the store's variable order");
    return {this, build_from_table(table, 0, 0, var_count)};
  }

  int eval(const CanonicalForm& f, const StateAssignment& s) const {
    check_owned(f);
    Ref r = f.root();
    while (!is_terminal(r)) {
      const ComponentId c = order_.at(static_cast<std::size_t>(nodes_[r].level));
      auto bit = s.get(c);
      if (!bit) throw MissingComponentError(c);
      r = *bit ? nodes_[r].high : nodes_[r].low;
    }
    return r == kOne ? 1 : 0;
  }

  // Duplicate (level, low, high) triples or nodes with low == high would
  // break canonicity; exposed so tests can scan for them.
  bool is_reduced_and_shared() const {
    std::map<std::tuple<int, Ref, Ref>, int> seen;
    for (std::size_t i = 2; i < nodes_.size(); ++i) {
      const auto& n = nodes_[i];
      if (n.low == n.high) return false;
      if (++seen[{n.level, n.low, n.high}] > 1) return false;
    }
    return true;
  }

 private:
  struct Node {
    int level;  // position in order_; order_.size() for terminals
    Ref low;
    Ref high;
  };

  enum class Op : std::uint8_t { meet = 0, join = 1 };

  void check_owned(const CanonicalForm& f) const {
    if (f.store() != this) throw StoreMismatchError();
  }

  static std::uint64_t pack(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    // level < 2^20, refs < 2^22 under the default capacity
    return (std::uint64_t{a} << 44) | (std::uint64_t{b} << 22) | c;
  }

  Ref build(const Diagram& d) {
    switch (d.kind()) {
      case DiagramKind::one:
        return kOne;
      case DiagramKind::zero:
        return kZero;
      case DiagramKind::elementary: {
        const int level = static_cast<int>(*order_.position(d.component()));
        return make(level, kZero, kOne);
      }
      case DiagramKind::complement:
        return negate(build(d.left()));
      case DiagramKind::series:
        return apply(Op::meet, build(d.left()), build(d.right()));
      case DiagramKind::parallel:
        return apply(Op::join, build(d.left()), build(d.right()));
    }
    return kZero;
  }

  Ref apply(Op op, Ref a, Ref b) {
    if (a == b) return a;
    if (op == Op::meet) {
      if (a == kZero || b == kZero) return kZero;
      if (a == kOne) return b;
      if (b == kOne) return a;
    } else {
      if (a == kOne || b == kOne) return kOne;
      if (a == kZero) return b;
      if (b == kZero) return a;
    }
    if (a > b) std::swap(a, b);  // both ops commute
    const std::uint64_t key = (std::uint64_t{static_cast<std::uint8_t>(op)} << 60) | pack(0, a, b);
    auto it = apply_cache_.find(key);
    if (it != apply_cache_.end()) return it->second;

    const int la = nodes_[a].level;
    const int lb = nodes_[b].level;
    const int level = std::min(la, lb);
    const Ref a_low = la == level ? nodes_[a].low : a;
    const Ref a_high = la == level ? nodes_[a].high : a;
    const Ref b_low = lb == level ? nodes_[b].low : b;
    const Ref b_high = lb == level ? nodes_[b].high : b;
    const Ref r = make(level, apply(op, a_low, b_low), apply(op, a_high, b_high));
    apply_cache_.emplace(key, r);
    return r;
  }

  Ref negate(Ref a) {
    if (a == kZero) return kOne;
    if (a == kOne) return kZero;
    auto it = negate_cache_.find(a);
    if (it != negate_cache_.end()) return it->second;
    const Ref r = make(nodes_[a].level, negate(nodes_[a].low), negate(nodes_[a].high));
    negate_cache_.emplace(a, r);
    return r;
  }

  Ref build_from_table(const std::vector<bool>& table, int level, std::uint64_t offset, int var_count) {
    if (level == var_count) return table[offset] ? kOne : kZero;
    // bit `level` of the entry index selects the branch
    const Ref low = build_from_table(table, level + 1, offset, var_count);
    const Ref high = build_from_table(table, level + 1, offset + (std::uint64_t{1} << level), var_count);
    return make(level, low, high);
  }

  GeneratingSet order_;
  std::size_t capacity_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, Ref> unique_;
  std::unordered_map<std::uint64_t, Ref> apply_cache_;
  std::unordered_map<Ref, Ref> negate_cache_;
};

inline CanonicalForm canonicalize(const Diagram& d, NodeStore& store) { return store.canonicalize(d); }

// Decides the Boolean-term equality of two diagrams over g.
inline bool equals(const Diagram& d1, const Diagram& d2, const GeneratingSet& g) {
  NodeStore store(g);
  return store.canonicalize(d1) == store.canonicalize(d2);
}

class OutOfRangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClassEnumeration {
  std::uint64_t count = 0;
  // One truth table per equivalence class, in function-number order;
  // filled only when representatives were requested.
  std::vector<std::vector<bool>> tables;
};

// Constructively verifies that there are exactly 2^(2^n) classes of mutually
// nonequal diagrams over n components: every Boolean function is built and
// canonicalized, and all roots must be distinct.
inline ClassEnumeration enumerate_classes(int n, bool list_representatives = false) {
  if (n < 1 || n > 4) throw OutOfRangeError("enumerate_classes supports 1 <= n <= 4");
  NodeStore store(GeneratingSet::first_n(n));
  const std::uint64_t table_size = std::uint64_t{1} << n;
  const std::uint64_t function_count = std::uint64_t{1} << table_size;
  std::set<std::uint32_t> roots;
  ClassEnumeration result;
  for (std::uint64_t f = 0; f < function_count; ++f) {
    std::vector<bool> table(table_size);
    for (std::uint64_t k = 0; k < table_size; ++k) table[k] = (f >> k) & 1u;
    const CanonicalForm form = store.from_truth_table(table, n);
    if (!roots.insert(form.root()).second)
      throw std::logic_error("two distinct Boolean functions canonicalized to the same root");
    if (list_representatives) result.tables.push_back(std::move(table));
  }
  result.count = static_cast<std::uint64_t>(roots.size());
  return result;
}

// A diagram in full disjunctive normal form over the store's generating set
// whose canonical form has the identical root as c.
inline Diagram representative(const CanonicalForm& c) {
  const NodeStore& store = *c.store();
  const GeneratingSet& g = store.order();
  if (c.is_one()) return Diagram::one();
  if (c.is_zero()) return Diagram::zero();
  std::optional<Diagram> dnf;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << g.size()); ++k) {
    const StateAssignment s = StateAssignment::from_index(g, k);
    if (store.eval(c, s) != 1) continue;
    std::optional<Diagram> minterm;
    for (std::size_t i = 0; i < g.size(); ++i) {
      Diagram lit = Diagram::elementary(g.at(i));
      if (!((k >> i) & 1u)) lit = Diagram::complement(std::move(lit));
      minterm = minterm ? Diagram::series(std::move(*minterm), std::move(lit)) : std::move(lit);
    }
    if (!minterm) return Diagram::one();  // n == 0, constant true
    dnf = dnf ? Diagram::parallel(std::move(*dnf), std::move(*minterm)) : std::move(*minterm);
  }
  return dnf ? *dnf : Diagram::zero();
}

// Text adjacency list: `root <id>` then `<id> <component-index> <low> <high>`
// per internal node in depth-first discovery order (low child first).
// Terminals are ids 0 and 1.
inline std::string export_adjacency(const CanonicalForm& c) {
  const NodeStore& store = *c.store();
  std::map<std::uint32_t, int> ids{{NodeStore::kZero, 0}, {NodeStore::kOne, 1}};
  std::map<int, std::string> lines;  // keyed by id so output follows discovery order
  int next_id = 2;
  auto visit = [&](auto&& self, std::uint32_t r) -> int {
    auto it = ids.find(r);
    if (it != ids.end()) return it->second;
    const int id = next_id++;
    ids.emplace(r, id);
    const int low = self(self, store.low_of(r));
    const int high = self(self, store.high_of(r));
    lines[id] = std::to_string(id) + ' ' +
                std::to_string(store.order().at(static_cast<std::size_t>(store.level_of(r))).index()) +
                ' ' + std::to_string(low) + ' ' + std::to_string(high);
    return id;
  };
  const int root_id = visit(visit, c.root());
  std::string out = "root " + std::to_string(root_id) + "\n";
  for (const auto& [id, line] : lines) out += line + "\n";
  return out;
}

}  // namespace rbd
