#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbd {

// Identifies an elementary component A_k. Indices are 1-based.
class ComponentId {
 public:
  explicit ComponentId(int index) : index_(index) {
    if (index < 1) throw std::invalid_argument("component index must be >= 1");
  }

  int index() const { return index_; }

  friend bool operator==(ComponentId a, ComponentId b) { return a.index_ == b.index_; }
  friend bool operator!=(ComponentId a, ComponentId b) { return a.index_ != b.index_; }
  friend bool operator<(ComponentId a, ComponentId b) { return a.index_ < b.index_; }

 private:
  int index_;
};

enum class DiagramKind { elementary, one, zero, series, parallel, complement };

// An immutable block-diagram term: elementary components and the constants
// combined by series, parallel and complement connectives. Copies share
// structure; a Diagram is safe to pass between threads.
class Diagram {
 public:
  static Diagram elementary(ComponentId c) { return Diagram(std::make_shared<Node>(Node{DiagramKind::elementary, c.index(), nullptr, nullptr})); }
  static Diagram elementary(int index) { return elementary(ComponentId(index)); }
  static Diagram one() { return Diagram(std::make_shared<Node>(Node{DiagramKind::one, 0, nullptr, nullptr})); }
  static Diagram zero() { return Diagram(std::make_shared<Node>(Node{DiagramKind::zero, 0, nullptr, nullptr})); }
  static Diagram series(Diagram lhs, Diagram rhs) {
    return Diagram(std::make_shared<Node>(Node{DiagramKind::series, 0, std::move(lhs.node_), std::move(rhs.node_)}));
  }
  static Diagram parallel(Diagram lhs, Diagram rhs) {
    return Diagram(std::make_shared<Node>(Node{DiagramKind::parallel, 0, std::move(lhs.node_), std::move(rhs.node_)}));
  }
  static Diagram complement(Diagram d) {
    return Diagram(std::make_shared<Node>(Node{DiagramKind::complement, 0, std::move(d.node_), nullptr}));
  }

  DiagramKind kind() const { return node_->kind; }

  ComponentId component() const {
    if (kind() != DiagramKind::elementary) throw std::logic_error("component() on non-elementary diagram");
    return ComponentId(node_->index);
  }

  // Left operand of a series/parallel node, or the operand of a complement.
  Diagram left() const {
    if (!node_->lhs) throw std::logic_error("left() on leaf diagram");
    return Diagram(node_->lhs);
  }

  Diagram right() const {
    if (!node_->rhs) throw std::logic_error("right() on non-binary diagram");
    return Diagram(node_->rhs);
  }

 private:
  struct Node {
    DiagramKind kind;
    int index;  // elementary only
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Term-tree equality, not Boolean equality (~~A1 differs from A1 here).
inline bool structurally_equal(const Diagram& a, const Diagram& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case DiagramKind::one:
    case DiagramKind::zero:
      return true;
    case DiagramKind::elementary:
      return a.component() == b.component();
    case DiagramKind::complement:
      return structurally_equal(a.left(), b.left());
    case DiagramKind::series:
    case DiagramKind::parallel:
      return structurally_equal(a.left(), b.left()) && structurally_equal(a.right(), b.right());
  }
  return false;
}

inline Diagram operator*(Diagram a, Diagram b) { return Diagram::series(std::move(a), std::move(b)); }
inline Diagram operator+(Diagram a, Diagram b) { return Diagram::parallel(std::move(a), std::move(b)); }
inline Diagram operator~(Diagram a) { return Diagram::complement(std::move(a)); }

// An ordered list of pairwise-distinct components. The order doubles as the
// canonical variable order downstream.
class GeneratingSet {
 public:
  GeneratingSet() = default;

  explicit GeneratingSet(std::vector<ComponentId> components) : components_(std::move(components)) {
    std::set<int> seen;
    for (const auto& c : components_) {
      if (!seen.insert(c.index()).second)
        throw std::invalid_argument("duplicate component A" + std::to_string(c.index()) + " in generating set");
    }
  }

  // {A_1, ..., A_n} in index order.
  static GeneratingSet first_n(int n) {
    std::vector<ComponentId> cs;
    cs.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 1; i <= n; ++i) cs.emplace_back(i);
    return GeneratingSet(std::move(cs));
  }

  std::size_t size() const { return components_.size(); }
  const std::vector<ComponentId>& components() const { return components_; }
  ComponentId at(std::size_t pos) const { return components_.at(pos); }

  bool contains(ComponentId c) const {
    return std::find(components_.begin(), components_.end(), c) != components_.end();
  }

  std::optional<std::size_t> position(ComponentId c) const {
    auto it = std::find(components_.begin(), components_.end(), c);
    if (it == components_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - components_.begin());
  }

 private:
  std::vector<ComponentId> components_;
};

class MissingComponentError : public std::runtime_error {
 public:
  explicit MissingComponentError(ComponentId c)
      : std::runtime_error("no state or probability assigned to component A" + std::to_string(c.index())) {}
};

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Total map from components to functioning (1) / failed (0) bits. Extra
// components beyond those a diagram mentions are allowed and ignored.
class StateAssignment {
 public:
  StateAssignment() = default;

  void set(ComponentId c, bool functioning) { states_[c.index()] = functioning; }

  std::optional<bool> get(ComponentId c) const {
    auto it = states_.find(c.index());
    if (it == states_.end()) return std::nullopt;
    return it->second;
  }

  // State number k of g, bit i of k giving the state of g's i-th component
  // (little-endian: bit 0 is the first component).
  static StateAssignment from_index(const GeneratingSet& g, std::uint64_t k) {
    StateAssignment s;
    for (std::size_t i = 0; i < g.size(); ++i) s.set(g.at(i), (k >> i) & 1u);
    return s;
  }

 private:
  std::map<int, bool> states_;
};

inline void collect_components(const Diagram& d, std::set<ComponentId>& out) {
  switch (d.kind()) {
    case DiagramKind::elementary:
      out.insert(d.component());
      return;
    case DiagramKind::one:
    case DiagramKind::zero:
      return;
    case DiagramKind::complement:
      collect_components(d.left(), out);
      return;
    case DiagramKind::series:
    case DiagramKind::parallel:
      collect_components(d.left(), out);
      collect_components(d.right(), out);
      return;
  }
}

inline std::set<ComponentId> components_of(const Diagram& d) {
  std::set<ComponentId> out;
  collect_components(d, out);
  return out;
}

inline bool built_upon(const Diagram& d, const GeneratingSet& g) {
  for (const auto& c : components_of(d))
    if (!g.contains(c)) return false;
  return true;
}

// The structure function: 1 iff d functions under s. Series is min, parallel
// is max, complement is 1-x; an elementary diagram takes its component state.
inline int evaluate(const Diagram& d, const StateAssignment& s) {
  switch (d.kind()) {
    case DiagramKind::one:
      return 1;
    case DiagramKind::zero:
      return 0;
    case DiagramKind::elementary: {
      auto bit = s.get(d.component());
      if (!bit) throw MissingComponentError(d.component());
      return *bit ? 1 : 0;
    }
    case DiagramKind::complement:
      return 1 - evaluate(d.left(), s);
    case DiagramKind::series:
      return std::min(evaluate(d.left(), s), evaluate(d.right(), s));
    case DiagramKind::parallel:
      return std::max(evaluate(d.left(), s), evaluate(d.right(), s));
  }
  return 0;
}

inline constexpr std::size_t kDefaultTruthTableCap = 20;

// Entry k is evaluate(d, state k of g), states numbered little-endian in the
// generating-set order.
inline std::vector<bool> truth_table(const Diagram& d, const GeneratingSet& g,
                                     std::size_t cap = kDefaultTruthTableCap) {
  if (g.size() > cap)
    throw CapExceededError("truth table over " + std::to_string(g.size()) +
                           " components exceeds cap " + std::to_string(cap));
  std::vector<bool> table;
  table.reserve(std::size_t{1} << g.size());
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << g.size()); ++k)
    table.push_back(evaluate(d, StateAssignment::from_index(g, k)) == 1);
  return table;
}

}  // namespace rbd
