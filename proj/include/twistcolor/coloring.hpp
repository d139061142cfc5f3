#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "twistcolor/core.hpp"
#include "twistcolor/diagram.hpp"
#include "twistcolor/quandle.hpp"
#include "twistcolor/structures.hpp"

namespace twistcolor {

/// The tables a coloring must respect at each node kind: R at positive
/// crossings (R^-1 at negative ones), V at virtual crossings, T at bars.
struct ColoringRules {
  std::size_t carrier = 0;
  PairMap positive;
  PairMap virtual_crossing;
  std::optional<ElemMap> bar;

  static ColoringRules from(const VTStructure& s);
  /// No bar rule; diagrams with bars are rejected.
  static ColoringRules from(const VStructuredBiquandle& s);
  /// First-coordinate rules of the standard twisted product:
  /// (x1,x2) -> (x2, x1*x2), virtual crossings swap.
  static ColoringRules upper(const FiniteQuandle& q);
  /// Second-coordinate rules: (x1,x2) -> (x2*x1, x1), virtual crossings swap.
  static ColoringRules lower(const FiniteQuandle& q);
};

struct Coloring {
  std::vector<Elem> edge_colors;  // indexed by EdgeId
  std::vector<Elem> loop_colors;  // one per free loop
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultBruteForceCap = 10'000'000;

struct ColoringOptions {
  bool emit = false;
  /// Count against a structure whose axioms fail.
  bool force = false;
  /// Maximum number of search assignments before a resource error.
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct ColoringResult {
  BigInt count;
  std::vector<Coloring> colorings;  // filled when emit is set
};

/// Backtracking search with propagation over the node relations of a
/// diagram or tangle. Edges can be pre-fixed.
class ColoringSolver {
 public:
  ColoringSolver(const DiagramGraph& graph, const ColoringRules& rules);

  using Visitor = std::function<void(std::span<const Elem>)>;
  /// Visits every full edge assignment extending `fixed` (one optional color
  /// per edge), in a deterministic order. Returns the number visited.
  std::uint64_t solve(std::span<const std::optional<Elem>> fixed, const Visitor& visit,
                      std::uint64_t node_budget = kDefaultNodeBudget) const;

  std::size_t edge_count() const noexcept { return edges_; }

 private:
  enum class Table { r, v, t };
  // table(src) = dst; the inverse is used for backward propagation when the
  // table is a bijection.
  struct Constraint {
    std::array<EdgeId, 2> src;
    std::array<EdgeId, 2> dst;
    Table table;
  };
  std::size_t carrier_;
  std::size_t edges_;
  PairMap r_, v_;
  std::optional<PairMap> rinv_, vinv_;
  ElemMap t_;
  std::optional<ElemMap> tinv_;
  std::vector<Constraint> cons_;
  std::vector<std::vector<std::size_t>> touching_;

  friend class SolverRun;
};

/// True when `colors` satisfies every node relation of `graph`.
bool satisfies(const DiagramGraph& graph, const ColoringRules& rules, std::span<const Elem> colors);

ColoringResult count_colorings(const TwistedDiagram& d, const ColoringRules& rules, const ColoringOptions& opts = {});
/// Refuses structures whose axiom reports fail unless opts.force is set.
ColoringResult count_colorings(const TwistedDiagram& d, const VTStructure& s, const ColoringOptions& opts = {});

/// Exhaustive scan over all |X|^edges assignments; throws resource when that
/// exceeds `cap`.
BigInt brute_force_colorings(const TwistedDiagram& d, const ColoringRules& rules,
                             std::uint64_t cap = kDefaultBruteForceCap);
BigInt brute_force_colorings(const TwistedDiagram& d, const VTStructure& s,
                             std::uint64_t cap = kDefaultBruteForceCap);

/// Both require a diagram without bars.
BigInt upper_colorings(const TwistedDiagram& d, const FiniteQuandle& q);
BigInt lower_colorings(const TwistedDiagram& d, const FiniteQuandle& q);

struct ProductFormulaCheck {
  BigInt lhs;  // colorings by the standard twisted product
  BigInt upper;
  BigInt lower;
  BigInt rhs;  // upper * lower
  bool equal = false;
};
ProductFormulaCheck check_product_formula(const TwistedDiagram& d, const FiniteQuandle& q);

/// Pairs (a, b) with a = a^{(ba)^m} and b = b^{(ab)^m}, in lexicographic order.
struct DeltaSet {
  std::size_t m = 0;
  std::vector<Pair> members;
  bool contains(Pair p) const;
  std::size_t size() const noexcept { return members.size(); }
};
DeltaSet delta_set(const FiniteQuandle& q, std::size_t m);

/// The unique coloring of make_fm(m) by the standard twisted product of q
/// whose x and y edges have first coordinates x1 and y1. Throws
/// precondition when (x1, y1) is not in the delta set.
Coloring coloring_from_delta(const FiniteQuandle& q, std::size_t m, Elem x1, Elem y1);

struct NonvirtualVerdict {
  BigInt count;
  BigInt threshold;  // |Q|^2
  bool nonvirtual = false;  // true proves D is not a virtual link; false is inconclusive
};
NonvirtualVerdict detect_nonvirtual(const TwistedDiagram& d, const FiniteQuandle& q);

}  // namespace twistcolor
