#include "twistcolor/coloring.hpp"

#include <algorithm>
#include <limits>

namespace twistcolor {

ColoringRules ColoringRules::from(const VTStructure& s) {
  return ColoringRules{s.size(), s.R(), s.V(), s.T()};
}

ColoringRules ColoringRules::from(const VStructuredBiquandle& s) {
  return ColoringRules{s.size(), s.base().R(), s.V(), std::nullopt};
}

ColoringRules ColoringRules::upper(const FiniteQuandle& q) {
  return ColoringRules{q.size(), derived_biquandle(q).R(), PairMap::transposition(q.size()), std::nullopt};
}

ColoringRules ColoringRules::lower(const FiniteQuandle& q) {
  return ColoringRules{q.size(), derived_biquandle(q).R().conjugate_by_tau(), PairMap::transposition(q.size()),
                       std::nullopt};
}

ColoringSolver::ColoringSolver(const DiagramGraph& graph, const ColoringRules& rules)
    : carrier_(rules.carrier), edges_(graph.edge_count()), r_(rules.positive), v_(rules.virtual_crossing) {
  if (carrier_ == 0) throw Error(ErrorKind::invalid_argument, "empty carrier");
  if (r_.carrier_size() != carrier_ || v_.carrier_size() != carrier_)
    throw Error(ErrorKind::malformed, "coloring tables disagree on the carrier size");
  if (r_.is_bijection()) rinv_ = r_.inverse();
  if (v_.is_bijection()) vinv_ = v_.inverse();
  if (rules.bar) {
    t_ = *rules.bar;
    if (t_.size() != carrier_) throw Error(ErrorKind::malformed, "bar table has the wrong length");
    if (is_permutation(t_)) tinv_ = inverse_permutation(t_);
  }

  touching_.resize(edges_);
  for (const Node& n : graph.nodes()) {
    Constraint c{};
    const auto& p = n.ports;
    switch (n.kind) {
      case NodeKind::positive: c = {{p[0], p[1]}, {p[2], p[3]}, Table::r}; break;
      case NodeKind::negative: c = {{p[2], p[3]}, {p[0], p[1]}, Table::r}; break;
      case NodeKind::virtual_crossing: c = {{p[0], p[1]}, {p[2], p[3]}, Table::v}; break;
      case NodeKind::bar:
        if (!rules.bar) throw Error(ErrorKind::unsupported, "diagram has bars but the structure has no T");
        c = {{p[0], p[0]}, {p[1], p[1]}, Table::t};
        break;
    }
    const std::size_t id = cons_.size();
    cons_.push_back(c);
    for (std::size_t i = 0; i < n.arity(); ++i) {
      auto& list = touching_[p[i]];
      if (list.empty() || list.back() != id) list.push_back(id);
    }
  }
}

// One depth-first search over a solver's constraint system.
class SolverRun {
 public:
  SolverRun(const ColoringSolver& s, const ColoringSolver::Visitor& visit, std::uint64_t budget)
      : s_(s), visit_(visit), budget_(budget), color_(s.edges_, kNone) {}

  std::uint64_t run(std::span<const std::optional<Elem>> fixed) {
    if (fixed.size() != s_.edges_) throw Error(ErrorKind::precondition, "fixed assignment has the wrong length");
    for (EdgeId e = 0; e < fixed.size(); ++e)
      if (fixed[e]) {
        if (*fixed[e] >= s_.carrier_) throw Error(ErrorKind::malformed, "fixed color outside the carrier");
        if (!assign(e, *fixed[e])) return 0;
      }
    // constraints without any edge assigned yet still need a first check
    for (std::size_t c = 0; c < s_.cons_.size(); ++c) queue_.push_back(c);
    search();
    return found_;
  }

 private:
  static constexpr Elem kNone = std::numeric_limits<Elem>::max();

  bool assign(EdgeId e, Elem v) {
    if (color_[e] != kNone) return color_[e] == v;
    color_[e] = v;
    trail_.push_back(e);
    for (std::size_t c : s_.touching_[e]) queue_.push_back(c);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      color_[trail_.back()] = kNone;
      trail_.pop_back();
    }
  }

  bool apply(const ColoringSolver::Constraint& c) {
    using Table = ColoringSolver::Table;
    const bool src_known = color_[c.src[0]] != kNone && color_[c.src[1]] != kNone;
    const bool dst_known = color_[c.dst[0]] != kNone && color_[c.dst[1]] != kNone;
    if (c.table == Table::t) {
      if (src_known) return assign(c.dst[0], s_.t_[color_[c.src[0]]]);
      if (dst_known && s_.tinv_) return assign(c.src[0], (*s_.tinv_)[color_[c.dst[0]]]);
      return true;
    }
    const PairMap& f = c.table == Table::r ? s_.r_ : s_.v_;
    const std::optional<PairMap>& finv = c.table == Table::r ? s_.rinv_ : s_.vinv_;
    if (src_known) {
      Pair out = f(color_[c.src[0]], color_[c.src[1]]);
      return assign(c.dst[0], out.first) && assign(c.dst[1], out.second);
    }
    if (dst_known && finv) {
      Pair in = (*finv)(color_[c.dst[0]], color_[c.dst[1]]);
      return assign(c.src[0], in.first) && assign(c.src[1], in.second);
    }
    return true;
  }

  bool propagate() {
    while (head_ < queue_.size()) {
      if (!apply(s_.cons_[queue_[head_++]])) {
        queue_.clear();
        head_ = 0;
        return false;
      }
    }
    queue_.clear();
    head_ = 0;
    return true;
  }

  // Prefer an edge whose color completes the inputs of some node.
  std::optional<EdgeId> choose() const {
    for (const auto& c : s_.cons_) {
      if (c.table == ColoringSolver::Table::t) continue;
      const bool a = color_[c.src[0]] != kNone, b = color_[c.src[1]] != kNone;
      if (a != b) return a ? c.src[1] : c.src[0];
    }
    for (EdgeId e = 0; e < color_.size(); ++e)
      if (color_[e] == kNone) return e;
    return std::nullopt;
  }

  void search() {
    if (!propagate()) return;
    std::optional<EdgeId> e = choose();
    if (!e) {
      ++found_;
      if (visit_) visit_(color_);
      return;
    }
    const std::size_t mark = trail_.size();
    for (Elem v = 0; v < s_.carrier_; ++v) {
      if (++steps_ > budget_)
        throw Error(ErrorKind::resource, "coloring search exceeded the node budget of " + std::to_string(budget_));
      assign(*e, v);
      search();
      undo(mark);
    }
  }

  const ColoringSolver& s_;
  const ColoringSolver::Visitor& visit_;
  std::uint64_t budget_;
  std::vector<Elem> color_;
  std::vector<EdgeId> trail_;
  std::vector<std::size_t> queue_;
  std::size_t head_ = 0;
  std::uint64_t found_ = 0;
  std::uint64_t steps_ = 0;
};

std::uint64_t ColoringSolver::solve(std::span<const std::optional<Elem>> fixed, const Visitor& visit,
                                    std::uint64_t node_budget) const {
  SolverRun run(*this, visit, node_budget);
  return run.run(fixed);
}

bool satisfies(const DiagramGraph& graph, const ColoringRules& rules, std::span<const Elem> colors) {
  if (colors.size() != graph.edge_count()) return false;
  for (Elem c : colors)
    if (c >= rules.carrier) return false;
  for (const Node& n : graph.nodes()) {
    const auto& p = n.ports;
    auto x = [&](std::size_t i) { return colors[p[i]]; };
    switch (n.kind) {
      case NodeKind::positive:
        if (rules.positive(x(0), x(1)) != Pair{x(2), x(3)}) return false;
        break;
      case NodeKind::negative:
        if (rules.positive(x(2), x(3)) != Pair{x(0), x(1)}) return false;
        break;
      case NodeKind::virtual_crossing:
        if (rules.virtual_crossing(x(0), x(1)) != Pair{x(2), x(3)}) return false;
        break;
      case NodeKind::bar:
        if (!rules.bar) throw Error(ErrorKind::unsupported, "diagram has bars but the structure has no T");
        if ((*rules.bar)[x(0)] != x(1)) return false;
        break;
    }
  }
  return true;
}

namespace {

BigInt power(std::size_t base, std::size_t exp) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_verified(const VTStructure& s, bool force) {
  if (force || s.verified()) return;
  std::string which = !s.biquandle_report().all_pass() ? "biquandle"
                      : !s.v_report().all_pass()       ? "v-structure"
                                                       : "t-structure";
  throw Error(ErrorKind::axiom_violation, "structure fails its " + which + " axioms; refusing to count colorings");
}

void require_no_bars(const TwistedDiagram& d) {
  if (d.has_bars()) throw Error(ErrorKind::unsupported, "operation needs a diagram without bars");
}

}  // namespace

ColoringResult count_colorings(const TwistedDiagram& d, const ColoringRules& rules, const ColoringOptions& opts) {
  ColoringSolver solver(d, rules);
  ColoringResult result;
  std::vector<std::optional<Elem>> fixed(d.edge_count());
  const std::size_t k = rules.carrier;
  const std::size_t loops = d.free_loops();

  ColoringSolver::Visitor visit;
  if (opts.emit) {
    visit = [&](std::span<const Elem> colors) {
      // expand free-loop colors in odometer order
      std::vector<Elem> lc(loops, 0);
      for (;;) {
        result.colorings.push_back({std::vector<Elem>(colors.begin(), colors.end()), lc});
        std::size_t i = loops;
        while (i > 0 && ++lc[i - 1] == k) lc[--i] = 0;
        if (i == 0) break;
      }
    };
  }
  std::uint64_t n = solver.solve(fixed, visit, opts.node_budget);
  result.count = BigInt(n) * power(k, loops);
  return result;
}

ColoringResult count_colorings(const TwistedDiagram& d, const VTStructure& s, const ColoringOptions& opts) {
  require_verified(s, opts.force);
  return count_colorings(d, ColoringRules::from(s), opts);
}

BigInt brute_force_colorings(const TwistedDiagram& d, const ColoringRules& rules, std::uint64_t cap) {
  const std::size_t k = rules.carrier;
  const std::size_t edges = d.edge_count();
  BigInt space = power(k, edges);
  if (space > cap)
    throw Error(ErrorKind::resource, "brute force needs " + space.str() + " assignments, above the cap of " +
                                         std::to_string(cap));
  std::vector<Elem> colors(edges, 0);
  std::uint64_t hits = 0;
  for (;;) {
    if (satisfies(d, rules, colors)) ++hits;
    std::size_t i = edges;
    while (i > 0 && ++colors[i - 1] == k) colors[--i] = 0;
    if (i == 0) break;
  }
  return BigInt(hits) * power(k, d.free_loops());
}

BigInt brute_force_colorings(const TwistedDiagram& d, const VTStructure& s, std::uint64_t cap) {
  return brute_force_colorings(d, ColoringRules::from(s), cap);
}

BigInt upper_colorings(const TwistedDiagram& d, const FiniteQuandle& q) {
  require_no_bars(d);
  return count_colorings(d, ColoringRules::upper(q)).count;
}

BigInt lower_colorings(const TwistedDiagram& d, const FiniteQuandle& q) {
  require_no_bars(d);
  return count_colorings(d, ColoringRules::lower(q)).count;
}

ProductFormulaCheck check_product_formula(const TwistedDiagram& d, const FiniteQuandle& q) {
  require_no_bars(d);
  ProductFormulaCheck out;
  out.lhs = count_colorings(d, standard_twisted_product(q)).count;
  out.upper = upper_colorings(d, q);
  out.lower = lower_colorings(d, q);
  out.rhs = out.upper * out.lower;
  out.equal = out.lhs == out.rhs;
  return out;
}

bool DeltaSet::contains(Pair p) const { return std::binary_search(members.begin(), members.end(), p); }

DeltaSet delta_set(const FiniteQuandle& q, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::invalid_argument, "delta set needs m >= 1");
  DeltaSet out{m, {}};
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = 0; b < q.size(); ++b)
      if (eval_word(q, a, alternating_word(b, a, m)) == a && eval_word(q, b, alternating_word(a, b, m)) == b)
        out.members.push_back({a, b});
  return out;
}

Coloring coloring_from_delta(const FiniteQuandle& q, std::size_t m, Elem x1, Elem y1) {
  if (x1 >= q.size() || y1 >= q.size()) throw Error(ErrorKind::invalid_argument, "element outside the quandle");
  if (!delta_set(q, m).contains({x1, y1}))
    throw Error(ErrorKind::precondition, "(x1, y1) is not in the delta set; no coloring exists");
  const std::size_t n = m / 2;
  Elem x2, y2;
  if (m % 2 == 0) {
    x2 = eval_word(q, y1, alternating_word(x1, y1, n));
    y2 = eval_word(q, x1, alternating_word(y1, x1, n - 1, y1));
  } else {
    x2 = eval_word(q, x1, alternating_word(y1, x1, n, y1));
    y2 = eval_word(q, y1, alternating_word(x1, y1, n));
  }

  const TwistedDiagram fm = make_fm(m);
  const VTStructure s = standard_twisted_product(q);
  const std::size_t n0 = q.size();
  constexpr Elem kUnset = std::numeric_limits<Elem>::max();
  std::vector<Elem> colors(fm.edge_count(), kUnset);
  colors[*fm.find_edge("x")] = encode_pair(x1, x2, n0);
  colors[*fm.find_edge("y")] = encode_pair(y1, y2, n0);
  // nodes are stored as the crossing chain, then the bars, then the virtual crossing
  for (const Node& node : fm.nodes()) {
    const auto& p = node.ports;
    if (node.kind == NodeKind::positive) {
      Pair out = s.R()(colors[p[0]], colors[p[1]]);
      colors[p[2]] = out.first;
      colors[p[3]] = out.second;
    } else if (node.kind == NodeKind::bar) {
      colors[p[1]] = s.T()[colors[p[0]]];
    }
  }
  if (!satisfies(fm, ColoringRules::from(s), colors))
    throw Error(ErrorKind::precondition, "propagated colors do not close up at the virtual crossing");
  return Coloring{std::move(colors), {}};
}

NonvirtualVerdict detect_nonvirtual(const TwistedDiagram& d, const FiniteQuandle& q) {
  NonvirtualVerdict v;
  v.count = count_colorings(d, standard_twisted_product(q)).count;
  v.threshold = BigInt(q.size()) * q.size();
  v.nonvirtual = v.count < v.threshold;
  return v;
}

}  // namespace twistcolor
