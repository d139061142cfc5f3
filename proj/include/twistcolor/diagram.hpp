#pragma once

// Abstract oriented twisted-link diagrams.
//
// Port convention at classical and virtual nodes: ports (e1, e2) are the
// incoming edges and (e3, e4) the outgoing ones; the strand entering at e1
// leaves at e4, the strand entering at e2 leaves at e3. A positive crossing
// imposes R(x1,x2) = (x3,x4), a negative one R^-1(x1,x2) = (x3,x4), a
// virtual one V(x1,x2) = (x3,x4). A bar with ports (e1, e2) imposes
// T(x1) = x2.
//
// Text format, one node per line ('#' starts a comment):
//   X+ e1 e2 e3 e4 | X- e1 e2 e3 e4 | V e1 e2 e3 e4 | B e1 e2 | O k

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistcolor/core.hpp"

namespace twistcolor {

using EdgeId = std::size_t;

enum class NodeKind { positive, negative, virtual_crossing, bar };

struct Node {
  NodeKind kind;
  std::array<EdgeId, 4> ports{};  // a bar uses ports[0] (in) and ports[1] (out)

  std::size_t arity() const noexcept { return kind == NodeKind::bar ? 2 : 4; }
  std::size_t input_count() const noexcept { return kind == NodeKind::bar ? 1 : 2; }
  friend bool operator==(const Node&, const Node&) = default;
};

/// Edge names plus nodes. Shared storage of TwistedDiagram and Tangle.
class DiagramGraph {
 public:
  std::size_t edge_count() const noexcept { return edge_names_.size(); }
  const std::string& edge_name(EdgeId e) const { return edge_names_.at(e); }
  const std::vector<std::string>& edge_names() const noexcept { return edge_names_; }
  std::optional<EdgeId> find_edge(std::string_view name) const;
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t count_nodes(NodeKind kind) const;

 protected:
  DiagramGraph() = default;
  DiagramGraph(std::vector<std::string> edge_names, std::vector<Node> nodes);

  std::vector<std::string> edge_names_;
  std::vector<Node> nodes_;
};

/// A closed diagram: every edge is produced by exactly one node and consumed
/// by exactly one node.
class TwistedDiagram : public DiagramGraph {
 public:
  TwistedDiagram() = default;
  TwistedDiagram(std::vector<std::string> edge_names, std::vector<Node> nodes, std::size_t free_loops = 0);

  std::size_t free_loops() const noexcept { return free_loops_; }
  bool has_bars() const { return count_nodes(NodeKind::bar) > 0; }

  friend bool operator==(const TwistedDiagram& a, const TwistedDiagram& b) {
    return a.edge_names_ == b.edge_names_ && a.nodes_ == b.nodes_ && a.free_loops_ == b.free_loops_;
  }

 private:
  std::size_t free_loops_ = 0;
};

/// An open diagram. Edges without a producing node form boundary_in, edges
/// without a consuming node form boundary_out; both lists are ordered.
class Tangle : public DiagramGraph {
 public:
  Tangle(std::vector<std::string> edge_names, std::vector<Node> nodes, std::vector<EdgeId> boundary_in,
         std::vector<EdgeId> boundary_out);

  const std::vector<EdgeId>& boundary_in() const noexcept { return in_; }
  const std::vector<EdgeId>& boundary_out() const noexcept { return out_; }

 private:
  std::vector<EdgeId> in_;
  std::vector<EdgeId> out_;
};

/// Builds diagrams from named edges; edges are numbered by first use.
class DiagramBuilder {
 public:
  DiagramBuilder& crossing(int sign, std::string_view e1, std::string_view e2, std::string_view e3,
                           std::string_view e4);
  DiagramBuilder& virtual_crossing(std::string_view e1, std::string_view e2, std::string_view e3,
                                   std::string_view e4);
  DiagramBuilder& bar(std::string_view in, std::string_view out);
  DiagramBuilder& free_loops(std::size_t k);
  DiagramBuilder& node(NodeKind kind, const std::vector<std::string_view>& ports);
  EdgeId edge(std::string_view name);

  TwistedDiagram build() const;
  Tangle build_tangle(const std::vector<std::string>& boundary_in, const std::vector<std::string>& boundary_out) const;

 private:
  std::vector<std::string> names_;
  std::vector<Node> nodes_;
  std::size_t free_loops_ = 0;
};

/// Parse error carrying the 1-based line number (0 when the problem is
/// global, e.g. a dangling edge).
class DiagramParseError : public Error {
 public:
  DiagramParseError(std::size_t line, const std::string& msg);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

TwistedDiagram parse_diagram(std::string_view text);
/// Canonical text: one node per line in stored order, single spaces,
/// trailing newline, free loops last as "O k".
std::string serialize_diagram(const TwistedDiagram& d);

/// True when b equals a after renaming edges bijectively (node order and
/// kinds must match).
bool isomorphic(const TwistedDiagram& a, const TwistedDiagram& b);

/// The non-orientable virtual m-foil: m positive crossings carrying (x, y)
/// to (z, w), bars on z and w, and a virtual crossing closing back to (x, y).
/// Edge names: x, y, p1.., q1.., z, w, zt, wt.
TwistedDiagram make_fm(std::size_t m);

/// Deletes every bar and merges its two edges; components left without
/// nodes become free loops.
TwistedDiagram remove_bars(const TwistedDiagram& d);

/// Which ports the small loop of an inserted kink occupies: loop_on_second
/// puts it on (e2, e4), i.e. (in, loop, out, loop); loop_on_first on (e1, e3),
/// i.e. (loop, in, loop, out).
enum class KinkSide { loop_on_second, loop_on_first };

struct KinkKind {
  int sign = 1;
  KinkSide side = KinkSide::loop_on_second;
};

/// Each edit inserts one extended Reidemeister move on `edge`. With no edge
/// the move is applied to a free loop, which must exist.
TwistedDiagram add_kink(const TwistedDiagram& d, std::optional<std::string_view> edge, KinkKind kind);
TwistedDiagram add_virtual_kink(const TwistedDiagram& d, std::optional<std::string_view> edge,
                                KinkSide side = KinkSide::loop_on_second);
TwistedDiagram add_bar_pair(const TwistedDiagram& d, std::optional<std::string_view> edge);

/// Appends `k` free loops.
TwistedDiagram add_free_loops(const TwistedDiagram& d, std::size_t k);

struct RandomDiagramOptions {
  std::size_t nodes = 4;
  bool classical = true;
  bool virtual_crossings = true;
  bool bars = true;
  std::size_t max_free_loops = 0;
};

/// A random closed diagram: node kinds drawn from the enabled ones and
/// outputs wired to inputs by a random permutation. Edges are named e0, e1, ...
/// The same seed gives the same diagram.
TwistedDiagram random_diagram(std::uint64_t seed, const RandomDiagramOptions& opts = {});

}  // namespace twistcolor
