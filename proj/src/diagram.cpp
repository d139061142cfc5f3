#include "twistcolor/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace twistcolor {
namespace {

struct PortUse {
  std::vector<int> in;   // number of nodes consuming the edge
  std::vector<int> out;  // number of nodes producing the edge
};

PortUse count_ports(std::size_t edges, const std::vector<Node>& nodes) {
  PortUse u{std::vector<int>(edges, 0), std::vector<int>(edges, 0)};
  for (const Node& n : nodes)
    for (std::size_t p = 0; p < n.arity(); ++p) {
      EdgeId e = n.ports[p];
      if (e >= edges) throw Error(ErrorKind::malformed, "node refers to an unknown edge index");
      (p < n.input_count() ? u.in : u.out)[e]++;
    }
  return u;
}

const char* tag(NodeKind k) {
  switch (k) {
    case NodeKind::positive: return "X+";
    case NodeKind::negative: return "X-";
    case NodeKind::virtual_crossing: return "V";
    case NodeKind::bar: return "B";
  }
  return "?";
}

std::string fresh_name(const std::unordered_set<std::string>& used, std::string_view base) {
  for (std::size_t i = 1;; ++i) {
    std::string candidate = std::string(base) + "." + std::to_string(i);
    if (!used.contains(candidate)) return candidate;
  }
}

// Mutable working copy used by the edit operations.
struct Editable {
  std::vector<std::string> names;
  std::vector<Node> nodes;
  std::size_t loops;
  std::unordered_set<std::string> used;

  explicit Editable(const TwistedDiagram& d)
      : names(d.edge_names()), nodes(d.nodes()), loops(d.free_loops()), used(names.begin(), names.end()) {}

  EdgeId add_edge(std::string_view base) {
    std::string n = fresh_name(used, base);
    used.insert(n);
    names.push_back(n);
    return names.size() - 1;
  }

  // Returns (in, out): the segment entering the inserted piece and the one
  // leaving it. For a free loop both are the same new edge.
  std::pair<EdgeId, EdgeId> open_slot(std::optional<std::string_view> edge) {
    if (!edge) {
      if (loops == 0) throw Error(ErrorKind::precondition, "diagram has no free loop to edit");
      --loops;
      EdgeId l = add_edge("loop");
      return {l, l};
    }
    auto it = std::find(names.begin(), names.end(), *edge);
    if (it == names.end()) throw Error(ErrorKind::invalid_argument, "unknown edge '" + std::string(*edge) + "'");
    EdgeId e = static_cast<EdgeId>(it - names.begin());
    EdgeId e2 = add_edge(*edge);
    for (Node& n : nodes)
      for (std::size_t p = 0; p < n.input_count(); ++p)
        if (n.ports[p] == e) {
          n.ports[p] = e2;
          return {e, e2};
        }
    throw Error(ErrorKind::malformed, "edge has no consuming node");
  }

  TwistedDiagram finish() { return TwistedDiagram(std::move(names), std::move(nodes), loops); }
};

Node kink_node(NodeKind kind, KinkSide side, EdgeId in, EdgeId loop, EdgeId out) {
  if (side == KinkSide::loop_on_second) return Node{kind, {in, loop, out, loop}};
  return Node{kind, {loop, in, loop, out}};
}

}  // namespace

std::optional<EdgeId> DiagramGraph::find_edge(std::string_view name) const {
  for (EdgeId e = 0; e < edge_names_.size(); ++e)
    if (edge_names_[e] == name) return e;
  return std::nullopt;
}

std::size_t DiagramGraph::count_nodes(NodeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [kind](const Node& n) { return n.kind == kind; }));
}

DiagramGraph::DiagramGraph(std::vector<std::string> edge_names, std::vector<Node> nodes)
    : edge_names_(std::move(edge_names)), nodes_(std::move(nodes)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : edge_names_) {
    if (n.empty()) throw Error(ErrorKind::malformed, "empty edge name");
    if (!seen.insert(n).second) throw Error(ErrorKind::malformed, "duplicate edge name '" + n + "'");
  }
}

TwistedDiagram::TwistedDiagram(std::vector<std::string> edge_names, std::vector<Node> nodes, std::size_t free_loops)
    : DiagramGraph(std::move(edge_names), std::move(nodes)), free_loops_(free_loops) {
  PortUse u = count_ports(edge_count(), nodes_);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (u.in[e] != 1 || u.out[e] != 1)
      throw Error(ErrorKind::malformed, "edge '" + edge_names_[e] + "' is consumed " + std::to_string(u.in[e]) +
                                            " and produced " + std::to_string(u.out[e]) +
                                            " times; closed diagrams need exactly one of each");
  }
}

Tangle::Tangle(std::vector<std::string> edge_names, std::vector<Node> nodes, std::vector<EdgeId> boundary_in,
               std::vector<EdgeId> boundary_out)
    : DiagramGraph(std::move(edge_names), std::move(nodes)), in_(std::move(boundary_in)), out_(std::move(boundary_out)) {
  PortUse u = count_ports(edge_count(), nodes_);
  std::vector<int> listed_in(edge_count(), 0), listed_out(edge_count(), 0);
  for (EdgeId e : in_) listed_in.at(e)++;
  for (EdgeId e : out_) listed_out.at(e)++;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (u.in[e] > 1 || u.out[e] > 1)
      throw Error(ErrorKind::malformed, "edge '" + edge_names_[e] + "' is used twice on the same side");
    if (listed_in[e] != (u.out[e] == 0 ? 1 : 0))
      throw Error(ErrorKind::malformed, "boundary_in must list exactly the unproduced edges ('" + edge_names_[e] + "')");
    if (listed_out[e] != (u.in[e] == 0 ? 1 : 0))
      throw Error(ErrorKind::malformed, "boundary_out must list exactly the unconsumed edges ('" + edge_names_[e] + "')");
  }
}

EdgeId DiagramBuilder::edge(std::string_view name) {
  for (EdgeId e = 0; e < names_.size(); ++e)
    if (names_[e] == name) return e;
  names_.emplace_back(name);
  return names_.size() - 1;
}

DiagramBuilder& DiagramBuilder::node(NodeKind kind, const std::vector<std::string_view>& ports) {
  Node n{kind, {}};
  if (ports.size() != n.arity()) throw Error(ErrorKind::malformed, "wrong number of ports for node");
  for (std::size_t i = 0; i < ports.size(); ++i) n.ports[i] = edge(ports[i]);
  nodes_.push_back(n);
  return *this;
}

DiagramBuilder& DiagramBuilder::crossing(int sign, std::string_view e1, std::string_view e2, std::string_view e3,
                                         std::string_view e4) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::invalid_argument, "crossing sign must be +1 or -1");
  return node(sign > 0 ? NodeKind::positive : NodeKind::negative, {e1, e2, e3, e4});
}

DiagramBuilder& DiagramBuilder::virtual_crossing(std::string_view e1, std::string_view e2, std::string_view e3,
                                                 std::string_view e4) {
  return node(NodeKind::virtual_crossing, {e1, e2, e3, e4});
}

DiagramBuilder& DiagramBuilder::bar(std::string_view in, std::string_view out) { return node(NodeKind::bar, {in, out}); }

DiagramBuilder& DiagramBuilder::free_loops(std::size_t k) {
  free_loops_ += k;
  return *this;
}

TwistedDiagram DiagramBuilder::build() const { return TwistedDiagram(names_, nodes_, free_loops_); }

Tangle DiagramBuilder::build_tangle(const std::vector<std::string>& boundary_in,
                                    const std::vector<std::string>& boundary_out) const {
  auto lookup = [this](const std::string& name) {
    for (EdgeId e = 0; e < names_.size(); ++e)
      if (names_[e] == name) return e;
    throw Error(ErrorKind::malformed, "boundary edge '" + name + "' is not used by any node");
  };
  std::vector<EdgeId> in, out;
  for (const auto& n : boundary_in) in.push_back(lookup(n));
  for (const auto& n : boundary_out) out.push_back(lookup(n));
  return Tangle(names_, nodes_, std::move(in), std::move(out));
}

DiagramParseError::DiagramParseError(std::size_t line, const std::string& msg)
    : Error(ErrorKind::parse, line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}

TwistedDiagram parse_diagram(std::string_view text) {
  DiagramBuilder b;
  std::unordered_map<std::string, std::size_t> consumed_at, produced_at;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string> tok;
    std::istringstream ss{std::string(line)};
    for (std::string t; ss >> t;) tok.push_back(std::move(t));
    if (tok.empty()) continue;

    const std::string& t0 = tok[0];
    if (t0 == "O") {
      if (tok.size() != 2) throw DiagramParseError(line_no, "'O' takes exactly one count");
      std::size_t k = 0;
      auto [p, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), k);
      if (ec != std::errc{} || p != tok[1].data() + tok[1].size())
        throw DiagramParseError(line_no, "free-loop count '" + tok[1] + "' is not a non-negative integer");
      b.free_loops(k);
      continue;
    }

    NodeKind kind;
    if (t0 == "X+") kind = NodeKind::positive;
    else if (t0 == "X-") kind = NodeKind::negative;
    else if (t0 == "V") kind = NodeKind::virtual_crossing;
    else if (t0 == "B") kind = NodeKind::bar;
    else throw DiagramParseError(line_no, "unknown node tag '" + t0 + "'");

    Node probe{kind, {}};
    if (tok.size() - 1 != probe.arity())
      throw DiagramParseError(line_no, "'" + t0 + "' takes " + std::to_string(probe.arity()) + " edges, got " +
                                           std::to_string(tok.size() - 1));
    for (std::size_t i = 1; i < tok.size(); ++i) {
      bool input = i - 1 < probe.input_count();
      auto& seen = input ? consumed_at : produced_at;
      if (auto it = seen.find(tok[i]); it != seen.end())
        throw DiagramParseError(line_no, "edge '" + tok[i] + "' already used as " + (input ? "input" : "output") +
                                             " on line " + std::to_string(it->second));
      seen.emplace(tok[i], line_no);
    }
    std::vector<std::string_view> ports(tok.begin() + 1, tok.end());
    b.node(kind, ports);
  }
  // report the earliest dangling edge so errors are reproducible
  std::optional<std::pair<std::size_t, std::string>> dangling;
  auto consider = [&dangling](std::size_t line, std::string msg) {
    std::pair<std::size_t, std::string> c{line, std::move(msg)};
    if (!dangling || c < *dangling) dangling = std::move(c);
  };
  for (const auto& [name, line] : consumed_at)
    if (!produced_at.contains(name)) consider(line, "dangling edge '" + name + "' is never produced");
  for (const auto& [name, line] : produced_at)
    if (!consumed_at.contains(name)) consider(line, "dangling edge '" + name + "' is never consumed");
  if (dangling) throw DiagramParseError(dangling->first, dangling->second);
  return b.build();
}

std::string serialize_diagram(const TwistedDiagram& d) {
  std::string out;
  for (const Node& n : d.nodes()) {
    out += tag(n.kind);
    for (std::size_t p = 0; p < n.arity(); ++p) {
      out += ' ';
      out += d.edge_name(n.ports[p]);
    }
    out += '\n';
  }
  if (d.free_loops() > 0) out += "O " + std::to_string(d.free_loops()) + "\n";
  return out;
}

bool isomorphic(const TwistedDiagram& a, const TwistedDiagram& b) {
  if (a.edge_count() != b.edge_count() || a.nodes().size() != b.nodes().size() || a.free_loops() != b.free_loops())
    return false;
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> fwd(a.edge_count(), none), bwd(b.edge_count(), none);
  for (std::size_t i = 0; i < a.nodes().size(); ++i) {
    const Node& na = a.nodes()[i];
    const Node& nb = b.nodes()[i];
    if (na.kind != nb.kind) return false;
    for (std::size_t p = 0; p < na.arity(); ++p) {
      EdgeId ea = na.ports[p], eb = nb.ports[p];
      if (fwd[ea] == none && bwd[eb] == none) {
        fwd[ea] = eb;
        bwd[eb] = ea;
      } else if (fwd[ea] != eb || bwd[eb] != ea) {
        return false;
      }
    }
  }
  return true;
}

TwistedDiagram make_fm(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::invalid_argument, "m-foil needs m >= 1");
  auto p = [m](std::size_t i) { return i == 0 ? std::string("x") : i == m ? std::string("z") : "p" + std::to_string(i); };
  auto q = [m](std::size_t i) { return i == 0 ? std::string("y") : i == m ? std::string("w") : "q" + std::to_string(i); };
  DiagramBuilder b;
  for (std::size_t i = 1; i <= m; ++i) b.crossing(+1, p(i - 1), q(i - 1), p(i), q(i));
  b.bar("z", "zt").bar("w", "wt").virtual_crossing("zt", "wt", "x", "y");
  return b.build();
}

TwistedDiagram remove_bars(const TwistedDiagram& d) {
  const std::size_t n = d.edge_count();
  std::vector<EdgeId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](EdgeId e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (const Node& node : d.nodes())
    if (node.kind == NodeKind::bar) {
      EdgeId a = find(node.ports[0]), c = find(node.ports[1]);
      if (a != c) parent[std::max(a, c)] = std::min(a, c);
    }

  std::vector<std::string> names;
  std::vector<std::size_t> new_id(n, static_cast<std::size_t>(-1));
  std::vector<Node> nodes;
  for (const Node& node : d.nodes()) {
    if (node.kind == NodeKind::bar) continue;
    Node copy = node;
    for (std::size_t p = 0; p < node.arity(); ++p) {
      EdgeId root = find(node.ports[p]);
      if (new_id[root] == static_cast<std::size_t>(-1)) {
        new_id[root] = names.size();
        names.push_back(d.edge_name(root));
      }
      copy.ports[p] = new_id[root];
    }
    nodes.push_back(copy);
  }
  std::size_t loops = d.free_loops();
  for (EdgeId e = 0; e < n; ++e)
    if (find(e) == e && new_id[e] == static_cast<std::size_t>(-1)) ++loops;
  return TwistedDiagram(std::move(names), std::move(nodes), loops);
}

TwistedDiagram add_kink(const TwistedDiagram& d, std::optional<std::string_view> edge, KinkKind kind) {
  if (kind.sign != 1 && kind.sign != -1) throw Error(ErrorKind::invalid_argument, "kink sign must be +1 or -1");
  Editable w(d);
  auto [in, out] = w.open_slot(edge);
  EdgeId loop = w.add_edge("kink");
  w.nodes.push_back(kink_node(kind.sign > 0 ? NodeKind::positive : NodeKind::negative, kind.side, in, loop, out));
  return w.finish();
}

TwistedDiagram add_virtual_kink(const TwistedDiagram& d, std::optional<std::string_view> edge, KinkSide side) {
  Editable w(d);
  auto [in, out] = w.open_slot(edge);
  EdgeId loop = w.add_edge("vkink");
  w.nodes.push_back(kink_node(NodeKind::virtual_crossing, side, in, loop, out));
  return w.finish();
}

TwistedDiagram add_bar_pair(const TwistedDiagram& d, std::optional<std::string_view> edge) {
  Editable w(d);
  auto [in, out] = w.open_slot(edge);
  EdgeId mid = w.add_edge("bar");
  w.nodes.push_back(Node{NodeKind::bar, {in, mid, 0, 0}});
  w.nodes.push_back(Node{NodeKind::bar, {mid, out, 0, 0}});
  return w.finish();
}

TwistedDiagram add_free_loops(const TwistedDiagram& d, std::size_t k) {
  return TwistedDiagram(d.edge_names(), d.nodes(), d.free_loops() + k);
}

}  // namespace twistcolor

namespace twistcolor {

TwistedDiagram random_diagram(std::uint64_t seed, const RandomDiagramOptions& opts) {
  std::vector<NodeKind> kinds;
  if (opts.classical) kinds.insert(kinds.end(), {NodeKind::positive, NodeKind::negative});
  if (opts.virtual_crossings) kinds.push_back(NodeKind::virtual_crossing);
  if (opts.bars) kinds.push_back(NodeKind::bar);
  if (kinds.empty() && opts.nodes > 0) throw Error(ErrorKind::invalid_argument, "no node kind enabled");

  std::mt19937_64 rng(seed);
  auto below = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<Node> nodes(opts.nodes);
  std::size_t edges = 0;
  for (Node& n : nodes) {
    n.kind = kinds[below(kinds.size())];
    edges += n.input_count();
  }
  // Output slot i carries edge i; input slots receive a shuffled edge.
  std::vector<EdgeId> perm(edges);
  std::iota(perm.begin(), perm.end(), EdgeId{0});
  for (std::size_t i = edges; i > 1; --i) std::swap(perm[i - 1], perm[below(i)]);

  std::size_t out_slot = 0, in_slot = 0;
  for (Node& n : nodes) {
    if (n.kind == NodeKind::bar) {
      n.ports = {perm[in_slot++], out_slot++, 0, 0};
    } else {
      n.ports[0] = perm[in_slot++];
      n.ports[1] = perm[in_slot++];
      n.ports[2] = out_slot++;
      n.ports[3] = out_slot++;
    }
  }
  std::vector<std::string> names;
  for (std::size_t e = 0; e < edges; ++e) names.push_back("e" + std::to_string(e));
  const std::size_t loops = opts.max_free_loops ? below(opts.max_free_loops + 1) : 0;
  return TwistedDiagram(std::move(names), std::move(nodes), loops);
}

}  // namespace twistcolor
