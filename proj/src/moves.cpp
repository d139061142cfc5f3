#include "twistcolor/moves.hpp"

#include <algorithm>
#include <numeric>

namespace twistcolor {
namespace {

// ---- move pictures -------------------------------------------------------
//
// A strand is a list of events met while walking it in its reference
// direction. A crossing event carries the local direction of the strand at
// the crossing point and whether the strand passes over there. Two strands
// (or two passes of one strand) meeting at a crossing are turned into a
// node by rotating the picture until both point upwards: the pass heading
// up-right (positive 2D cross product against the other pass) enters at
// port e1 and leaves at e4. A classical crossing is positive when the other
// pass (e2 -> e3) is the over strand.

struct Dir {
  int dx;
  int dy;
};

constexpr int kBarEvent = -1;

struct Event {
  int id;
  Dir dir;
  bool over;
};

using Strand = std::vector<Event>;

struct Picture {
  std::vector<Strand> strands;
  std::vector<bool> is_virtual;  // indexed by crossing id
};

Event crossing(int id, Dir d, bool over = false) { return {id, d, over}; }
Event bar() { return {kBarEvent, {0, 0}, false}; }

Tangle realize(const Picture& pic, unsigned reversed_mask) {
  std::vector<std::string> names;
  struct Pass {
    EdgeId in, out;
    Dir dir;
    bool over;
  };
  std::vector<std::vector<Pass>> passes(pic.is_virtual.size());
  std::vector<Node> bars;
  std::vector<std::pair<int, EdgeId>> starts, ends;

  for (std::size_t i = 0; i < pic.strands.size(); ++i) {
    Strand s = pic.strands[i];
    const bool rev = (reversed_mask >> i) & 1u;
    if (rev) {
      std::reverse(s.begin(), s.end());
      for (Event& e : s) e.dir = {-e.dir.dx, -e.dir.dy};
    }
    const EdgeId first = names.size();
    for (std::size_t j = 0; j <= s.size(); ++j) names.push_back("s" + std::to_string(i) + "_" + std::to_string(j));
    for (std::size_t j = 0; j < s.size(); ++j) {
      const EdgeId in = first + j, out = first + j + 1;
      if (s[j].id == kBarEvent)
        bars.push_back(Node{NodeKind::bar, {in, out, 0, 0}});
      else
        passes.at(s[j].id).push_back({in, out, s[j].dir, s[j].over});
    }
    const int start_label = static_cast<int>(2 * i + (rev ? 1 : 0));
    const int end_label = static_cast<int>(2 * i + (rev ? 0 : 1));
    starts.emplace_back(start_label, first);
    ends.emplace_back(end_label, first + s.size());
  }

  std::vector<Node> nodes;
  for (std::size_t c = 0; c < passes.size(); ++c) {
    const auto& ps = passes[c];
    if (ps.size() != 2) throw Error(ErrorKind::malformed, "move picture crossing without exactly two passes");
    const int cross = ps[0].dir.dx * ps[1].dir.dy - ps[0].dir.dy * ps[1].dir.dx;
    if (cross == 0) throw Error(ErrorKind::malformed, "move picture crossing is not transversal");
    const Pass& p1 = cross > 0 ? ps[0] : ps[1];
    const Pass& p2 = cross > 0 ? ps[1] : ps[0];
    NodeKind kind = NodeKind::virtual_crossing;
    if (!pic.is_virtual[c]) {
      if (p1.over == p2.over) throw Error(ErrorKind::malformed, "classical crossing needs exactly one over pass");
      kind = p2.over ? NodeKind::positive : NodeKind::negative;
    }
    nodes.push_back(Node{kind, {p1.in, p2.in, p2.out, p1.out}});
  }
  nodes.insert(nodes.end(), bars.begin(), bars.end());

  std::sort(starts.begin(), starts.end());
  std::sort(ends.begin(), ends.end());
  std::vector<EdgeId> in, out;
  for (auto& [label, e] : starts) in.push_back(e);
  for (auto& [label, e] : ends) out.push_back(e);
  return Tangle(std::move(names), std::move(nodes), std::move(in), std::move(out));
}

struct PicturePair {
  std::string id;
  Picture left;
  Picture right;
};

constexpr Dir kUpRight{1, 1}, kUpLeft{-1, 1}, kDownRight{1, -1}, kDownLeft{-1, -1}, kUp{0, 1}, kRight{1, 0};

Picture plain(std::size_t strands) { return Picture{std::vector<Strand>(strands), {}}; }

// A curl: the strand passes the crossing twice. A right curl first heads
// up-right, loops around and comes back heading down-right.
std::vector<PicturePair> kink_pictures(bool is_virtual) {
  std::vector<PicturePair> out;
  for (bool right_curl : {true, false}) {
    const Dir d1 = right_curl ? kUpRight : kUpLeft;
    const Dir d2 = right_curl ? kDownRight : kDownLeft;
    for (bool first_over : {true, false}) {
      if (is_virtual && !first_over) continue;
      Picture left{{{crossing(0, d1, first_over), crossing(0, d2, !first_over)}}, {is_virtual}};
      std::string id = std::string("curl=") + (right_curl ? "right" : "left");
      if (!is_virtual) id += std::string(",over=") + (first_over ? "first" : "second");
      out.push_back({id, left, plain(1)});
    }
  }
  return out;
}

// Strand 0 bulges across the vertical strand 1 and back.
std::vector<PicturePair> bigon_pictures(bool is_virtual) {
  std::vector<PicturePair> out;
  for (int top : {0, 1}) {
    if (is_virtual && top == 1) continue;
    Picture left{{{crossing(0, kUpRight, top == 0), crossing(1, kUpLeft, top == 0)},
                  {crossing(0, kUp, top == 1), crossing(1, kUp, top == 1)}},
                 {is_virtual, is_virtual}};
    std::string id = is_virtual ? "" : "over=s" + std::to_string(top);
    out.push_back({id, left, plain(2)});
  }
  return out;
}

// Strands 0 and 1 cross at the origin heading up-right / up-left; strand 2
// runs left to right below the crossing (left side) or above it (right side).
// Crossing ids: 0 = (s0,s1), 1 = (s0,s2), 2 = (s1,s2).
PicturePair triangle_picture(const std::array<int, 3>& height, std::vector<bool> is_virtual, std::string id) {
  auto over = [&](int self, int other) { return height[self] > height[other]; };
  Picture left{{{crossing(1, kUpRight, over(0, 2)), crossing(0, kUpRight, over(0, 1))},
                {crossing(2, kUpLeft, over(1, 2)), crossing(0, kUpLeft, over(1, 0))},
                {crossing(1, kRight, over(2, 0)), crossing(2, kRight, over(2, 1))}},
               is_virtual};
  Picture right{{{crossing(0, kUpRight, over(0, 1)), crossing(1, kUpRight, over(0, 2))},
                 {crossing(0, kUpLeft, over(1, 0)), crossing(2, kUpLeft, over(1, 2))},
                 {crossing(2, kRight, over(2, 1)), crossing(1, kRight, over(2, 0))}},
                is_virtual};
  return {std::move(id), std::move(left), std::move(right)};
}

std::vector<PicturePair> r3_pictures() {
  std::vector<PicturePair> out;
  std::array<int, 3> h{0, 1, 2};
  do {
    std::string id = "heights=" + std::to_string(h[0]) + std::to_string(h[1]) + std::to_string(h[2]);
    out.push_back(triangle_picture(h, {false, false, false}, id));
  } while (std::next_permutation(h.begin(), h.end()));
  return out;
}

std::vector<PicturePair> v3_pictures() { return {triangle_picture({0, 0, 0}, {true, true, true}, "")}; }

// The real crossing of strands 0 and 1 with strand 2 passing virtually.
std::vector<PicturePair> v4_pictures() {
  return {triangle_picture({1, 0, 0}, {false, true, true}, "over=s0"),
          triangle_picture({0, 1, 0}, {false, true, true}, "over=s1")};
}

// A bar slides along one strand through a virtual crossing. Moving it along
// strand 1 is the mirrored form of the move.
std::vector<PicturePair> t1_pictures() {
  std::vector<PicturePair> out;
  for (int carrier : {0, 1}) {
    Strand s0_before{crossing(0, kUpRight)}, s1_before{crossing(0, kUpLeft)};
    Strand s0_after = s0_before, s1_after = s1_before;
    Strand& lb = carrier == 0 ? s0_before : s1_before;
    Strand& ra = carrier == 0 ? s0_after : s1_after;
    lb.insert(lb.begin(), bar());
    ra.push_back(bar());
    out.push_back({"bar-on=s" + std::to_string(carrier), Picture{{s0_before, s1_before}, {true}},
                   Picture{{s0_after, s1_after}, {true}}});
  }
  return out;
}

std::vector<PicturePair> t2_pictures() { return {{"", Picture{{{bar(), bar()}}, {}}, plain(1)}}; }

// Bars on all four arms of a crossing versus the crossing conjugated by two
// virtual crossings; the over strand changes between the two sides.
std::vector<PicturePair> t3_pictures() {
  std::vector<PicturePair> out;
  for (int left_top : {1, 0}) {
    const int right_top = 1 - left_top;
    Picture left{{{bar(), crossing(0, kUpRight, left_top == 0), bar()},
                  {bar(), crossing(0, kUpLeft, left_top == 1), bar()}},
                 {false}};
    Picture right{{{crossing(1, kUpRight), crossing(0, kUpLeft, right_top == 0), crossing(2, kUpRight)},
                   {crossing(1, kUpLeft), crossing(0, kUpRight, right_top == 1), crossing(2, kUpLeft)}},
                  {false, true, true}};
    out.push_back({"over=s" + std::to_string(left_top) + "/s" + std::to_string(right_top), left, right});
  }
  return out;
}

std::vector<PicturePair> pictures(MoveFamily f) {
  switch (f) {
    case MoveFamily::R1: return kink_pictures(false);
    case MoveFamily::R2: return bigon_pictures(false);
    case MoveFamily::R3: return r3_pictures();
    case MoveFamily::V1: return kink_pictures(true);
    case MoveFamily::V2: return bigon_pictures(true);
    case MoveFamily::V3: return v3_pictures();
    case MoveFamily::V4: return v4_pictures();
    case MoveFamily::T1: return t1_pictures();
    case MoveFamily::T2: return t2_pictures();
    case MoveFamily::T3: return t3_pictures();
  }
  throw Error(ErrorKind::invalid_argument, "unknown move family");
}

}  // namespace

std::string_view family_name(MoveFamily f) {
  static constexpr std::array<std::string_view, 10> names = {"R1", "R2", "R3", "V1", "V2",
                                                             "V3", "V4", "T1", "T2", "T3"};
  return names.at(static_cast<std::size_t>(f));
}

std::optional<MoveFamily> parse_family(std::string_view name) {
  for (MoveFamily f : kAllMoveFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::vector<MoveInstance> enumerate_move_instances(MoveFamily family) {
  std::vector<MoveInstance> out;
  for (const PicturePair& p : pictures(family)) {
    const std::size_t strands = p.left.strands.size();
    for (unsigned mask = 0; mask < (1u << strands); ++mask) {
      std::string orient;
      for (std::size_t i = 0; i < strands; ++i) orient += ((mask >> i) & 1u) ? '-' : '+';
      std::string id = std::string(family_name(family)) + "/" + (p.id.empty() ? "" : p.id + ",") + "orient=" + orient;
      out.push_back({family, std::move(id), realize(p.left, mask), realize(p.right, mask)});
    }
  }
  return out;
}

std::uint64_t BoundaryProfile::total() const {
  std::uint64_t t = 0;
  for (const auto& [k, c] : entries) t += c;
  return t;
}

BoundaryProfile boundary_profile(const Tangle& t, const ColoringRules& rules, std::uint64_t node_budget) {
  ColoringSolver solver(t, rules);
  BoundaryProfile profile;
  const std::size_t k = rules.carrier;
  const auto& in = t.boundary_in();
  const auto& out = t.boundary_out();
  std::vector<Elem> in_colors(in.size(), 0);
  std::vector<std::optional<Elem>> fixed(t.edge_count());
  for (;;) {
    std::fill(fixed.begin(), fixed.end(), std::nullopt);
    bool consistent = true;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (fixed[in[i]] && *fixed[in[i]] != in_colors[i]) consistent = false;
      fixed[in[i]] = in_colors[i];
    }
    if (consistent) {
      solver.solve(
          fixed,
          [&](std::span<const Elem> colors) {
            std::vector<Elem> oc(out.size());
            for (std::size_t i = 0; i < out.size(); ++i) oc[i] = colors[out[i]];
            ++profile.entries[{in_colors, std::move(oc)}];
          },
          node_budget);
    }
    std::size_t i = in.size();
    while (i > 0 && ++in_colors[i - 1] == k) in_colors[--i] = 0;
    if (i == 0) break;
  }
  return profile;
}

BoundaryProfile boundary_profile(const Tangle& t, const VTStructure& s) {
  return boundary_profile(t, ColoringRules::from(s));
}

Tangle glue(const Tangle& a, std::size_t out_index, const Tangle& b, std::size_t in_index) {
  if (out_index >= a.boundary_out().size() || in_index >= b.boundary_in().size())
    throw Error(ErrorKind::invalid_argument, "glue index outside the boundary");
  const EdgeId joined_a = a.boundary_out()[out_index];
  const EdgeId joined_b = b.boundary_in()[in_index];

  std::vector<std::string> names = a.edge_names();
  std::vector<EdgeId> remap(b.edge_count());
  for (EdgeId e = 0; e < b.edge_count(); ++e) {
    if (e == joined_b) {
      remap[e] = joined_a;
    } else {
      remap[e] = names.size();
      names.push_back("b:" + b.edge_name(e));
    }
  }
  std::vector<Node> nodes = a.nodes();
  for (Node n : b.nodes()) {
    for (std::size_t p = 0; p < n.arity(); ++p) n.ports[p] = remap[n.ports[p]];
    nodes.push_back(n);
  }
  std::vector<EdgeId> in = a.boundary_in(), out;
  for (std::size_t i = 0; i < b.boundary_in().size(); ++i)
    if (i != in_index) in.push_back(remap[b.boundary_in()[i]]);
  for (std::size_t i = 0; i < a.boundary_out().size(); ++i)
    if (i != out_index) out.push_back(a.boundary_out()[i]);
  for (EdgeId e : b.boundary_out()) out.push_back(remap[e]);
  return Tangle(std::move(names), std::move(nodes), std::move(in), std::move(out));
}

BoundaryProfile compose_profiles(const BoundaryProfile& a, std::size_t out_index, const BoundaryProfile& b,
                                 std::size_t in_index) {
  BoundaryProfile out;
  for (const auto& [ka, ca] : a.entries)
    for (const auto& [kb, cb] : b.entries) {
      if (ka.second.at(out_index) != kb.first.at(in_index)) continue;
      std::vector<Elem> in = ka.first, o;
      for (std::size_t i = 0; i < kb.first.size(); ++i)
        if (i != in_index) in.push_back(kb.first[i]);
      for (std::size_t i = 0; i < ka.second.size(); ++i)
        if (i != out_index) o.push_back(ka.second[i]);
      o.insert(o.end(), kb.second.begin(), kb.second.end());
      out.entries[{std::move(in), std::move(o)}] += ca * cb;
    }
  return out;
}

bool FamilyReport::pass() const {
  return std::all_of(variants.begin(), variants.end(), [](const VariantResult& v) { return v.pass; });
}

bool MoveReport::all_pass() const {
  return std::all_of(families.begin(), families.end(), [](const FamilyReport& f) { return f.pass(); });
}

std::vector<MoveFamily> MoveReport::failing_families() const {
  std::vector<MoveFamily> out;
  for (const auto& f : families)
    if (!f.pass()) out.push_back(f.family);
  return out;
}

namespace {

std::optional<ProfileMismatch> first_mismatch(const BoundaryProfile& l, const BoundaryProfile& r) {
  auto li = l.entries.begin(), ri = r.entries.begin();
  while (li != l.entries.end() || ri != r.entries.end()) {
    if (ri == r.entries.end() || (li != l.entries.end() && li->first < ri->first))
      return ProfileMismatch{li->first.first, li->first.second, li->second, 0};
    if (li == l.entries.end() || ri->first < li->first)
      return ProfileMismatch{ri->first.first, ri->first.second, 0, ri->second};
    if (li->second != ri->second) return ProfileMismatch{li->first.first, li->first.second, li->second, ri->second};
    ++li;
    ++ri;
  }
  return std::nullopt;
}

}  // namespace

MoveReport check_move_invariance(const ColoringRules& rules, const std::vector<MoveFamily>& families) {
  MoveReport report;
  for (MoveFamily f : families) {
    FamilyReport fr{f, {}};
    for (const MoveInstance& inst : enumerate_move_instances(f)) {
      auto mismatch = first_mismatch(boundary_profile(inst.left, rules), boundary_profile(inst.right, rules));
      fr.variants.push_back({inst.variant, !mismatch.has_value(), std::move(mismatch)});
    }
    report.families.push_back(std::move(fr));
  }
  return report;
}

MoveReport check_move_invariance(const VTStructure& s) { return check_move_invariance(ColoringRules::from(s)); }

}  // namespace twistcolor
