#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"
#include "twistcolor/coloring.hpp"

using namespace twistcolor;

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

// Exhaustive count straight from the node relations.
std::uint64_t oracle_count(const TwistedDiagram& d, const ColoringRules& rules) {
  const std::size_t k = rules.carrier;
  const std::size_t e = d.edge_count();
  std::vector<Elem> c(e, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const Node& n : d.nodes()) {
      const auto& p = n.ports;
      switch (n.kind) {
        case NodeKind::positive:
          ok = rules.positive(c[p[0]], c[p[1]]) == Pair{c[p[2]], c[p[3]]};
          break;
        case NodeKind::negative:
          ok = rules.positive(c[p[2]], c[p[3]]) == Pair{c[p[0]], c[p[1]]};
          break;
        case NodeKind::virtual_crossing:
          ok = rules.virtual_crossing(c[p[0]], c[p[1]]) == Pair{c[p[2]], c[p[3]]};
          break;
        case NodeKind::bar:
          ok = (*rules.bar)[c[p[0]]] == c[p[1]];
          break;
      }
      if (!ok) break;
    }
    count += ok;
    std::size_t i = 0;
    while (i < e && ++c[i] == k) c[i++] = 0;
    if (i == e) break;
  }
  for (std::size_t l = 0; l < d.free_loops(); ++l) count *= k;
  return count;
}

// Delta membership for a dihedral quandle: x^{(yx)^m} = x + 2m(x - y).
bool dihedral_delta(long a, long b, long m, long n) {
  return mod(a + 2 * m * (a - b), n) == a && mod(b + 2 * m * (b - a), n) == b;
}

Elem power(const FiniteQuandle& q, Elem base, Elem u, Elem v, std::size_t reps) {
  for (std::size_t i = 0; i < reps; ++i) base = q.op(q.op(base, u), v);
  return base;
}

// Closure of the 2-braid sigma^3.
TwistedDiagram trefoil() { return parse_diagram("X+ a b c d\nX+ c d e f\nX+ e f a b\n"); }

}  // namespace

TEST_CASE("m-foil counts over B(dihedral 2m) are 4m^2") {
  for (std::size_t m = 1; m <= 5; ++m) {
    VTStructure s = standard_twisted_product(make_dihedral_quandle(2 * m));
    CHECK(count_colorings(make_fm(m), s).count == BigInt(4 * m * m));
  }
}

TEST_CASE("small spot values") {
  CHECK(count_colorings(make_fm(1), standard_twisted_product(make_dihedral_quandle(3))).count == 3);
  CHECK(count_colorings(make_fm(2), standard_twisted_product(make_dihedral_quandle(4))).count == 16);
  VTStructure b3 = standard_twisted_product(make_dihedral_quandle(3));
  CHECK(count_colorings(parse_diagram("O 1"), b3).count == 9);
  CHECK(count_colorings(parse_diagram("O 3"), b3).count == 729);
  CHECK(count_colorings(TwistedDiagram{}, b3).count == 1);
  // Single bar loop: fixed points of T(a,b) = (b,a).
  CHECK(count_colorings(parse_diagram("B p p"), b3).count == 3);
}

TEST_CASE("classical trefoil: Fox 3-colorings squared") {
  // Upper and lower colorings of a classical diagram are quandle colorings.
  FiniteQuandle d3 = make_dihedral_quandle(3);
  CHECK(upper_colorings(trefoil(), d3) == 9);
  CHECK(lower_colorings(trefoil(), d3) == 9);
  CHECK(count_colorings(trefoil(), standard_twisted_product(d3)).count == 81);
  CHECK(upper_colorings(trefoil(), make_dihedral_quandle(5)) == 5);
}

TEST_CASE("solver agrees with an independent exhaustive count on random diagrams") {
  const std::uint64_t seed = testsupport::seed();
  std::vector<ColoringRules> rules{
      ColoringRules::from(standard_twisted_product(make_dihedral_quandle(2))),
      ColoringRules::from(standard_twisted_product(make_dihedral_quandle(3))),
      ColoringRules::from(twisted_product(derived_biquandle(make_dihedral_quandle(3)), ElemMap{0, 2, 1},
                                          ElemMap{0, 2, 1})),
      ColoringRules::from(remark_structure(make_alexander_quandle(3, 2))),
  };
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    RandomDiagramOptions opts;
    opts.nodes = 1 + rng() % 3;
    opts.max_free_loops = 1;
    TwistedDiagram d = random_diagram(rng(), opts);
    for (const ColoringRules& r : rules) {
      const std::uint64_t expect = oracle_count(d, r);
      CHECK(count_colorings(d, r).count == expect);
      CHECK(brute_force_colorings(d, r) == expect);
    }
  }
}

TEST_CASE("emitted colorings satisfy the diagram and are distinct") {
  VTStructure s = standard_twisted_product(make_dihedral_quandle(4));
  TwistedDiagram d = add_free_loops(make_fm(2), 1);
  ColoringOptions opts;
  opts.emit = true;
  ColoringResult r = count_colorings(d, s, opts);
  CHECK(r.count == 16 * 16);
  REQUIRE(r.colorings.size() == 256);
  std::set<std::vector<Elem>> seen;
  for (const Coloring& c : r.colorings) {
    CHECK(satisfies(d, ColoringRules::from(s), c.edge_colors));
    CHECK(c.loop_colors.size() == 1);
    std::vector<Elem> key = c.edge_colors;
    key.insert(key.end(), c.loop_colors.begin(), c.loop_colors.end());
    seen.insert(key);
  }
  CHECK(seen.size() == 256);
}

TEST_CASE("unverified structures are refused unless forced") {
  VTStructure bad = remark_structure(make_alexander_quandle(5, 3));
  try {
    count_colorings(make_fm(1), bad);
    FAIL("expected axiom_violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::axiom_violation);
  }
  ColoringOptions force;
  force.force = true;
  CHECK_NOTHROW(count_colorings(make_fm(1), bad, force));
}

TEST_CASE("search and brute force caps raise resource errors") {
  VTStructure s = standard_twisted_product(make_dihedral_quandle(6));
  ColoringOptions tight;
  tight.node_budget = 3;
  try {
    count_colorings(parse_diagram("V a b c d\nV c d a b\n"), s, tight);
    FAIL("expected resource");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::resource);
  }
  try {
    brute_force_colorings(make_fm(5), s);
    FAIL("expected resource");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::resource);
  }
}

TEST_CASE("bars need a bar rule") {
  ColoringRules upper = ColoringRules::upper(make_dihedral_quandle(3));
  CHECK_THROWS_AS(count_colorings(make_fm(1), upper), Error);
  CHECK_THROWS_AS(upper_colorings(make_fm(1), make_dihedral_quandle(3)), Error);
}

TEST_CASE("counts are invariant under inserted moves") {
  const std::uint64_t seed = testsupport::seed();
  std::mt19937_64 rng(seed + 1);
  std::vector<VTStructure> structures{
      standard_twisted_product(make_dihedral_quandle(3)),
      standard_twisted_product(make_alexander_quandle(5, 2)),
      twisted_product(derived_biquandle(make_dihedral_quandle(4)), ElemMap{2, 3, 0, 1}, identity_map(4)),
  };
  for (int trial = 0; trial < 20; ++trial) {
    RandomDiagramOptions opts;
    opts.nodes = 1 + rng() % 4;
    TwistedDiagram d = random_diagram(rng(), opts);
    const std::string e = d.edge_name(rng() % d.edge_count());
    const int sign = rng() % 2 ? 1 : -1;
    const KinkSide side = rng() % 2 ? KinkSide::loop_on_first : KinkSide::loop_on_second;
    for (const VTStructure& s : structures) {
      const BigInt base = count_colorings(d, s).count;
      CHECK(count_colorings(add_kink(d, e, {sign, side}), s).count == base);
      CHECK(count_colorings(add_virtual_kink(d, e, side), s).count == base);
      CHECK(count_colorings(add_bar_pair(d, e), s).count == base);
    }
  }
}

TEST_CASE("delta sets match the dihedral closed form") {
  for (std::size_t n = 2; n <= 9; ++n)
    for (std::size_t m = 1; m <= 4; ++m) {
      DeltaSet ds = delta_set(make_dihedral_quandle(n), m);
      std::vector<Pair> expect;
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (dihedral_delta(a, b, long(m), long(n))) expect.push_back({a, b});
      CHECK(ds.members == expect);
      CHECK(ds.m == m);
    }
  CHECK(delta_set(make_dihedral_quandle(6), 3).size() == 36);
  CHECK_FALSE(delta_set(make_dihedral_quandle(7), 3).contains({1, 0}));
}

TEST_CASE("delta sets for alexander quandles follow the definition") {
  for (long t : {2L, 3L}) {
    FiniteQuandle q = make_alexander_quandle(5, t);
    for (std::size_t m = 1; m <= 4; ++m) {
      DeltaSet ds = delta_set(q, m);
      for (Elem a = 0; a < 5; ++a)
        for (Elem b = 0; b < 5; ++b) {
          const bool in = power(q, a, b, a, m) == a && power(q, b, a, b, m) == b;
          CHECK(ds.contains({a, b}) == in);
        }
    }
  }
}

TEST_CASE("coloring_from_delta is a bijection onto the solver colorings") {
  for (std::size_t n : {3u, 4u, 5u, 6u})
    for (std::size_t m = 1; m <= 4; ++m) {
      FiniteQuandle q = make_dihedral_quandle(n);
      VTStructure s = standard_twisted_product(q);
      const TwistedDiagram d = make_fm(m);
      ColoringOptions opts;
      opts.emit = true;
      ColoringResult r = count_colorings(d, s, opts);
      DeltaSet ds = delta_set(q, m);
      CHECK(r.count == ds.size());
      std::set<std::vector<Elem>> solver, built;
      for (const Coloring& c : r.colorings) solver.insert(c.edge_colors);
      for (Pair p : ds.members) {
        Coloring c = coloring_from_delta(q, m, p.first, p.second);
        CHECK(satisfies(d, ColoringRules::from(s), c.edge_colors));
        built.insert(c.edge_colors);
      }
      CHECK(built == solver);
    }
  FiniteQuandle d5 = make_dihedral_quandle(5);
  try {
    coloring_from_delta(d5, 2, 1, 0);
    FAIL("expected precondition");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
}

TEST_CASE("nonvirtual detection for odd dihedral quandles") {
  for (std::size_t m = 1; m <= 5; ++m) {
    NonvirtualVerdict v = detect_nonvirtual(make_fm(m), make_dihedral_quandle(2 * m + 1));
    CHECK(v.nonvirtual);
    CHECK(v.count == 2 * m + 1);
    CHECK(v.threshold == BigInt((2 * m + 1) * (2 * m + 1)));
  }
  // A virtual diagram (no bars) reaches the threshold for the trivial knot.
  NonvirtualVerdict loop = detect_nonvirtual(parse_diagram("O 1"), make_dihedral_quandle(5));
  CHECK_FALSE(loop.nonvirtual);
  CHECK(loop.count == 25);
}

TEST_CASE("product formula on bar-free diagrams") {
  std::vector<TwistedDiagram> corpus{parse_diagram("O 1"), parse_diagram("O 2"), trefoil()};
  for (std::size_t m = 1; m <= 4; ++m) corpus.push_back(remove_bars(make_fm(m)));
  corpus.push_back(add_virtual_kink(trefoil(), "a"));
  corpus.push_back(add_kink(remove_bars(make_fm(2)), "x", {-1, KinkSide::loop_on_first}));
  for (FiniteQuandle q : {make_dihedral_quandle(3), make_dihedral_quandle(5), make_alexander_quandle(5, 3)})
    for (const TwistedDiagram& d : corpus) {
      ProductFormulaCheck c = check_product_formula(d, q);
      CHECK(c.equal);
      CHECK(c.lhs == c.upper * c.lower);
    }
  CHECK_THROWS_AS(check_product_formula(make_fm(1), make_dihedral_quandle(3)), Error);
}

TEST_CASE("upper rules are the derived biquandle, lower its tau-conjugate") {
  FiniteQuandle q = make_alexander_quandle(5, 2);
  ColoringRules up = ColoringRules::upper(q), lo = ColoringRules::lower(q);
  for (Elem a = 0; a < 5; ++a)
    for (Elem b = 0; b < 5; ++b) {
      CHECK(up.positive(a, b) == Pair{b, q.op(a, b)});
      CHECK(lo.positive(a, b) == Pair{q.op(b, a), a});
    }
}
