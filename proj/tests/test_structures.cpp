#include <doctest.h>

#include <numeric>

#include "twistcolor/structures.hpp"

using namespace twistcolor;

namespace {

std::vector<FiniteQuandle> small_quandles() {
  std::vector<FiniteQuandle> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    out.push_back(make_dihedral_quandle(n));
    for (long t = 1; t < long(n); ++t)
      if (std::gcd(t, long(n)) == 1) out.push_back(make_alexander_quandle(n, t));
  }
  return out;
}

ElemMap shift_by(std::size_t n, std::size_t k) {
  ElemMap f(n);
  for (std::size_t x = 0; x < n; ++x) f[x] = Elem((x + k) % n);
  return f;
}

}  // namespace

TEST_CASE("standard twisted product matches its defining formula") {
  FiniteQuandle q = make_dihedral_quandle(3);
  VTStructure s = standard_twisted_product(q);
  CHECK(s.size() == 9);
  CHECK(s.pair_base() == 3);
  for (Elem a1 = 0; a1 < 3; ++a1)
    for (Elem b1 = 0; b1 < 3; ++b1)
      for (Elem a2 = 0; a2 < 3; ++a2)
        for (Elem b2 = 0; b2 < 3; ++b2) {
          Pair r = s.R()(encode_pair(a1, b1, 3), encode_pair(a2, b2, 3));
          CHECK(r.first == encode_pair(a2, q.op(b2, b1), 3));
          CHECK(r.second == encode_pair(q.op(a1, a2), b1, 3));
        }
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) CHECK(s.T()[encode_pair(a, b, 3)] == encode_pair(b, a, 3));
  CHECK(s.V() == PairMap::transposition(9));
}

TEST_CASE("standard twisted products are verified vt-structures") {
  for (const FiniteQuandle& q : small_quandles()) {
    VTStructure s = standard_twisted_product(q);
    CHECK(s.base().is_biquandle());
    CHECK(s.v_report().all_pass());
    CHECK(s.t_report().all_pass());
    CHECK(s.verified());
  }
}

TEST_CASE("standard twisted product is the general construction with f = g = id") {
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    FiniteQuandle q = make_dihedral_quandle(n);
    VTStructure general = twisted_product(derived_biquandle(q), identity_map(n), identity_map(n));
    VTStructure standard = standard_twisted_product(q);
    CHECK(general.R() == standard.R());
    CHECK(general.V() == standard.V());
    CHECK(general.T() == standard.T());
  }
}

TEST_CASE("twisted product biquandle is the direct product with the tau-conjugate") {
  Biquandle x0 = derived_biquandle(make_alexander_quandle(5, 2));
  Biquandle x = twisted_product_biquandle(x0);
  for (Elem u = 0; u < 25; ++u)
    for (Elem w = 0; w < 25; ++w) {
      auto [a1, b1] = decode_pair(u, 5);
      auto [a2, b2] = decode_pair(w, 5);
      Pair ra = x0(a1, a2);
      Pair rb = x0(b2, b1);
      CHECK(x(u, w) == Pair{encode_pair(ra.first, rb.second, 5), encode_pair(ra.second, rb.first, 5)});
    }
}

TEST_CASE("twisted product with automorphisms f and g") {
  Biquandle x0 = derived_biquandle(make_dihedral_quandle(4));
  const ElemMap f = shift_by(4, 2);
  VTStructure s = twisted_product(x0, f, identity_map(4));
  CHECK(s.verified());
  CHECK(s.pair_base() == 4);
  for (Elem u = 0; u < 16; ++u)
    for (Elem w = 0; w < 16; ++w) {
      auto [a1, b1] = decode_pair(u, 4);
      auto [a2, b2] = decode_pair(w, 4);
      // f is its own inverse here
      CHECK(s.V()(u, w) == Pair{encode_pair(f[a2], f[b2], 4), encode_pair(f[a1], f[b1], 4)});
    }

  // g = reflection x -> -x commutes with x+2 on Z/4.
  ElemMap g{0, 3, 2, 1};
  CHECK(twisted_product(x0, f, g).verified());
}

TEST_CASE("twisted product refuses f^2 != 1 or fg != gf") {
  Biquandle x0 = derived_biquandle(make_dihedral_quandle(5));
  const ElemMap f = shift_by(5, 1);  // order 5
  try {
    twisted_product(x0, f, identity_map(5));
    FAIL("expected precondition");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
  // The v-structure alone is still available.
  CHECK(twisted_product_v(x0, f).verified());

  Biquandle d3 = derived_biquandle(make_dihedral_quandle(3));
  const ElemMap refl{0, 2, 1};
  const ElemMap rot{1, 2, 0};
  try {
    twisted_product(d3, refl, rot);
    FAIL("expected precondition");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
  CHECK_THROWS_AS(twisted_product(derived_biquandle(make_dihedral_quandle(4)), ElemMap{1, 0, 2, 3}, identity_map(4)),
                  Error);
}

TEST_CASE("virtual_v squares to the identity for every automorphism") {
  for (std::size_t n : {3u, 4u, 5u}) {
    Biquandle x = derived_biquandle(make_dihedral_quandle(n));
    for (const auto& h : automorphisms(x)) {
      VStructuredBiquandle xv = virtual_v(x, h.map);
      CHECK(xv.V().after(xv.V()) == PairMap::identity(n));
      CHECK(xv.verified());
    }
  }
  Biquandle d4 = derived_biquandle(make_dihedral_quandle(4));
  try {
    virtual_v(d4, ElemMap{1, 0, 2, 3});
    FAIL("expected invalid_argument");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_argument);
  }
}

TEST_CASE("v-structure report catches broken V") {
  Biquandle x = derived_biquandle(make_dihedral_quandle(3));
  AxiomReport ok = check_v_structure(x, PairMap::transposition(3));
  CHECK(ok.all_pass());
  REQUIRE(ok.results().size() == 3);

  AxiomReport id = check_v_structure(x, PairMap::identity(3));
  CHECK_FALSE(id.passed(kVBiquandle));  // identity has no sideways bijection
  CHECK(id.passed(kVInvolution));

  // A 3-cycle on the first coordinate is not an involution.
  std::vector<Pair> v;
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) v.push_back({b, Elem((a + 1) % 3)});
  AxiomReport cyc = check_v_structure(x, PairMap(3, v));
  CHECK_FALSE(cyc.passed(kVInvolution));
  CHECK_FALSE(cyc.at(kVInvolution).witness.empty());
}

TEST_CASE("t-structure report catches broken T") {
  FiniteQuandle q = make_dihedral_quandle(3);
  VTStructure good = standard_twisted_product(q);
  AxiomReport r = check_t_structure(good.v_structured(), good.T());
  REQUIRE(r.results().size() == 4);
  CHECK(r.results()[0].name == kTInvolution);
  CHECK(r.results()[1].name == kTSlide);
  CHECK(r.results()[2].name == kTTwist);
  CHECK(r.results()[3].name == kTSlideDual);
  CHECK(r.all_pass());

  // T = identity keeps T^2 = 1 and the slides but breaks the twist relation.
  AxiomReport id = check_t_structure(good.v_structured(), identity_map(9));
  CHECK(id.passed(kTInvolution));
  CHECK(id.passed(kTSlide));
  CHECK_FALSE(id.passed(kTTwist));

  // A non-involutive T.
  ElemMap cyc(9);
  for (Elem x = 0; x < 9; ++x) cyc[x] = (x + 1) % 9;
  CHECK_FALSE(check_t_structure(good.v_structured(), cyc).passed(kTInvolution));
}

TEST_CASE("certificates reflect the reports") {
  VTStructure a = standard_twisted_product(make_dihedral_quandle(3));
  VTStructure b = standard_twisted_product(make_dihedral_quandle(5));
  VTStructure bad = remark_structure(make_alexander_quandle(5, 3));
  CHECK(a.certificate() == b.certificate());
  CHECK(a.certificate() != bad.certificate());
  CHECK_FALSE(bad.verified());
}

TEST_CASE("remark structure is a vt-structure exactly for involutory quandles") {
  for (const FiniteQuandle& q : small_quandles()) {
    RemarkComparison c = remark_counterexample(q);
    CHECK(c.equal == is_involutory(q));
    CHECK(c.witness.has_value() == !c.equal);
    VTStructure s = remark_structure(q);
    CHECK(s.base().is_biquandle());
    CHECK(s.v_report().all_pass());
    CHECK(s.t_report().passed(kTTwist) == is_involutory(q));
    if (c.witness) CHECK(c.lhs(c.witness->first, c.witness->second) != c.rhs(c.witness->first, c.witness->second));
  }
}

TEST_CASE("remark counterexample on alexander(5,3)") {
  FiniteQuandle q = make_alexander_quandle(5, 3);
  RemarkComparison c = remark_counterexample(q);
  CHECK_FALSE(c.equal);
  REQUIRE(c.witness.has_value());
  VTStructure s = remark_structure(q);
  CHECK(c.lhs == twist_conjugate(s.R(), s.T()));
  CHECK(c.rhs == v_conjugate(s.R(), s.V()));
}

TEST_CASE("twist and v conjugates") {
  VTStructure s = standard_twisted_product(make_dihedral_quandle(4));
  CHECK(twist_conjugate(s.R(), s.T()) == v_conjugate(s.R(), s.V()));
  CHECK(v_conjugate(s.R(), PairMap::transposition(16)) == s.R().conjugate_by_tau());
}
