#include <doctest.h>

#include <numeric>

#include "twistcolor/quandle.hpp"

using namespace twistcolor;

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

}  // namespace

TEST_CASE("dihedral quandle table follows 2b - a") {
  for (std::size_t n = 1; n <= 9; ++n) {
    FiniteQuandle q = make_dihedral_quandle(n);
    CHECK(q.size() == n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) CHECK(q.op(a, b) == mod(2L * b - a, long(n)));
  }
}

TEST_CASE("trivial quandle of order one") {
  FiniteQuandle q = make_dihedral_quandle(1);
  CHECK(q.table() == std::vector<Elem>{0});
  CHECK(check_quandle(q).all_pass());
}

TEST_CASE("alexander quandle and unit check") {
  FiniteQuandle q = make_alexander_quandle(5, 3);
  for (Elem a = 0; a < 5; ++a)
    for (Elem b = 0; b < 5; ++b) CHECK(q.op(a, b) == mod(3L * a - 2L * b, 5));
  CHECK_THROWS_AS(make_alexander_quandle(6, 2), Error);
  CHECK_THROWS_AS(make_alexander_quandle(6, 3), Error);
  CHECK_NOTHROW(make_alexander_quandle(6, 5));
  CHECK(make_alexander_quandle(7, -1) == make_dihedral_quandle(7));
  CHECK_THROWS_AS(make_dihedral_quandle(0), Error);
}

TEST_CASE("constructor rejects bad shapes and ranges") {
  CHECK_THROWS_AS(FiniteQuandle(2, {0, 1, 1}), Error);
  CHECK_THROWS_AS(FiniteQuandle(2, {0, 2, 1, 1}), Error);
  CHECK_THROWS_AS(FiniteQuandle::from_rows({{0, 1}, {1}}), Error);
  try {
    FiniteQuandle(2, {0, 5, 1, 1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::malformed);
  }
}

TEST_CASE("library quandles satisfy the axioms") {
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(check_quandle(make_dihedral_quandle(n)).all_pass());
    for (long t = 1; t < long(n); ++t)
      if (std::gcd(t, long(n)) == 1) CHECK(check_quandle(make_alexander_quandle(n, t)).all_pass());
  }
}

TEST_CASE("check_quandle reports each axiom with a witness") {
  // Constant operation a*b = 0 breaks idempotency and right-invertibility.
  FiniteQuandle q(3, std::vector<Elem>(9, 0));
  AxiomReport r = check_quandle(q);
  REQUIRE(r.results().size() == 3);
  CHECK_FALSE(r.passed("idempotent"));
  CHECK(r.at("idempotent").witness == std::vector<Elem>{1});
  CHECK_FALSE(r.passed("right-invertible"));
  CHECK(r.at("right-invertible").witness.size() == 3);
  CHECK(r.passed("distributive"));

  // a*b = a+1 mod 3 is right-invertible and distributive but not idempotent.
  std::vector<Elem> t;
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) t.push_back((a + 1) % 3);
  AxiomReport r2 = check_quandle(FiniteQuandle(3, t));
  CHECK_FALSE(r2.passed("idempotent"));
  CHECK(r2.passed("right-invertible"));
  CHECK(r2.passed("distributive"));
}

TEST_CASE("non-distributive table is caught") {
  // Idempotent, right-invertible, not distributive.
  auto q = FiniteQuandle::from_rows({{0, 2, 1, 1}, {2, 1, 0, 0}, {1, 0, 2, 2}, {3, 3, 3, 3}});
  AxiomReport r = check_quandle(q);
  CHECK(r.passed("idempotent"));
  CHECK_FALSE(r.passed("distributive"));
  const auto& w = r.at("distributive").witness;
  REQUIRE(w.size() == 3);
  CHECK(q.op(q.op(w[0], w[1]), w[2]) != q.op(q.op(w[0], w[2]), q.op(w[1], w[2])));
}

TEST_CASE("dual operation inverts right multiplication") {
  FiniteQuandle q = make_alexander_quandle(7, 3);
  for (Elem a = 0; a < 7; ++a)
    for (Elem b = 0; b < 7; ++b) {
      CHECK(q.op(q.dual_op(a, b), b) == a);
      CHECK(q.dual_op(q.op(a, b), b) == a);
      // t^-1 = 5 mod 7
      CHECK(q.dual_op(a, b) == mod(5L * a + (1 - 5L) * b, 7));
    }
  CHECK(dual_quandle(dual_quandle(q)) == q);
  CHECK_THROWS_AS(FiniteQuandle(2, {0, 0, 0, 0}).dual_op(0, 0), Error);
}

TEST_CASE("involutory quandles are exactly those with t^2 = 1") {
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK(is_involutory(make_dihedral_quandle(n)));
    for (long t = 1; t < long(n); ++t)
      if (std::gcd(t, long(n)) == 1) CHECK(is_involutory(make_alexander_quandle(n, t)) == (t * t % long(n) == 1));
  }
  CHECK_FALSE(is_involutory(make_alexander_quandle(5, 3)));
  CHECK(dual_quandle(make_dihedral_quandle(5)) == make_dihedral_quandle(5));
}

TEST_CASE("words are evaluated left to right") {
  FiniteQuandle q = make_dihedral_quandle(7);
  // 1^{3 5} = (1*3)*5 = 5*5 = 5
  Word w{{3, 1}, {5, 1}};
  CHECK(eval_word(q, 1, w) == 5);
  CHECK(eval_word(q, 4, {}) == 4);
  // exponent -1 applies the dual
  FiniteQuandle a = make_alexander_quandle(5, 2);
  Word back{{3, 1}, {3, -1}};
  for (Elem x = 0; x < 5; ++x) CHECK(eval_word(a, x, back) == x);
}

TEST_CASE("alternating words") {
  Word w = alternating_word(2, 5, 2);
  REQUIRE(w.size() == 4);
  CHECK(w[0].element == 2);
  CHECK(w[1].element == 5);
  CHECK(w[2].element == 2);
  CHECK(w[3].element == 5);
  Word t = alternating_word(1, 0, 1, Elem{1});
  REQUIRE(t.size() == 3);
  CHECK(t[2].element == 1);
  CHECK(alternating_word(0, 1, 0).empty());

  // In a dihedral quandle x^{(y x)^k} = x + 2k (x - y) by direct expansion.
  FiniteQuandle q = make_dihedral_quandle(11);
  for (Elem x = 0; x < 11; ++x)
    for (Elem y = 0; y < 11; ++y)
      for (std::size_t k = 0; k < 4; ++k) {
        long expect = mod(long(x) + 2L * long(k) * (long(x) - long(y)), 11);
        CHECK(eval_word(q, x, alternating_word(y, x, k)) == expect);
      }
}

TEST_CASE("rows round trip") {
  FiniteQuandle q = make_alexander_quandle(5, 2);
  CHECK(FiniteQuandle::from_rows(q.rows()) == q);
}
