#include <doctest.h>

#include <set>

#include "twistcolor/laurent.hpp"

using namespace twistcolor;

namespace {

// A^{-6m} + (-1)^{m+1} (A^{-2m-2} + A^{-2m} + A^{-2m+2}), term by term.
LaurentPolynomial expanded(int m) {
  const int s = m % 2 == 1 ? 1 : -1;
  return LaurentPolynomial::monomial(1, -6 * m) + LaurentPolynomial::monomial(s, -2 * m - 2) +
         LaurentPolynomial::monomial(s, -2 * m) + LaurentPolynomial::monomial(s, -2 * m + 2);
}

}  // namespace

TEST_CASE("arithmetic drops zero coefficients") {
  auto a = LaurentPolynomial::monomial(3, -2) + LaurentPolynomial::constant(1);
  auto b = LaurentPolynomial::monomial(-3, -2);
  auto sum = a + b;
  CHECK(sum == LaurentPolynomial::constant(1));
  CHECK(sum.coefficients().size() == 1);
  CHECK((a - a).is_zero());
  CHECK((a - a).to_string() == "0");
  CHECK(LaurentPolynomial::monomial(0, 4).is_zero());
  auto sq = (LaurentPolynomial::monomial(1, 1) + LaurentPolynomial::monomial(1, -1)) *
            (LaurentPolynomial::monomial(1, 1) - LaurentPolynomial::monomial(1, -1));
  CHECK(sq == LaurentPolynomial::monomial(1, 2) - LaurentPolynomial::monomial(1, -2));
  CHECK(a.coefficient(-2) == 3);
  CHECK(a.coefficient(7) == 0);
}

TEST_CASE("formatting") {
  CHECK(LaurentPolynomial::monomial(1, 1).to_string() == "A");
  CHECK(LaurentPolynomial::monomial(-1, 3).to_string() == "-A^3");
  CHECK(LaurentPolynomial::monomial(2, -1).to_string() == "2*A^-1");
  CHECK((LaurentPolynomial::monomial(-2, 0) + LaurentPolynomial::monomial(1, 2)).to_string() == "-2 + A^2");
  BigInt big = BigInt(1) << 80;
  CHECK(LaurentPolynomial::constant(big).to_string() == big.str());
}

TEST_CASE("m-foil polynomial: first values") {
  CHECK(fm_twisted_jones_closed_form(1).to_string() == "A^-6 + A^-4 + A^-2 + 1");
  CHECK(fm_twisted_jones_closed_form(2).to_string() == "A^-12 - A^-6 - A^-4 - A^-2");
  CHECK(fm_twisted_jones_closed_form(3).to_string() == "A^-18 + A^-8 + A^-6 + A^-4");
  CHECK_THROWS_AS(fm_twisted_jones_closed_form(0), Error);
}

TEST_CASE("m-foil polynomial agrees with the term-by-term expansion and is injective") {
  std::set<std::string> seen;
  for (int m = 1; m <= 12; ++m) {
    LaurentPolynomial p = fm_twisted_jones_closed_form(std::size_t(m));
    CHECK(p == expanded(m));
    CHECK(p.coefficients().size() == 4);
    seen.insert(p.to_string());
  }
  CHECK(seen.size() == 12);
}
