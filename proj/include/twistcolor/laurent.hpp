#pragma once

#include <map>
#include <string>

#include "twistcolor/core.hpp"

namespace twistcolor {

/// Integer Laurent polynomial in one variable A. Zero coefficients are never
/// stored, so equal polynomials compare equal.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(const BigInt& coefficient, int exponent);
  static LaurentPolynomial constant(const BigInt& c) { return monomial(c, 0); }

  const std::map<int, BigInt>& coefficients() const noexcept { return terms_; }
  BigInt coefficient(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Ascending exponents, e.g. "A^-12 - A^-6 - A^-4 - A^-2"; "0" when empty.
  std::string to_string() const;

 private:
  void add_term(int exponent, const BigInt& c);
  std::map<int, BigInt> terms_;
};

/// A^{-2m} (A^{-4m} + (-1)^{m+1} (1 + A^2 + A^{-2})), expanded.
LaurentPolynomial fm_twisted_jones_closed_form(std::size_t m);

}  // namespace twistcolor
