#include "twistcolor/laurent.hpp"

namespace twistcolor {

LaurentPolynomial LaurentPolynomial::monomial(const BigInt& coefficient, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

BigInt LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPolynomial::add_term(int exponent, const BigInt& c) {
  if (c == 0) return;
  BigInt& slot = terms_[exponent];
  slot += c;
  if (slot == 0) terms_.erase(exponent);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += mag.str();
      continue;
    }
    if (mag != 1) s += mag.str() + "*";
    s += "A";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

LaurentPolynomial fm_twisted_jones_closed_form(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::invalid_argument, "m-foil needs m >= 1");
  const int mi = static_cast<int>(m);
  const BigInt sign = (m % 2 == 1) ? 1 : -1;  // (-1)^{m+1}
  LaurentPolynomial bracket = LaurentPolynomial::constant(1) + LaurentPolynomial::monomial(1, 2) +
                              LaurentPolynomial::monomial(1, -2);
  LaurentPolynomial inner = LaurentPolynomial::monomial(1, -4 * mi) + LaurentPolynomial::constant(sign) * bracket;
  return LaurentPolynomial::monomial(1, -2 * mi) * inner;
}

}  // namespace twistcolor
